"""Shared pytest configuration.

A hypothesis profile without deadlines: graph searches have highly variable
single-example runtimes (the first example after import pays for bytecode
warm-up), so wall-clock deadlines would make the property tests flaky on
slow machines.

The acceptance tests register one summary line each in CRITERION_LINES;
printing them from the terminal-summary hook keeps them visible under
pytest's output capture.
"""
from hypothesis import HealthCheck, settings

settings.register_profile(
    "suite",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")

CRITERION_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if CRITERION_LINES:
        terminalreporter.section("acceptance criteria")
        for line in CRITERION_LINES:
            terminalreporter.write_line(line)
