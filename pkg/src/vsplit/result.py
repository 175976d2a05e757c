"""Solver result container shared by all four target classes."""
from __future__ import annotations

from dataclasses import dataclass, field

from .splits import SplitSequence


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a minimum-splits computation.

    When feasible, `certificate` replays to a member of `graph_class` and has
    exactly `min_splits` steps; `provenance` names the construction that
    produced each step.  Infeasible results carry a human-readable `reason`.
    Isolated vertices that were set aside before solving are listed in
    `isolated_vertices` (they are part of the certificate's base graph and are
    left untouched by every step).
    """

    graph_class: str
    variant: str
    feasible: bool
    min_splits: int | None
    certificate: SplitSequence | None
    provenance: tuple[str, ...] = ()
    isolated_vertices: tuple[str, ...] = field(default=())
    reason: str | None = None
