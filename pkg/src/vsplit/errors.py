"""Exception hierarchy shared by the graph model, decompositions, and solvers."""


class VsplitError(Exception):
    """Base class for every error raised by this package."""


class GraphError(VsplitError):
    """Malformed graph data: self-loops, unknown vertices, bad file contents."""


# --- applying a vertex split ------------------------------------------------

class SplitError(VsplitError):
    """A split record cannot be applied to the graph at hand."""


class UnknownVertex(SplitError):
    pass


class CoverageViolation(SplitError):
    """The two sides together do not reproduce the target's neighborhood."""


class OverlapViolation(SplitError):
    """The sides of an exclusive split share a neighbor."""


class DuplicateDescendantId(SplitError):
    """A descendant name clashes with an existing vertex or its sibling."""


# --- edge decompositions ----------------------------------------------------

class DecompositionError(VsplitError):
    """An edge partition fails the decomposition contract."""


class EdgeNotCovered(DecompositionError):
    pass


class EdgeCoveredTwice(DecompositionError):
    pass


class PartNotConnected(DecompositionError):
    pass


class PartNotInFamily(DecompositionError):
    """A part is not a star (or not a cycle, depending on the family)."""


class IsolatedVertexInHost(DecompositionError):
    pass


# --- solver preconditions ---------------------------------------------------

class SolverError(VsplitError):
    pass


class NotACover(SolverError):
    """The supplied vertex set leaves some edge uncovered."""


class InconsistentSplit(SolverError):
    """The before/after graphs do not match the split record between them."""


class OddDegreeVertex(SolverError):
    pass


class IsolatedVertex(SolverError):
    pass


class Disconnected(SolverError):
    pass


class NoEdges(SolverError):
    pass


class TooManyOddVertices(SolverError):
    """More odd-degree vertices than the pairing step is willing to match."""


class WalkInvalid(SolverError):
    pass


class WalkTooShort(SolverError):
    """A closed walk of length 2 cannot be opened into a simple cycle."""


class CoverageGap(SolverError):
    """The supplied walks or trails miss at least one edge."""


class InvalidOct(SolverError):
    """The deletion set or the bipartition of the rest is not consistent."""


class FinalGraphNotBipartite(SolverError):
    pass


class InvalidSequence(SolverError):
    """A split sequence does not replay cleanly or ends in the wrong class."""


# --- resource limits --------------------------------------------------------

class BudgetExceeded(VsplitError):
    """An exact search hit its configured node or depth limit."""


class StateBudgetExceeded(BudgetExceeded):
    """The brute-force oracle visited more states than allowed."""


class OracleExceeded(VsplitError):
    """The oracle exhausted its split budget without reaching the target class."""

    def __init__(self, k_max: int):
        super().__init__(f"no solution within {k_max} splits")
        self.k_max = k_max
