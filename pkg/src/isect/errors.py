"""Exception types shared across the package."""


class IsectError(Exception):
    """Base class for all package-specific errors."""


class MalformedModel(IsectError):
    """A geometric model violates its representation invariants."""


class NotStrict(MalformedModel):
    """An operation requires a strict model (distinct integer endpoints)."""


class NotAPermutation(MalformedModel):
    """A sequence expected to be a permutation of 1..n is not one."""


class SharedEndpoint(MalformedModel):
    """Endpoints that must be pairwise distinct coincide."""


class BadParams(IsectError):
    """Generator or query parameters outside their documented domain."""


class DisconnectedGraph(IsectError):
    """The operation is only defined for connected graphs."""


class UndefinedForDisconnected(IsectError):
    """The requested quantity does not exist because of unreachability."""


class InstanceTooLarge(IsectError):
    """A brute-force oracle was asked to exceed its size cap."""


class NotSubgraph(IsectError):
    """A claimed subgraph contains edges absent from the host graph."""


class NotChordal(IsectError):
    """The operation requires a chordal input graph."""


class NodeBudgetExceeded(IsectError):
    """A tree enumeration outgrew its configured node budget."""


class SizeBudgetExceeded(IsectError):
    """An iterated construction outgrew its configured size budget."""


class EmptyGraph(IsectError):
    """The operation is undefined on a graph with no edges or no vertices."""


class DimensionMismatch(IsectError):
    """Boxes in one model do not share a common dimension."""


class InfeasibleProblem(IsectError):
    """The instance admits no feasible solution for the requested problem."""


class SchemaError(IsectError):
    """A model file does not match the expected JSON shape."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


class ValidationError(IsectError):
    """A model file is well-formed JSON but semantically invalid."""
