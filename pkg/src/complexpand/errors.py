"""Exception types shared across the library."""


class UnknownVertex(ValueError):
    """A face, edge or vertex argument mentions a label outside the universe."""


class FaceNotInComplex(ValueError):
    """The face argument is not a face of the complex."""


class VertexNotInComplex(ValueError):
    """The vertex is in the universe but belongs to no face of the complex."""


class VoidComplex(ValueError):
    """The operation requires a nonvoid complex (the void complex has no faces,
    not even the empty one)."""


class InvalidExpansionVector(ValueError):
    """Copy counts must assign an integer >= 1 to every universe vertex."""


class NotAPermutation(ValueError):
    """The given order is not a permutation of the expected items."""


class NotAShelling(ValueError):
    """The given facet order is not a shelling."""


class NotPureOneDimensional(ValueError):
    """The operation is only defined for pure 1-dimensional complexes."""


class NotShellable(ValueError):
    """No shelling exists, but the operation requires one."""


class TooLarge(ValueError):
    """The instance exceeds a configured size cap."""


class BudgetExceeded(RuntimeError):
    """A search/node budget ran out before a decision was reached; the answer
    is unknown, not false."""
