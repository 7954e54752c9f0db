"""Exception hierarchy for the chordalg engine."""


class ChordAlgError(Exception):
    """Base class for all engine errors."""


class StructuralError(ChordAlgError):
    """Malformed combinatorial data: dangling half-edge, wrong valence,
    dashed component without an external vertex."""


class ArgumentError(ChordAlgError, ValueError):
    """Invalid argument to an operation (bad index, arity mismatch, ...)."""


class CapacityError(ChordAlgError):
    """Requested computation exceeds a configured enumeration cap."""


class CompositionError(ChordAlgError):
    """Boundary words of adjacent tangle slices do not match."""


class PreconditionError(ChordAlgError):
    """A documented precondition does not hold (e.g. nonzero linking matrix)."""


class SolverError(ChordAlgError):
    """An exact linear system that should be consistent is not; indicates a
    convention bug rather than a recoverable condition."""


class NumericError(ChordAlgError):
    """Non-invertible normalizer or similar exact-arithmetic failure."""
