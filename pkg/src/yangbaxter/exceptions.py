"""Exception types raised across the package."""


class DimensionError(ValueError):
    """Shapes are incompatible with the requested operation."""


class SingularMatrixError(ValueError):
    """A matrix is numerically singular."""


class PartitionError(ValueError):
    """A block partition does not match the matrix it is attached to."""


class PermutationError(ValueError):
    """A permutation table is not a bijection."""


class ResourceLimitError(RuntimeError):
    """A construction would exceed the configured dimension cap."""


class InvariantViolation(RuntimeError):
    """An internal consistency check failed; this indicates a bug."""
