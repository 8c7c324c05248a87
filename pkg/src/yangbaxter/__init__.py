"""Numerical tools for the matrix Yang-Baxter equation: R-matrix
certification, Kronecker and Tracy-Singh products, set-theoretic solutions,
and the primitive/entangling classification of two-qudit gates."""

__version__ = "0.1.0"

from .entanglement import (  # noqa: E402
    GateClassification,
    classify_gate,
    decompose_state,
    is_decomposable_state,
    kron_factor,
    schmidt_rank,
    witness_search,
)
from .exceptions import (  # noqa: E402
    DimensionError,
    InvariantViolation,
    PartitionError,
    PermutationError,
    ResourceLimitError,
    SingularMatrixError,
)
from .factory import GateCertificate, entangling_gate, prime_factorize, primitive_gate  # noqa: E402
from .products import (  # noqa: E402
    BlockPartition,
    PartitionedMatrix,
    box,
    commutation_matrix,
    kronecker,
    tracy_singh,
)
from .settheory import (  # noqa: E402
    StSolution,
    cyclic_prime,
    enumerate_involutive,
    permutation_solution,
    square_free_prime,
    to_matrix,
)
from .ybe import RMatrixCertificate, box_r, certify, ybe_residual  # noqa: E402

__all__ = [
    "GateClassification",
    "classify_gate",
    "decompose_state",
    "is_decomposable_state",
    "kron_factor",
    "schmidt_rank",
    "witness_search",
    "DimensionError",
    "InvariantViolation",
    "PartitionError",
    "PermutationError",
    "ResourceLimitError",
    "SingularMatrixError",
    "GateCertificate",
    "entangling_gate",
    "prime_factorize",
    "primitive_gate",
    "BlockPartition",
    "PartitionedMatrix",
    "box",
    "commutation_matrix",
    "kronecker",
    "tracy_singh",
    "StSolution",
    "cyclic_prime",
    "enumerate_involutive",
    "permutation_solution",
    "square_free_prime",
    "to_matrix",
    "RMatrixCertificate",
    "box_r",
    "certify",
    "ybe_residual",
]
