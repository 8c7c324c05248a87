"""Yang-Baxter residuals, R-matrix certificates, and the operations that
produce new R-matrices from old ones."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import DimensionError, InvariantViolation, ResourceLimitError
from .linalg import (
    DEFAULT_TOL,
    SINGULAR_TOL,
    as_matrix,
    identity,
    inverse,
    is_unitary,
    isqrt_exact,
    max_abs,
    singular_values,
)
from .products import PartitionedMatrix, box, canonical_partition, swap_gate, tracy_singh

# Full triple-space check up to this local dimension; spot check above it.
VERIFY_CAP = 16
# Largest local dimension a product chain may construct.
CONSTRUCT_CAP = 64
SPOT_VECTORS = 32

_CHUNK = 512


def _local_dim(c: np.ndarray, n: int | None) -> int:
    if c.shape[0] != c.shape[1]:
        raise DimensionError("an R-matrix must be square")
    if n is None:
        return isqrt_exact(c.shape[0])
    if n * n != c.shape[0]:
        raise DimensionError(f"matrix of size {c.shape[0]} does not act on (C^{n})⊗2")
    return n


def _as_operator(c) -> np.ndarray:
    c = as_matrix(c)
    # Real input keeps real arithmetic; exact 0/1 matrices stay exact either way.
    return c.real.copy() if not np.any(c.imag) else c


def lift12(c, n: int | None = None) -> np.ndarray:
    """``c ⊗ I_n``."""
    c = as_matrix(c)
    n = _local_dim(c, n)
    return np.kron(c, identity(n))


def lift23(c, n: int | None = None) -> np.ndarray:
    """``I_n ⊗ c``."""
    c = as_matrix(c)
    n = _local_dim(c, n)
    return np.kron(identity(n), c)


def _apply12(c: np.ndarray, x: np.ndarray, n: int) -> np.ndarray:
    k = x.shape[1]
    return (c @ x.reshape(n * n, n * k)).reshape(n**3, k)


def _apply23(c: np.ndarray, x: np.ndarray, n: int) -> np.ndarray:
    k = x.shape[1]
    return np.matmul(c, x.reshape(n, n * n, k)).reshape(n**3, k)


def _both_sides_on(c: np.ndarray, x: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    lhs = _apply12(c, _apply23(c, _apply12(c, x, n), n), n)
    rhs = _apply23(c, _apply12(c, _apply23(c, x, n), n), n)
    return lhs, rhs


def ybe_sides(c, n: int | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Dense triple products ``(c12 c23 c12, c23 c12 c23)``, each evaluated
    left to right. Intended for small matrices where entries are inspected."""
    c = as_matrix(c)
    n = _local_dim(c, n)
    c12 = lift12(c, n)
    c23 = lift23(c, n)
    return (c12 @ c23) @ c12, (c23 @ c12) @ c23


def ybe_residual(c, n: int | None = None) -> float:
    """Max-abs entry of ``c12 c23 c12 - c23 c12 c23``.

    Both sides are applied to blocks of identity columns without forming the
    lifted matrices, so memory stays at a few ``n³ x 512`` blocks.
    """
    c = _as_operator(c)
    n = _local_dim(c, n)
    size = n**3
    worst = 0.0
    for start in range(0, size, _CHUNK):
        stop = min(size, start + _CHUNK)
        block = np.zeros((size, stop - start), dtype=c.dtype)
        block[np.arange(start, stop), np.arange(stop - start)] = 1.0
        lhs, rhs = _both_sides_on(c, block, n)
        worst = max(worst, max_abs(lhs - rhs))
    return worst


def ybe_spot_residual(c, n: int | None = None, vectors: int = SPOT_VECTORS, seed: int = 0) -> float:
    """Max-abs discrepancy of both sides applied to seeded random unit vectors."""
    c = as_matrix(c)
    n = _local_dim(c, n)
    rng = np.random.default_rng(seed)
    x = rng.standard_normal((n**3, vectors)) + 1j * rng.standard_normal((n**3, vectors))
    x /= np.linalg.norm(x, axis=0)
    lhs, rhs = _both_sides_on(c, x, n)
    return max_abs(lhs - rhs)


def block_condition_residual(c, n: int | None = None) -> float:
    """Worst violation of ``c (B_ik⊗I) c = Σ_l (B_il⊗I) c (B_lk⊗I)`` over all
    block positions of the canonical partition."""
    c = as_matrix(c)
    n = _local_dim(c, n)
    pm = canonical_partition(c)
    lifted = [[np.kron(pm.block(i, k), identity(n)) for k in range(n)] for i in range(n)]
    worst = 0.0
    for i in range(n):
        for k in range(n):
            left = c @ lifted[i][k] @ c
            right = sum(lifted[i][l] @ c @ lifted[l][k] for l in range(n))
            worst = max(worst, max_abs(left - right))
    return worst


@dataclass(frozen=True)
class RMatrixCertificate:
    matrix: np.ndarray
    local_dim: int
    ybe_residual: float
    invertible: bool
    unitary: bool
    tolerance: float
    method: str = "full"  # "full" or "spot"

    @property
    def valid(self) -> bool:
        return self.invertible and self.ybe_residual <= self.tolerance


def _is_invertible(c: np.ndarray) -> bool:
    s = singular_values(c)
    return bool(s[0] > 0.0 and s[-1] >= SINGULAR_TOL * s[0])


def certify(
    c,
    n: int | None = None,
    tol: float = DEFAULT_TOL,
    verify_cap: int = VERIFY_CAP,
    seed: int = 0,
) -> RMatrixCertificate:
    """Measure the YBE residual, invertibility and unitarity of ``c``.

    Failures are recorded in the certificate, never raised.
    """
    c = as_matrix(c)
    n = _local_dim(c, n)
    if n <= verify_cap:
        residual, method = ybe_residual(c, n), "full"
    else:
        residual, method = ybe_spot_residual(c, n, seed=seed), "spot"
    return RMatrixCertificate(
        matrix=c,
        local_dim=n,
        ybe_residual=residual,
        invertible=_is_invertible(c),
        unitary=is_unitary(c, tol),
        tolerance=tol,
        method=method,
    )


def _require_valid(cert: RMatrixCertificate) -> None:
    if not cert.valid:
        raise ValueError(
            f"input is not a certified R-matrix (residual {cert.ybe_residual:.3g}, "
            f"invertible={cert.invertible})"
        )


def transform(cert: RMatrixCertificate, kind: str, scalar: complex = 1.0) -> np.ndarray:
    """Apply one of the solution-preserving maps ``λc``, ``c⁻¹`` or ``τ c τ``."""
    _require_valid(cert)
    c = cert.matrix
    if kind == "scalar":
        if scalar == 0:
            raise ValueError("scalar must be non-zero")
        return scalar * c
    if kind == "inverse":
        return inverse(c)
    if kind == "flip_conjugate":
        tau = swap_gate(cert.local_dim)
        return tau @ c @ tau
    raise ValueError(f"unknown transform {kind!r}")


def isomorphic_check(c, c_other, mu, tol: float = DEFAULT_TOL) -> bool:
    """True when ``c_other (μ⊗μ) = (μ⊗μ) c`` within ``tol``."""
    c = as_matrix(c)
    c_other = as_matrix(c_other)
    mu = as_matrix(mu)
    inverse(mu)  # raises on singular mu
    if c.shape != c_other.shape or mu.shape[0] ** 2 != c.shape[0]:
        raise DimensionError("incompatible sizes")
    mm = np.kron(mu, mu)
    return max_abs(c_other @ mm - mm @ c) <= tol


def box_r(
    c: RMatrixCertificate,
    d: RMatrixCertificate,
    verify_cap: int = VERIFY_CAP,
    construct_cap: int = CONSTRUCT_CAP,
    seed: int = 0,
) -> RMatrixCertificate:
    """Certified Tracy-Singh product of two R-matrices (canonical partitions)."""
    _require_valid(c)
    _require_valid(d)
    dim = c.local_dim * d.local_dim
    if dim > construct_cap:
        raise ResourceLimitError(f"local dimension {dim} exceeds cap {construct_cap}")
    tol = max(c.tolerance, d.tolerance)
    product = box(c.matrix, d.matrix)
    cert = certify(product, dim, tol, verify_cap=verify_cap, seed=seed)
    if not cert.valid:
        raise InvariantViolation(
            f"Tracy-Singh product failed certification (residual {cert.ybe_residual:.3g})"
        )
    if c.unitary and d.unitary and not cert.unitary:
        raise InvariantViolation("product of unitary R-matrices is not unitary")
    return cert


def iterate_family(
    c: RMatrixCertificate,
    d: RMatrixCertificate,
    k: int,
    l: int,
    verify_cap: int = VERIFY_CAP,
    construct_cap: int = CONSTRUCT_CAP,
    seed: int = 0,
) -> RMatrixCertificate:
    """Left-associated ``c ⊠ … ⊠ c ⊠ d ⊠ … ⊠ d`` with ``k`` copies of ``c``
    followed by ``l`` copies of ``d``."""
    if k < 0 or l < 0 or k + l < 1:
        raise ValueError("need k, l >= 0 with k + l >= 1")
    _require_valid(c)
    _require_valid(d)
    dim = c.local_dim**k * d.local_dim**l
    if dim > construct_cap:
        raise ResourceLimitError(f"local dimension {dim} exceeds cap {construct_cap}")
    factors = [c] * k + [d] * l
    if len(factors) == 1:
        return factors[0]
    acc = factors[0].matrix
    for f in factors[1:]:
        acc = box(acc, f.matrix)
    tol = max(c.tolerance, d.tolerance)
    cert = certify(acc, dim, tol, verify_cap=verify_cap, seed=seed)
    if not cert.valid:
        raise InvariantViolation(
            f"iterated product failed certification (residual {cert.ybe_residual:.3g})"
        )
    return cert


def noncanonical_box(c: PartitionedMatrix, d: PartitionedMatrix) -> tuple[np.ndarray, float]:
    """Tracy-Singh product under arbitrary partitions, with its YBE residual."""
    product = tracy_singh(c, d).matrix
    return product, ybe_residual(product)
