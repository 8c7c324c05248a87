"""Dense complex matrix helpers.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Every public
function here is pure and returns a fresh array.
"""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

from .exceptions import DimensionError, PermutationError, SingularMatrixError

DEFAULT_TOL = 1e-10
RANK_TOL = 1e-8
SINGULAR_TOL = 1e-12


def as_matrix(a) -> np.ndarray:
    """Return ``a`` as a finite 2-D complex array."""
    m = np.array(a, dtype=np.complex128)
    if m.ndim == 1:
        m = m.reshape(-1, 1)
    if m.ndim != 2 or m.shape[0] == 0 or m.shape[1] == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_vector(v) -> np.ndarray:
    x = np.array(v, dtype=np.complex128).reshape(-1)
    if x.size == 0:
        raise DimensionError("empty vector")
    if not np.all(np.isfinite(x)):
        raise ValueError("vector entries must be finite")
    return x


def isqrt_exact(n: int) -> int:
    """Integer square root of ``n``; raises if ``n`` is not a perfect square."""
    r = math.isqrt(n)
    if r * r != n:
        raise DimensionError(f"{n} is not a perfect square")
    return r


def identity(n: int) -> np.ndarray:
    return np.eye(n, dtype=np.complex128)


def matmul(a, b) -> np.ndarray:
    a = np.asarray(a)
    b = np.asarray(b)
    if a.shape[-1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def adjoint(a) -> np.ndarray:
    return np.conj(np.asarray(a)).T.copy()


def singular_values(a) -> np.ndarray:
    """Singular values in descending order (length ``min(rows, cols)``)."""
    return np.linalg.svd(np.asarray(a, dtype=np.complex128), compute_uv=False)


def numerical_rank(a, rel_tol: float = RANK_TOL) -> int:
    """Number of singular values at least ``rel_tol`` times the largest one."""
    if not 0.0 < rel_tol < 1.0:
        raise ValueError("rel_tol must lie in (0, 1)")
    s = singular_values(a)
    if s.size == 0 or s[0] == 0.0:
        return 0
    return int(np.count_nonzero(s >= rel_tol * s[0]))


def inverse(a) -> np.ndarray:
    a = as_matrix(a)
    if a.shape[0] != a.shape[1]:
        raise DimensionError("only square matrices can be inverted")
    s = singular_values(a)
    if s[0] == 0.0 or s[-1] < SINGULAR_TOL * s[0]:
        raise SingularMatrixError("matrix is numerically singular")
    return np.linalg.solve(a, identity(a.shape[0]))


def max_abs(a) -> float:
    a = np.asarray(a)
    return float(np.max(np.abs(a))) if a.size else 0.0


def is_unitary(a, tol: float = DEFAULT_TOL) -> bool:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        return False
    return max_abs(a @ adjoint(a) - np.eye(a.shape[0])) <= tol


def check_permutation(perm: Sequence[int], n: int | None = None) -> tuple[int, ...]:
    """Validate a 0-based image table and return it as a tuple."""
    table = tuple(int(x) for x in perm)
    if n is None:
        n = len(table)
    if len(table) != n or sorted(table) != list(range(n)):
        raise PermutationError(f"{list(perm)} is not a permutation of 0..{n - 1}")
    return table


def permutation_matrix(perm: Sequence[int], n: int | None = None) -> np.ndarray:
    """Matrix sending ``e_j`` to ``e_perm[j]`` (0-based table)."""
    table = check_permutation(perm, n)
    m = np.zeros((len(table), len(table)), dtype=np.complex128)
    m[list(table), list(range(len(table)))] = 1.0
    return m


def parse_cycles(text: str, n: int) -> tuple[int, ...]:
    """Parse 1-based cycle notation such as ``"(1,2)(3,4)"`` into a 0-based table.

    An empty string or ``"()"`` is the identity.
    """
    table = list(range(n))
    body = text.replace(" ", "")
    if body in ("", "()", "id", "Id"):
        return tuple(table)
    if not (body.startswith("(") and body.endswith(")")):
        raise PermutationError(f"malformed cycle notation {text!r}")
    seen: set[int] = set()
    for chunk in body[1:-1].split(")("):
        points = [int(p) - 1 for p in chunk.split(",") if p]
        for p in points:
            if not 0 <= p < n or p in seen:
                raise PermutationError(f"bad point {p + 1} in {text!r}")
            seen.add(p)
        for src, dst in zip(points, points[1:] + points[:1]):
            table[src] = dst
    return tuple(table)


def invert_permutation(perm: Sequence[int]) -> tuple[int, ...]:
    table = check_permutation(perm)
    inv = [0] * len(table)
    for i, v in enumerate(table):
        inv[v] = i
    return tuple(inv)
