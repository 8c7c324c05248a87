"""Decomposability of two-qudit states and the primitive/entangling
classification of two-qudit gates.

A state in ``ℂᵈ ⊗ ℂᵈ`` is decomposable exactly when its ``d x d`` coefficient
matrix has rank one. A gate ``L`` is primitive exactly when ``L = L1 ⊗ L2`` or
``L = (L1 ⊗ L2) P`` with ``P`` the swap; otherwise some decomposable state is
mapped to an entangled one, and :func:`witness_search` looks for it.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .exceptions import DimensionError
from .linalg import RANK_TOL, as_matrix, as_vector, is_unitary, isqrt_exact, max_abs, numerical_rank
from .products import BlockPartition, PartitionedMatrix, swap_gate, tracy_singh


def coefficient_matrix(state) -> np.ndarray:
    """Entry ``(i, j)`` is the amplitude of ``e_i ⊗ e_j``."""
    v = as_vector(state)
    d = isqrt_exact(v.size)
    return v.reshape(d, d)


def schmidt_rank(state, rel_tol: float = RANK_TOL) -> int:
    return numerical_rank(coefficient_matrix(state), rel_tol)


def decompose_state(state, rel_tol: float = RANK_TOL) -> tuple[np.ndarray, np.ndarray] | None:
    """Unit vectors ``(α, β)`` with ``state = ‖state‖ α ⊗ β``, or ``None`` if
    the state is entangled."""
    m = coefficient_matrix(state)
    if numerical_rank(m, rel_tol) != 1:
        return None
    u, s, vh = np.linalg.svd(m)
    alpha = u[:, 0]
    beta = vh[0, :]
    return alpha, beta


def is_decomposable_state(state, rel_tol: float = RANK_TOL) -> bool:
    return decompose_state(state, rel_tol) is not None


def two_qubit_determinant(state) -> complex:
    """``α00 α11 - α01 α10``; zero exactly for decomposable two-qubit states."""
    a = coefficient_matrix(state)
    if a.shape != (2, 2):
        raise DimensionError("determinant criterion applies to two qubits only")
    return complex(a[0, 0] * a[1, 1] - a[0, 1] * a[1, 0])


def rearrange(L) -> np.ndarray:
    """Reshuffle with row ``(i,k)`` and column ``(j,l)`` holding ``L[(i,j),(k,l)]``.

    ``L = A ⊗ B`` exactly when this matrix is ``vec(A) vec(B)ᵀ`` (row-major vec).
    """
    L = as_matrix(L)
    if L.shape[0] != L.shape[1]:
        raise DimensionError("gate must be square")
    d = isqrt_exact(L.shape[0])
    return L.reshape(d, d, d, d).transpose(0, 2, 1, 3).reshape(d * d, d * d)


def kron_factor(L, rel_tol: float = RANK_TOL) -> tuple[np.ndarray, np.ndarray] | None:
    """Factors ``(L1, L2)`` with ``L = L1 ⊗ L2``, or ``None``.

    Normalisation: ``‖L1‖_F = ‖L2‖_F`` and the first non-zero entry of ``L1``
    (row-major) is real and positive.
    """
    L = as_matrix(L)
    r = rearrange(L)
    d = isqrt_exact(L.shape[0])
    if numerical_rank(r, rel_tol) != 1:
        return None
    u, s, vh = np.linalg.svd(r)
    scale = np.sqrt(s[0])
    left = (scale * u[:, 0]).reshape(d, d)
    right = (scale * vh[0, :]).reshape(d, d)
    flat = left.reshape(-1)
    lead = flat[np.argmax(np.abs(flat) > rel_tol * np.max(np.abs(flat)))]
    phase = lead / abs(lead)
    left = left / phase
    right = right * phase
    if max_abs(L - np.kron(left, right)) > rel_tol * max_abs(L):
        return None
    return left, right


@dataclass(frozen=True)
class GateClassification:
    verdict: str  # "primitive", "entangling" or "undetermined"
    local_dim: int
    factors: tuple[np.ndarray, np.ndarray] | None = None
    with_swap: bool = False
    witness: np.ndarray | None = None
    witness_image_rank: int | None = None
    is_gate: bool = True

    @property
    def primitive(self) -> bool:
        return self.verdict == "primitive"

    @property
    def entangling(self) -> bool:
        return self.verdict == "entangling"


def _basis(d: int, i: int) -> np.ndarray:
    e = np.zeros(d, dtype=np.complex128)
    e[i] = 1.0
    return e


def _candidates(d: int, strategy: str, seed: int) -> Iterator[np.ndarray]:
    if strategy not in ("sweep", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if strategy == "sweep":
        basis = [_basis(d, i) for i in range(d)]
        for i, j in itertools.product(range(d), repeat=2):
            yield np.kron(basis[i], basis[j])
        h = 1.0 / np.sqrt(2.0)
        for i, k in itertools.combinations(range(d), 2):
            for j in range(d):
                yield np.kron(h * (basis[i] + basis[k]), basis[j])
        for i in range(d):
            for j, l in itertools.combinations(range(d), 2):
                yield np.kron(basis[i], h * (basis[j] + basis[l]))
    rng = np.random.default_rng(seed)
    while True:
        a = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        b = rng.standard_normal(d) + 1j * rng.standard_normal(d)
        yield np.kron(a / np.linalg.norm(a), b / np.linalg.norm(b))


def witness_search(
    L,
    strategy: str = "sweep",
    seed: int = 0,
    budget: int | None = None,
    rel_tol: float = RANK_TOL,
) -> np.ndarray | None:
    """First decomposable state whose image under ``L`` is entangled.

    The sweep tries basis products, then products with one two-term
    superposition factor, then seeded random products; at most ``budget``
    candidates (default ``10 d⁴``) are examined.
    """
    L = as_matrix(L)
    d = isqrt_exact(L.shape[0])
    if budget is None:
        budget = 10 * d**4
    for phi in itertools.islice(_candidates(d, strategy, seed), budget):
        if schmidt_rank(L @ phi, rel_tol) >= 2:
            return phi
    return None


def classify_gate(
    L,
    unitary_required: bool = False,
    seed: int = 0,
    budget: int | None = None,
    rel_tol: float = RANK_TOL,
    witness_hint=None,
) -> GateClassification:
    """Primitive (with factors) or entangling (with a witness) verdict for ``L``.

    ``witness_hint`` is a decomposable state tried before the search; builders
    that know a witness by construction pass it to skip the sweep.
    """
    L = as_matrix(L)
    d = isqrt_exact(L.shape[0])
    is_gate = is_unitary(L)
    if unitary_required and not is_gate:
        raise ValueError("L is not unitary")
    factors = kron_factor(L, rel_tol)
    if factors is not None:
        return GateClassification("primitive", d, factors, False, is_gate=is_gate)
    factors = kron_factor(L @ swap_gate(d), rel_tol)
    if factors is not None:
        return GateClassification("primitive", d, factors, True, is_gate=is_gate)
    witness = None
    if witness_hint is not None:
        hint = as_vector(witness_hint)
        if is_decomposable_state(hint, rel_tol) and schmidt_rank(L @ hint, rel_tol) >= 2:
            witness = hint
    if witness is None:
        witness = witness_search(L, seed=seed, budget=budget, rel_tol=rel_tol)
    if witness is None:
        return GateClassification("undetermined", d, is_gate=is_gate)
    return GateClassification(
        "entangling",
        d,
        witness=witness,
        witness_image_rank=schmidt_rank(L @ witness, rel_tol),
        is_gate=is_gate,
    )


def reconstruction_error(L, result: GateClassification) -> float:
    """Max-abs error of ``L`` against its primitive factorisation."""
    if result.factors is None:
        raise ValueError("classification carries no factors")
    approx = np.kron(*result.factors)
    if result.with_swap:
        approx = approx @ swap_gate(result.local_dim)
    return max_abs(as_matrix(L) - approx)


def _column_partitioned(state) -> PartitionedMatrix:
    v = as_vector(state)
    n = isqrt_exact(v.size)
    return PartitionedMatrix(v.reshape(-1, 1), BlockPartition((n,) * n, (1,)))


def state_tracy_singh(phi, psi) -> np.ndarray:
    """``φ ⊠ ψ`` with ``φ`` in ``n`` blocks of length ``n`` and ``ψ`` in ``m``
    blocks of length ``m``; a state of ``(ℂ^{nm})⊗2``."""
    return tracy_singh(_column_partitioned(phi), _column_partitioned(psi)).matrix.reshape(-1)


def product_witness(c_witness, psi, rel_tol: float = RANK_TOL) -> np.ndarray:
    """Decomposable input ``φ ⊠ ψ`` for ``c ⊠ d`` built from a witness ``φ`` of ``c``."""
    if not is_decomposable_state(c_witness, rel_tol) or not is_decomposable_state(psi, rel_tol):
        raise ValueError("both inputs must be decomposable states")
    return state_tracy_singh(c_witness, psi)
