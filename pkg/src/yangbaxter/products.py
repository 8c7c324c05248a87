"""Kronecker and Tracy-Singh products, commutation matrices, and the
permutation conjugations relating the two products.

The Tracy-Singh product of ``A = (A_ij)`` and ``B = (B_kl)`` is the block
matrix ``((A_ij ⊗ B_kl)_kl)_ij``. Every entry of it is an entry of ``A ⊗ B``,
so it is computed here as a row/column re-indexing of the Kronecker product:
no arithmetic beyond the pairwise entry products.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .exceptions import DimensionError, PartitionError
from .linalg import as_matrix, identity, isqrt_exact


@dataclass(frozen=True)
class BlockPartition:
    row_blocks: tuple[int, ...]
    col_blocks: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(int(b) for b in self.row_blocks)
        cols = tuple(int(b) for b in self.col_blocks)
        if not rows or not cols or min(rows) <= 0 or min(cols) <= 0:
            raise PartitionError("block sizes must be positive and non-empty")
        object.__setattr__(self, "row_blocks", rows)
        object.__setattr__(self, "col_blocks", cols)

    @property
    def shape(self) -> tuple[int, int]:
        return sum(self.row_blocks), sum(self.col_blocks)

    @classmethod
    def single(cls, rows: int, cols: int) -> "BlockPartition":
        return cls((rows,), (cols,))

    @classmethod
    def parse(cls, text: str) -> "BlockPartition":
        """Parse ``"2,2/1,2,1"`` (row sizes / column sizes)."""
        try:
            rows, cols = text.split("/")
            return cls(
                tuple(int(x) for x in rows.split(",")),
                tuple(int(x) for x in cols.split(",")),
            )
        except ValueError as exc:
            raise PartitionError(f"malformed partition {text!r}") from exc


@dataclass(frozen=True)
class PartitionedMatrix:
    matrix: np.ndarray
    partition: BlockPartition

    def __post_init__(self):
        m = as_matrix(self.matrix)
        if m.shape != self.partition.shape:
            raise PartitionError(
                f"partition {self.partition.row_blocks}/{self.partition.col_blocks} "
                f"does not fit a {m.shape[0]}x{m.shape[1]} matrix"
            )
        m.setflags(write=False)
        object.__setattr__(self, "matrix", m)

    @classmethod
    def unpartitioned(cls, a) -> "PartitionedMatrix":
        m = as_matrix(a)
        return cls(m, BlockPartition.single(*m.shape))

    def block(self, i: int, j: int) -> np.ndarray:
        r0 = sum(self.partition.row_blocks[:i])
        c0 = sum(self.partition.col_blocks[:j])
        return self.matrix[
            r0 : r0 + self.partition.row_blocks[i], c0 : c0 + self.partition.col_blocks[j]
        ]


def kronecker(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def _ts_index(outer: Sequence[int], inner: Sequence[int]) -> np.ndarray:
    """Kronecker-product index of every Tracy-Singh position along one axis."""
    inner_size = sum(inner)
    a_off = np.concatenate(([0], np.cumsum(outer)[:-1]))
    b_off = np.concatenate(([0], np.cumsum(inner)[:-1]))
    idx = []
    for ai, asz in zip(a_off, outer):
        for bi, bsz in zip(b_off, inner):
            a_rows = np.arange(ai, ai + asz)
            b_rows = np.arange(bi, bi + bsz)
            idx.append((a_rows[:, None] * inner_size + b_rows[None, :]).reshape(-1))
    return np.concatenate(idx)


def tracy_singh(a: PartitionedMatrix, b: PartitionedMatrix) -> PartitionedMatrix:
    """Tracy-Singh product of two partitioned matrices.

    The result carries the partition into the blocks ``A_ij ⊗ B_kl``, which
    is what nested products need for associativity.
    """
    pa, pb = a.partition, b.partition
    rows = _ts_index(pa.row_blocks, pb.row_blocks)
    cols = _ts_index(pa.col_blocks, pb.col_blocks)
    k = np.kron(a.matrix, b.matrix)
    partition = BlockPartition(
        tuple(r * s for r in pa.row_blocks for s in pb.row_blocks),
        tuple(c * t for c in pa.col_blocks for t in pb.col_blocks),
    )
    return PartitionedMatrix(k[np.ix_(rows, cols)], partition)


def canonical_partition(a) -> PartitionedMatrix:
    """Partition an ``n² x p²`` matrix into ``n x p`` blocks of equal size."""
    m = as_matrix(a)
    n = isqrt_exact(m.shape[0])
    p = isqrt_exact(m.shape[1])
    return PartitionedMatrix(m, BlockPartition((n,) * n, (p,) * p))


def box(c, d) -> np.ndarray:
    """Tracy-Singh product of two matrices under their canonical partitions."""
    return tracy_singh(canonical_partition(c), canonical_partition(d)).matrix


def commutation_matrix(m: int, n: int) -> np.ndarray:
    """``K_mn = Σ E_ij ⊗ E_ijᵀ`` with ``E_ij`` of size ``m x n``.

    ``K_mn @ vec(A) == vec(Aᵀ)`` for ``A`` of size ``m x n`` (column-stacking vec).
    """
    k = np.zeros((m * n, m * n), dtype=np.complex128)
    i, j = np.meshgrid(np.arange(m), np.arange(n), indexing="ij")
    k[(i * n + j).ravel(), (j * m + i).ravel()] = 1.0
    return k


def flip_middle(n: int, m: int) -> np.ndarray:
    """``I_n ⊗ K_mn ⊗ I_m``: sends ``x⊗x′⊗y⊗y′`` in ``ℂⁿ⊗ℂⁿ⊗ℂᵐ⊗ℂᵐ`` to
    ``x⊗y⊗x′⊗y′`` in ``ℂⁿ⊗ℂᵐ⊗ℂⁿ⊗ℂᵐ``. Its inverse is ``flip_middle(n, m).T``."""
    return np.kron(identity(n), np.kron(commutation_matrix(m, n), identity(m)))


def box_via_conjugation(a, b) -> np.ndarray:
    """Canonical Tracy-Singh product computed as ``F (a ⊗ b) G`` with
    permutation matrices ``F = I_n ⊗ K_mn ⊗ I_m`` and ``G = I_p ⊗ K_pq ⊗ I_q``.

    Works for rectangular ``n² x p²`` and ``m² x q²`` inputs.
    """
    a = as_matrix(a)
    b = as_matrix(b)
    n, p = isqrt_exact(a.shape[0]), isqrt_exact(a.shape[1])
    m, q = isqrt_exact(b.shape[0]), isqrt_exact(b.shape[1])
    left = flip_middle(n, m)
    right = np.kron(identity(p), np.kron(commutation_matrix(p, q), identity(q)))
    return left @ np.kron(a, b) @ right


def box_swap_conjugator(n: int, m: int) -> np.ndarray:
    """Permutation ``P`` with ``d ⊠ c = P (c ⊠ d) P⁻¹`` for ``c`` of size ``n²``
    and ``d`` of size ``m²``."""
    return (
        np.kron(identity(m), np.kron(commutation_matrix(n, m), identity(n)))
        @ commutation_matrix(m * m, n * n)
        @ np.kron(identity(n), np.kron(commutation_matrix(n, m), identity(m)))
    )


def swap_gate(d: int) -> np.ndarray:
    """Swap of ``ℂᵈ ⊗ ℂᵈ``: ``e_i ⊗ e_j ↦ e_j ⊗ e_i``."""
    if d < 1:
        raise DimensionError("dimension must be positive")
    return commutation_matrix(d, d)
