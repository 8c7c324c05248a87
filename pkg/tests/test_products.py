import itertools

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from yangbaxter.exceptions import DimensionError, PartitionError
from yangbaxter.gates import bell_r_matrix, nonunitary_r_matrix
from yangbaxter.linalg import identity
from yangbaxter.products import (
    BlockPartition,
    PartitionedMatrix,
    box,
    box_swap_conjugator,
    box_via_conjugation,
    canonical_partition,
    commutation_matrix,
    flip_middle,
    kronecker,
    tracy_singh,
)

from conftest import random_complex, random_partitioned, tracy_singh_oracle

CASES = 200
S2 = np.sqrt(2.0)


def gaussian_int(rng, rows, cols):
    """Small Gaussian-integer entries: every product and sum below is exact."""
    return rng.integers(-9, 10, (rows, cols)) + 1j * rng.integers(-9, 10, (rows, cols))


def int_partitioned(rng, **kw):
    pm = random_partitioned(rng, **kw)
    return PartitionedMatrix(gaussian_int(rng, *pm.matrix.shape), pm.partition)


def vec(a):
    """Column-stacking vectorisation."""
    return a.reshape(-1, order="F")


def test_kronecker_examples():
    assert np.array_equal(kronecker(identity(2), identity(3)), identity(6))
    cc = kronecker(bell_r_matrix(), bell_r_matrix())
    assert cc.shape == (16, 16)
    assert abs(cc[0, 0] - 0.5) <= 1e-15 and abs(cc[0, 15] - 0.5) <= 1e-15
    e1, e2 = np.array([1, 0]), np.array([0, 1])
    assert np.array_equal(kronecker(e1, e2).ravel(), [0, 1, 0, 0])


def test_tracy_singh_single_blocks_is_kronecker(rng):
    a, b = random_complex(rng, 3, 2), random_complex(rng, 2, 4)
    ts = tracy_singh(PartitionedMatrix.unpartitioned(a), PartitionedMatrix.unpartitioned(b))
    assert np.array_equal(ts.matrix, np.kron(a, b))


def test_tracy_singh_blocks_of_c_box_d():
    m = box(bell_r_matrix(), nonunitary_r_matrix())
    # 16 blocks of size 4; 1-based block positions (2,2) and (2,4)
    b22 = m[4:8, 4:8]
    b24 = m[4:8, 12:16]
    expect22 = np.diag([1.5 / S2, S2, 1.5 / S2, S2])
    expect24 = np.array(
        [[0, 0, 1.5 / S2, 0], [0, 0, 0, S2], [-1.5 / S2, 0, 0, 0], [0, -S2, 0, 0]]
    )
    assert np.max(np.abs(b22 - expect22)) <= 1e-15
    assert np.max(np.abs(b24 - expect24)) <= 1e-15


def test_tracy_singh_matches_block_assembly(rng):
    for _ in range(CASES):
        a, b = random_partitioned(rng), random_partitioned(rng)
        assert np.array_equal(tracy_singh(a, b).matrix, tracy_singh_oracle(a, b))


def test_tracy_singh_partition_is_checked():
    with pytest.raises(PartitionError):
        PartitionedMatrix(np.zeros((3, 3)), BlockPartition((1, 1), (3,)))
    with pytest.raises(PartitionError):
        BlockPartition((0, 2), (2,))
    with pytest.raises(PartitionError):
        BlockPartition.parse("2,x/1")
    assert BlockPartition.parse("2,2/1,2,1") == BlockPartition((2, 2), (1, 2, 1))


def test_canonical_partition():
    assert canonical_partition(np.zeros((4, 4))).partition == BlockPartition((2, 2), (2, 2))
    assert canonical_partition(np.zeros((9, 9))).partition == BlockPartition((3,) * 3, (3,) * 3)
    with pytest.raises(DimensionError):
        canonical_partition(np.zeros((6, 6)))


def test_commutation_examples(rng):
    assert np.array_equal(commutation_matrix(1, 4), identity(4))
    # K_23 as a 2x3 grid of 3x2 blocks, block (i,j) = E_ji
    k = commutation_matrix(2, 3)
    for i, j in itertools.product(range(2), range(3)):
        block = k[3 * i : 3 * i + 3, 2 * j : 2 * j + 2]
        expect = np.zeros((3, 2))
        expect[j, i] = 1
        assert np.array_equal(block, expect)
    a = random_complex(rng, 2, 2)
    assert np.array_equal(commutation_matrix(2, 2) @ vec(a), vec(a.T))


@settings(max_examples=60, derandomize=True, deadline=None)
@given(st.integers(1, 5), st.integers(1, 5))
def test_commutation_vec_transpose(m, n):
    rng = np.random.default_rng(m * 10 + n)
    a = random_complex(rng, m, n)
    k = commutation_matrix(m, n)
    assert np.array_equal(k @ vec(a), vec(a.T))
    assert np.array_equal(commutation_matrix(n, m), k.T)
    assert np.array_equal(k @ commutation_matrix(n, m), identity(m * n))


def test_flip_middle_brute_force():
    for n, m in [(1, 1), (2, 2), (2, 3), (3, 2)]:
        f = flip_middle(n, m)
        for x, x2, y, y2 in itertools.product(range(n), range(n), range(m), range(m)):
            src = np.ravel_multi_index((x, x2, y, y2), (n, n, m, m))
            dst = np.ravel_multi_index((x, y, x2, y2), (n, m, n, m))
            col = f[:, src]
            assert col[dst] == 1 and np.count_nonzero(col) == 1
        assert np.array_equal(f @ f.T, identity((n * m) ** 2))
    assert np.array_equal(flip_middle(2, 2) @ flip_middle(2, 2), identity(16))
    assert np.array_equal(flip_middle(1, 1), identity(1))


def test_box_via_conjugation_examples():
    c, d = bell_r_matrix(), nonunitary_r_matrix()
    assert np.array_equal(box_via_conjugation(c, d), box(c, d))
    assert np.array_equal(box_via_conjugation(identity(4), identity(9)), identity(36))


# Algebraic identities, each over CASES seeded random instances.


def test_associativity(rng):
    for _ in range(CASES):
        a, b, c = (int_partitioned(rng) for _ in range(3))
        left = tracy_singh(tracy_singh(a, b), c).matrix
        right = tracy_singh(a, tracy_singh(b, c)).matrix
        assert np.array_equal(left, right)


def test_bilinearity(rng):
    for _ in range(CASES):
        a, c = random_partitioned(rng), random_partitioned(rng)
        b = PartitionedMatrix(random_complex(rng, *a.matrix.shape), a.partition)
        d = PartitionedMatrix(random_complex(rng, *c.matrix.shape), c.partition)
        ab = PartitionedMatrix(a.matrix + b.matrix, a.partition)
        cd = PartitionedMatrix(c.matrix + d.matrix, c.partition)
        lhs = tracy_singh(ab, cd).matrix
        rhs = sum(tracy_singh(x, y).matrix for x in (a, b) for y in (c, d))
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(lhs)))


def test_mixed_product(rng):
    for _ in range(CASES):
        a, b = random_partitioned(rng), random_partitioned(rng)
        c = random_partitioned(rng, row_blocks=a.partition.col_blocks)
        d = random_partitioned(rng, row_blocks=b.partition.col_blocks)
        lhs = tracy_singh(a, b).matrix @ tracy_singh(c, d).matrix
        ac = PartitionedMatrix(a.matrix @ c.matrix, BlockPartition(a.partition.row_blocks, c.partition.col_blocks))
        bd = PartitionedMatrix(b.matrix @ d.matrix, BlockPartition(b.partition.row_blocks, d.partition.col_blocks))
        rhs = tracy_singh(ac, bd).matrix
        assert np.max(np.abs(lhs - rhs)) <= 1e-12 * max(1.0, np.max(np.abs(lhs)))


def test_scalar(rng):
    for _ in range(CASES):
        a, b = int_partitioned(rng), int_partitioned(rng)
        lam = complex(*rng.integers(-9, 10, 2))
        la = PartitionedMatrix(lam * a.matrix, a.partition)
        lb = PartitionedMatrix(lam * b.matrix, b.partition)
        ref = lam * tracy_singh(a, b).matrix
        assert np.array_equal(tracy_singh(la, b).matrix, ref)
        assert np.array_equal(tracy_singh(a, lb).matrix, ref)


def _square_partitioned(rng):
    n = int(rng.integers(1, 5))
    blocks = random_partitioned(rng, n, n).partition.row_blocks
    return random_partitioned(rng, row_blocks=blocks, col_blocks=blocks)


def test_inverse_and_transpose(rng):
    for _ in range(CASES):
        a, b = _square_partitioned(rng), _square_partitioned(rng)
        ai = PartitionedMatrix(np.linalg.inv(a.matrix), a.partition)
        bi = PartitionedMatrix(np.linalg.inv(b.matrix), b.partition)
        ts = tracy_singh(a, b).matrix
        lhs = np.linalg.inv(ts)
        rhs = tracy_singh(ai, bi).matrix
        assert np.max(np.abs(lhs - rhs)) <= 1e-10 * max(1.0, np.max(np.abs(rhs)))
        at = PartitionedMatrix(a.matrix.T, BlockPartition(a.partition.col_blocks, a.partition.row_blocks))
        bt = PartitionedMatrix(b.matrix.T, BlockPartition(b.partition.col_blocks, b.partition.row_blocks))
        assert np.array_equal(ts.T, tracy_singh(at, bt).matrix)


def test_identity_product(rng):
    for _ in range(CASES):
        n, m = (int(x) for x in rng.integers(1, 6, size=2))
        pn = random_partitioned(rng, n, n).partition.row_blocks
        pm = random_partitioned(rng, m, m).partition.row_blocks
        a = PartitionedMatrix(identity(n), BlockPartition(pn, pn))
        b = PartitionedMatrix(identity(m), BlockPartition(pm, pm))
        assert np.array_equal(tracy_singh(a, b).matrix, identity(n * m))


def test_commutation_conjugates_kronecker(rng):
    for _ in range(CASES):
        n, s, m, t = (int(x) for x in rng.integers(1, 5, size=4))
        a, b = gaussian_int(rng, n, s), gaussian_int(rng, m, t)
        rhs = commutation_matrix(m, n) @ np.kron(a, b) @ commutation_matrix(s, t)
        assert np.array_equal(np.kron(b, a), rhs)


def test_box_conjugation_rectangular(rng):
    for _ in range(CASES):
        n, p, m, q = (int(x) for x in rng.integers(1, 4, size=4))
        a, b = random_complex(rng, n * n, p * p), random_complex(rng, m * m, q * q)
        assert np.array_equal(box_via_conjugation(a, b), box(a, b))


def test_box_conjugation_square_form(rng):
    for _ in range(CASES):
        n, m = (int(x) for x in rng.integers(1, 4, size=2))
        c, d = random_complex(rng, n * n, n * n), random_complex(rng, m * m, m * m)
        right = np.kron(identity(n), np.kron(commutation_matrix(n, m), identity(m)))
        assert np.array_equal(flip_middle(n, m) @ np.kron(c, d) @ right, box(c, d))


def test_box_swap_conjugator(rng):
    for _ in range(CASES):
        n, m = (int(x) for x in rng.integers(1, 4, size=2))
        c, d = gaussian_int(rng, n * n, n * n), gaussian_int(rng, m * m, m * m)
        p = box_swap_conjugator(n, m)
        assert np.array_equal(box(d, c), p @ box(c, d) @ p.T)
        assert np.array_equal(p @ p.T, identity((n * m) ** 2))


def test_kron_with_identity_blocks(rng):
    # (A⊗I_n) ⊠ (B⊗I_m) = A⊗B⊗I_nm, with A n×n, B m×m, canonical partitions
    for _ in range(CASES):
        n, m = (int(x) for x in rng.integers(1, 5, size=2))
        a, b = random_complex(rng, n, n), random_complex(rng, m, m)
        lhs = box(np.kron(a, identity(n)), np.kron(b, identity(m)))
        assert np.array_equal(lhs, np.kron(np.kron(a, b), identity(n * m)))
