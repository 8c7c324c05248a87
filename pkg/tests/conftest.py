import numpy as np
import pytest

from yangbaxter.products import BlockPartition, PartitionedMatrix


def random_complex(rng, rows, cols):
    return rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols))


def random_partition(rng, size, max_blocks=3):
    """Random composition of ``size`` into at most ``max_blocks`` positive parts."""
    k = int(rng.integers(1, min(size, max_blocks) + 1))
    cuts = np.sort(rng.choice(np.arange(1, size), size=k - 1, replace=False)) if k > 1 else []
    edges = [0, *cuts, size]
    return tuple(int(b - a) for a, b in zip(edges[:-1], edges[1:]))


def random_partitioned(rng, rows=None, cols=None, row_blocks=None, col_blocks=None):
    if row_blocks is None:
        rows = rows or int(rng.integers(1, 5))
        row_blocks = random_partition(rng, rows)
    if col_blocks is None:
        cols = cols or int(rng.integers(1, 5))
        col_blocks = random_partition(rng, cols)
    part = BlockPartition(row_blocks, col_blocks)
    return PartitionedMatrix(random_complex(rng, *part.shape), part)


def _blocks(pm: PartitionedMatrix):
    r = np.cumsum((0,) + pm.partition.row_blocks)
    c = np.cumsum((0,) + pm.partition.col_blocks)
    return lambda i, j: pm.matrix[r[i] : r[i + 1], c[j] : c[j + 1]]


def tracy_singh_oracle(a: PartitionedMatrix, b: PartitionedMatrix) -> np.ndarray:
    """Direct block assembly: ((A_ij ⊗ B_kl)_kl)_ij."""
    pa, pb = a.partition, b.partition
    a_block, b_block = _blocks(a), _blocks(b)
    outer = []
    for i in range(len(pa.row_blocks)):
        outer_row = []
        for j in range(len(pa.col_blocks)):
            aij = a_block(i, j)
            inner = [
                [np.kron(aij, b_block(k, l)) for l in range(len(pb.col_blocks))]
                for k in range(len(pb.row_blocks))
            ]
            outer_row.append(np.block(inner))
        outer.append(outer_row)
    return np.block(outer)


def random_product_state(rng, d):
    a = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    b = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    v = np.kron(a, b)
    return v / np.linalg.norm(v)


def random_state(rng, d):
    v = rng.standard_normal(d * d) + 1j * rng.standard_normal(d * d)
    return v / np.linalg.norm(v)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    """Repeat the acceptance verdict lines at the end of the run."""
    import sys

    lines = []
    for name, mod in list(sys.modules.items()):
        if name.rsplit(".", 1)[-1] == "test_acceptance":
            lines = getattr(mod, "ACCEPTANCE_LINES", lines)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
