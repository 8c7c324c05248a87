"""Named two-qudit matrices used as fixtures and building blocks."""

import numpy as np

from .products import swap_gate

_S = 1.0 / np.sqrt(2.0)


def bell_r_matrix() -> np.ndarray:
    """Unitary 4x4 R-matrix that sends |00> to (|00> - |11>)/sqrt(2)."""
    return _S * np.array(
        [[1, 0, 0, 1], [0, 1, -1, 0], [0, 1, 1, 0], [-1, 0, 0, 1]], dtype=np.complex128
    )


def nonunitary_r_matrix() -> np.ndarray:
    """A non-unitary 4x4 R-matrix with ``e1⊗e2 ↦ e2⊗e1``."""
    return np.array(
        [[2, 0, 0, 0], [0, 0, 1, 0], [0, 1, 1.5, 0], [0, 0, 0, 2]], dtype=np.complex128
    )


def cnot() -> np.ndarray:
    return np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
    )


def swap(d: int = 2) -> np.ndarray:
    return swap_gate(d)


NAMED = {
    "example-c": bell_r_matrix,
    "example-d": nonunitary_r_matrix,
    "cnot": cnot,
    "swap": swap,
}
