"""Certified entangling and primitive YBE gates in every local dimension.

A dimension ``d`` is split into primes ``p1 <= p2 <= …``; each prime
contributes a small R-matrix and the pieces are joined with the Tracy-Singh
product, left to right.

* entangling: the 4x4 unitary ``bell_r_matrix`` for ``p = 2``, the square-free
  solution matrix for odd ``p``;
* primitive: the cyclic permutation solution matrix for every ``p``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .entanglement import (
    GateClassification,
    classify_gate,
    product_witness,
    witness_search,
)
from .exceptions import InvariantViolation, ResourceLimitError
from .gates import bell_r_matrix
from .linalg import DEFAULT_TOL
from .products import box
from .settheory import cyclic_prime, square_free_prime, to_matrix
from .ybe import CONSTRUCT_CAP, VERIFY_CAP, RMatrixCertificate, certify


def prime_factorize(d: int) -> list[int]:
    if d < 2:
        raise ValueError("d must be at least 2")
    primes = []
    q = 2
    while q * q <= d:
        while d % q == 0:
            primes.append(q)
            d //= q
        q += 1
    if d > 1:
        primes.append(d)
    return primes


@dataclass(frozen=True)
class GateCertificate:
    gate: np.ndarray
    local_dim: int
    kind: str
    recipe: list[tuple[int, str]]
    r_certificate: RMatrixCertificate
    classification: GateClassification
    seed: int = 0
    notes: list[str] = field(default_factory=list)


def _entangling_block(p: int) -> tuple[np.ndarray, str]:
    if p == 2:
        return bell_r_matrix(), "bell_r_matrix"
    return to_matrix(square_free_prime(p)), f"square_free_prime({p})"


def _primitive_block(p: int) -> tuple[np.ndarray, str]:
    return to_matrix(cyclic_prime(p)), f"cyclic_prime({p})"


def _build(d: int, kind: str, tol: float, verify_cap: int, seed: int) -> GateCertificate:
    if d > CONSTRUCT_CAP:
        raise ResourceLimitError(f"local dimension {d} exceeds cap {CONSTRUCT_CAP}")
    make = _entangling_block if kind == "entangling" else _primitive_block
    primes = prime_factorize(d)
    blocks = [make(p) for p in primes]
    gate = blocks[0][0]
    for matrix, _ in blocks[1:]:
        gate = box(gate, matrix)
    cert = certify(gate, d, tol, verify_cap=verify_cap, seed=seed)
    notes = []
    if cert.method == "spot":
        notes.append(
            "constructed under Tracy-Singh closure; YBE spot-verified on random vectors"
        )
    if not cert.valid or not cert.unitary:
        raise InvariantViolation(f"{kind} gate for d={d} failed certification")

    hint = None
    if kind == "entangling":
        # A witness for the first prime block, extended by e1⊗e1 on the rest,
        # is a witness for the whole product.
        hint = witness_search(blocks[0][0], seed=seed)
        for p in primes[1:]:
            e11 = np.zeros(p * p, dtype=np.complex128)
            e11[0] = 1.0
            hint = product_witness(hint, e11)
    classification = classify_gate(gate, seed=seed, witness_hint=hint)
    if classification.verdict != kind:
        raise InvariantViolation(
            f"expected a {kind} gate for d={d}, got {classification.verdict}"
        )
    if kind == "primitive" and not classification.with_swap:
        raise InvariantViolation("cyclic products should factor through the swap")
    return GateCertificate(
        gate=gate,
        local_dim=d,
        kind=kind,
        recipe=[(p, name) for p, (_, name) in zip(primes, blocks)],
        r_certificate=cert,
        classification=classification,
        seed=seed,
        notes=notes,
    )


def entangling_gate(
    d: int, tol: float = DEFAULT_TOL, verify_cap: int = VERIFY_CAP, seed: int = 0
) -> GateCertificate:
    return _build(d, "entangling", tol, verify_cap, seed)


def primitive_gate(
    d: int, tol: float = DEFAULT_TOL, verify_cap: int = VERIFY_CAP, seed: int = 0
) -> GateCertificate:
    return _build(d, "primitive", tol, verify_cap, seed)


def certify_report(g: GateCertificate) -> dict:
    """Machine-readable report of a gate certificate (see ``serialize``)."""
    from .serialize import build_report

    return build_report(
        subject={
            "kind": g.kind,
            "local_dim": g.local_dim,
            "recipe": [{"prime": p, "constructor": name} for p, name in g.recipe],
        },
        certificate=g.r_certificate,
        classification=g.classification,
        seed=g.seed,
        notes=g.notes,
    )


__all__ = [
    "GateCertificate",
    "certify_report",
    "entangling_gate",
    "prime_factorize",
    "primitive_gate",
]
