"""Set-theoretic solutions ``r(x, y) = (σ_x(y), γ_y(x))`` on ``{0, …, n-1}``.

Tables are 0-based in memory; the JSON form uses 1-based tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .exceptions import PermutationError
from .linalg import check_permutation, invert_permutation, parse_cycles


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % q for q in range(2, int(p**0.5) + 1))


@dataclass(frozen=True)
class StSolution:
    n: int
    sigma: tuple[tuple[int, ...], ...]
    gamma: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a solution needs a non-empty set")
        for name, tables in (("sigma", self.sigma), ("gamma", self.gamma)):
            if len(tables) != self.n:
                raise PermutationError(f"{name} needs {self.n} tables, got {len(tables)}")
            for t in tables:
                if len(t) != self.n or any(not 0 <= v < self.n for v in t):
                    raise PermutationError(f"{name} table {list(t)} is out of range")
        object.__setattr__(self, "sigma", tuple(tuple(int(v) for v in t) for t in self.sigma))
        object.__setattr__(self, "gamma", tuple(tuple(int(v) for v in t) for t in self.gamma))

    def __call__(self, x: int, y: int) -> tuple[int, int]:
        return self.sigma[x][y], self.gamma[y][x]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma": [[v + 1 for v in t] for t in self.sigma],
            "gamma": [[v + 1 for v in t] for t in self.gamma],
        }

    @classmethod
    def from_json(cls, data: dict) -> "StSolution":
        return cls(
            int(data["n"]),
            tuple(tuple(v - 1 for v in t) for t in data["sigma"]),
            tuple(tuple(v - 1 for v in t) for t in data["gamma"]),
        )


@dataclass(frozen=True)
class StValidation:
    braided: bool
    involutive: bool
    nondegenerate: bool
    square_free: bool
    trivial: bool


def _bijective(table: Sequence[int]) -> bool:
    return sorted(table) == list(range(len(table)))


def is_braided(s: StSolution) -> bool:
    def r12(t):
        a, b = s(t[0], t[1])
        return a, b, t[2]

    def r23(t):
        a, b = s(t[1], t[2])
        return t[0], a, b

    return all(
        r12(r23(r12(t))) == r23(r12(r23(t)))
        for t in itertools.product(range(s.n), repeat=3)
    )


def validate(s: StSolution) -> StValidation:
    n = s.n
    pairs = list(itertools.product(range(n), repeat=2))
    ident = tuple(range(n))
    return StValidation(
        braided=is_braided(s),
        involutive=all(s(*s(x, y)) == (x, y) for x, y in pairs),
        nondegenerate=all(_bijective(t) for t in s.sigma + s.gamma),
        square_free=all(s(x, x) == (x, x) for x in range(n)),
        trivial=all(t == ident for t in s.sigma + s.gamma),
    )


def to_matrix(s: StSolution) -> np.ndarray:
    """Permutation matrix ``e_x ⊗ e_y ↦ e_σx(y) ⊗ e_γy(x)`` (lexicographic basis)."""
    if not all(_bijective(t) for t in s.sigma + s.gamma):
        raise PermutationError("solution is degenerate")
    n = s.n
    rows, cols = [], []
    for x, y in itertools.product(range(n), repeat=2):
        u, v = s(x, y)
        rows.append(u * n + v)
        cols.append(x * n + y)
    if len(set(rows)) != n * n:
        raise PermutationError("r is not a bijection of X x X")
    m = np.zeros((n * n, n * n), dtype=np.complex128)
    m[rows, cols] = 1.0
    return m


def trivial(n: int) -> StSolution:
    ident = tuple(range(n))
    return StSolution(n, (ident,) * n, (ident,) * n)


def permutation_solution(sigma: Sequence[int]) -> StSolution:
    """``r(x, y) = (σ(y), σ⁻¹(x))`` for a 0-based table ``sigma``."""
    table = check_permutation(sigma)
    inv = invert_permutation(table)
    n = len(table)
    return StSolution(n, (table,) * n, (inv,) * n)


def cyclic_prime(p: int) -> StSolution:
    """Permutation solution of the cycle ``(1, 2, …, p)`` for a prime ``p``."""
    if not _is_prime(p):
        raise ValueError(f"{p} is not prime")
    return permutation_solution([(i + 1) % p for i in range(p)])


def square_free_prime(p: int) -> StSolution:
    """Square-free solution with ``σ_i = γ_i = Id`` for ``i < p`` and
    ``σ_p = γ_p = (1,2)(3,4)…(p-2,p-1)``."""
    if p < 3 or not _is_prime(p):
        raise ValueError("p must be an odd prime")
    ident = tuple(range(p))
    last = parse_cycles("".join(f"({i},{i + 1})" for i in range(1, p - 1, 2)), p)
    tables = (ident,) * (p - 1) + (last,)
    return StSolution(p, tables, tables)


def _relabel(s: StSolution, mu: Sequence[int]) -> StSolution:
    """Image of ``s`` under the bijection ``mu``: ``r' = (μ×μ) r (μ×μ)⁻¹``."""
    n = s.n
    inv = invert_permutation(mu)
    sigma = tuple(tuple(mu[s.sigma[inv[x]][inv[y]]] for y in range(n)) for x in range(n))
    gamma = tuple(tuple(mu[s.gamma[inv[y]][inv[x]]] for x in range(n)) for y in range(n))
    return StSolution(n, sigma, gamma)


def isomorphism_key(s: StSolution) -> tuple:
    """Smallest relabelled table pair; equal keys mean isomorphic solutions."""
    return min(
        (t.sigma, t.gamma)
        for t in (_relabel(s, mu) for mu in itertools.permutations(range(s.n)))
    )


def _sweep(n: int) -> Iterator[StSolution]:
    perms = list(itertools.permutations(range(n)))
    for sigma in itertools.product(perms, repeat=n):
        for gamma in itertools.product(perms, repeat=n):
            s = StSolution(n, sigma, gamma)
            if all(s(*s(x, y)) == (x, y) for x in range(n) for y in range(n)) and is_braided(s):
                yield s


def enumerate_involutive(n: int, up_to: str = "isomorphism") -> list[StSolution]:
    """All non-degenerate involutive braided solutions on ``n`` points.

    ``up_to="isomorphism"`` keeps the first solution of each isomorphism
    class met in the sweep (σ tables outermost, lexicographic order);
    ``up_to="literal"`` keeps every distinct table pair.
    """
    if n not in (2, 3):
        raise ValueError("enumeration supports n in {2, 3}")
    if up_to not in ("isomorphism", "literal"):
        raise ValueError(f"unknown mode {up_to!r}")
    found = list(_sweep(n))
    if up_to == "literal":
        return found
    seen: set = set()
    reps = []
    for s in found:
        key = isomorphism_key(s)
        if key not in seen:
            seen.add(key)
            reps.append(s)
    return reps


def all_permutation_solutions(n: int) -> Iterable[StSolution]:
    return (permutation_solution(p) for p in itertools.permutations(range(n)))
