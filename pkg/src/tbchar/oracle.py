"""Exact SL2(Z) matrices as an independent check on the trace engine."""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Iterator

from .polyring import Polynomial
from .traceengine import AlgebraElement, trace_of_word
from .words import FIRST, Letter

__all__ = [
    "ExactMatrix",
    "IDENTITY",
    "shear",
    "random_sl2",
    "random_pair",
    "sample_pairs",
    "eval_word_matrix",
    "trace_coordinates",
    "element_matrix",
    "verify_trace_polynomial",
]


@dataclass(frozen=True)
class ExactMatrix:
    """``[[a, b], [c, d]]`` with ``a*d - b*c == 1``."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return ExactMatrix(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def inverse(self) -> "ExactMatrix":
        return ExactMatrix(self.d, -self.b, -self.c, self.a)

    def trace(self) -> int:
        return self.a + self.d

    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


IDENTITY = ExactMatrix(1, 0, 0, 1)

_SHEAR_ENTRIES = (-3, -2, -1, 1, 2, 3)


def shear(upper: bool, entry: int) -> ExactMatrix:
    return ExactMatrix(1, entry, 0, 1) if upper else ExactMatrix(1, 0, entry, 1)


def random_sl2(rng: random.Random, steps: int) -> ExactMatrix:
    """Product of ``steps`` random elementary shears with off-diagonal entries in [-3, 3]."""
    m = IDENTITY
    for _ in range(steps):
        m = m @ shear(rng.random() < 0.5, rng.choice(_SHEAR_ENTRIES))
    return m


def random_pair(rng: random.Random, max_steps: int = 12) -> tuple[ExactMatrix, ExactMatrix]:
    """Two random non-commuting SL2(Z) matrices."""
    while True:
        X = random_sl2(rng, rng.randint(1, max_steps))
        Y = random_sl2(rng, rng.randint(1, max_steps))
        if X @ Y != Y @ X:
            return X, Y


def sample_pairs(samples: int, seed: int, max_steps: int = 12) -> Iterator[tuple[ExactMatrix, ExactMatrix]]:
    """Deterministic stream of pairs; sample ``i`` has its own generator derived from ``seed``."""
    for i in range(samples):
        yield random_pair(random.Random(f"{seed}:{i}"), max_steps)


def eval_word_matrix(word: Iterable[Letter], X: ExactMatrix, Xp: ExactMatrix) -> ExactMatrix:
    gens = {
        (FIRST, 1): X,
        (FIRST, -1): X.inverse(),
        (1 - FIRST, 1): Xp,
        (1 - FIRST, -1): Xp.inverse(),
    }
    m = IDENTITY
    for gen, exp in word:
        m = m @ gens[(gen, exp)]
    return m


def trace_coordinates(X: ExactMatrix, Xp: ExactMatrix) -> tuple[int, int, int]:
    """``(tr X, tr X', tr XX')``, the point at which trace polynomials are evaluated."""
    return X.trace(), Xp.trace(), (X @ Xp).trace()


def element_matrix(e: AlgebraElement, X: ExactMatrix, Xp: ExactMatrix) -> tuple[tuple[int, int], tuple[int, int]]:
    """Integer 2x2 matrix represented by an algebra element at ``(X, Xp)``.

    Not necessarily of determinant 1, so returned as plain rows.
    """
    point = trace_coordinates(X, Xp)
    c1, cx, cy, cxy = (p.evaluate(point) for p in e.coeffs)
    XY = X @ Xp
    return (
        (c1 + cx * X.a + cy * Xp.a + cxy * XY.a, cx * X.b + cy * Xp.b + cxy * XY.b),
        (cx * X.c + cy * Xp.c + cxy * XY.c, c1 + cx * X.d + cy * Xp.d + cxy * XY.d),
    )


def verify_trace_polynomial(
    word: Iterable[Letter],
    samples: int = 100,
    seed: int = 0,
    poly: Polynomial | None = None,
) -> bool:
    """Check ``trace_of_word(word)`` (or ``poly``) against direct matrix traces.

    ``poly`` must be over the trace coordinates (u, v, w).
    """
    word = tuple(word)
    if poly is None:
        poly = trace_of_word(word)
    for X, Xp in sample_pairs(samples, seed):
        if poly.evaluate(trace_coordinates(X, Xp)) != eval_word_matrix(word, X, Xp).trace():
            return False
    return True
