"""Traces of words in two generic SL2 matrices.

Every word in X, Y (= X') reduces, by Cayley-Hamilton, to a combination
``a*1 + b*X + c*Y + d*XY`` whose coefficients are polynomials in the traces
``u = tr X``, ``v = tr Y``, ``w = tr XY``.  Words are folded left to right
through the hard-coded multiplication table below.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from .polyring import BARRED, TRACE, Polynomial
from .words import FIRST, Letter, Word

__all__ = [
    "AlgebraElement",
    "BASIS",
    "MULTIPLICATION_TABLE",
    "INVERSE_TABLE",
    "multiply_by_letter",
    "evaluate_word",
    "trace_of_word",
    "to_barred",
]

_U = Polynomial.var("u", TRACE)
_V = Polynomial.var("v", TRACE)
_W = Polynomial.var("w", TRACE)
_ZERO = Polynomial.constant(0, TRACE)
_ONE = Polynomial.constant(1, TRACE)


def _poly(p) -> Polynomial:
    return Polynomial.constant(p, TRACE) if isinstance(p, int) else p


@dataclass(frozen=True)
class AlgebraElement:
    """``one*1 + x*X + y*Y + xy*XY`` with coefficients over (u, v, w)."""

    one: Polynomial = _ZERO
    x: Polynomial = _ZERO
    y: Polynomial = _ZERO
    xy: Polynomial = _ZERO

    def __post_init__(self):
        for name in ("one", "x", "y", "xy"):
            value = _poly(getattr(self, name))
            if value.variables != TRACE:
                raise ValueError(f"coefficient {name} must be over {TRACE}")
            object.__setattr__(self, name, value)

    @property
    def coeffs(self) -> tuple[Polynomial, Polynomial, Polynomial, Polynomial]:
        return (self.one, self.x, self.y, self.xy)

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(*(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return AlgebraElement(*(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def scale(self, c: Polynomial | int) -> "AlgebraElement":
        return AlgebraElement(*(a * c for a in self.coeffs))

    def trace(self) -> Polynomial:
        return 2 * self.one + _U * self.x + _V * self.y + _W * self.xy

    def __str__(self):
        return f"({self.one})*1 + ({self.x})*X + ({self.y})*Y + ({self.xy})*XY"


IDENTITY = AlgebraElement(one=_ONE)
BASIS = (
    IDENTITY,
    AlgebraElement(x=_ONE),
    AlgebraElement(y=_ONE),
    AlgebraElement(xy=_ONE),
)

# (basis index, generator) -> basis[i] * generator.  Basis order: 1, X, Y, XY.
MULTIPLICATION_TABLE: dict[tuple[int, int], AlgebraElement] = {
    (0, 0): AlgebraElement(x=_ONE),  # 1*X = X
    (0, 1): AlgebraElement(y=_ONE),  # 1*Y = Y
    (1, 0): AlgebraElement(one=-1, x=_U),  # X*X = uX - 1
    (1, 1): AlgebraElement(xy=_ONE),  # X*Y = XY
    (2, 0): AlgebraElement(one=_W - _U * _V, x=_V, y=_U, xy=-1),  # Y*X
    (2, 1): AlgebraElement(one=-1, y=_V),  # Y*Y = vY - 1
    (3, 0): AlgebraElement(one=-_V, x=_W, y=_ONE),  # XY*X = wX + Y - v
    (3, 1): AlgebraElement(x=-1, xy=_V),  # XY*Y = vXY - X
}
# products of XY with XY and of X with XY, listed for completeness and checked in tests
PRODUCT_ROWS: dict[tuple[int, int], AlgebraElement] = {
    (1, 3): AlgebraElement(y=-1, xy=_U),  # X*XY = uXY - Y
    (2, 3): AlgebraElement(one=-_U, x=_ONE, y=_W),  # Y*XY = X + wY - u
    (3, 3): AlgebraElement(one=-1, xy=_W),  # XY*XY = wXY - 1
}
INVERSE_TABLE: dict[int, AlgebraElement] = {
    0: AlgebraElement(one=_U, x=-1),  # X^-1 = u - X
    1: AlgebraElement(one=_V, y=-1),  # Y^-1 = v - Y
}


def _times_generator(e: AlgebraElement, gen: int) -> AlgebraElement:
    out = [_ZERO] * 4
    for i, coeff in enumerate(e.coeffs):
        if not coeff:
            continue
        row = MULTIPLICATION_TABLE[(i, gen)]
        for j, r in enumerate(row.coeffs):
            if r:
                out[j] = out[j] + coeff * r
    return AlgebraElement(*out)


def multiply_by_letter(e: AlgebraElement, letter: Letter) -> AlgebraElement:
    """Right multiplication ``e * letter``."""
    gen, exp = letter
    if exp == 1:
        return _times_generator(e, gen)
    # e * g^-1 = tr(g)*e - e*g
    tr = _U if gen == FIRST else _V
    return e.scale(tr) - _times_generator(e, gen)


def evaluate_word(word: Iterable[Letter]) -> AlgebraElement:
    return reduce(multiply_by_letter, word, IDENTITY)


def trace_of_word(word: Iterable[Letter]) -> Polynomial:
    """``tr(word)`` as a polynomial in u = tr X, v = tr X', w = tr XX'."""
    return evaluate_word(word).trace()


def to_barred(f: Polynomial) -> Polynomial:
    """Rewrite a trace polynomial in the negated coordinates x = -u, xp = -v, y = -w."""
    if f.variables != TRACE:
        raise ValueError(f"expected a polynomial over {TRACE}")
    # sign flip per monomial is cheaper than a general substitution
    return Polynomial(
        {e: (-c if sum(e) % 2 else c) for e, c in f.terms.items()}, BARRED
    )


def from_barred(f: Polynomial) -> Polynomial:
    if f.variables != BARRED:
        raise ValueError(f"expected a polynomial over {BARRED}")
    return Polynomial({e: (-c if sum(e) % 2 else c) for e, c in f.terms.items()}, TRACE)


def trace_word(word: Word | str) -> Polynomial:
    """Convenience: barred trace polynomial of a word given as text or :class:`Word`."""
    if isinstance(word, str):
        word = Word.parse(word)
    return to_barred(trace_of_word(word))
