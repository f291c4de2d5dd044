"""Two-bridge link parameters b(2p, q) and the link group presentation."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .words import FIRST, SECOND, Letter, Word, X

__all__ = [
    "TwoBridgeParam",
    "InvalidLinkParameter",
    "NotEven",
    "OutOfRange",
    "NotCoprime",
    "Presentation",
    "epsilon_sequence",
    "relator_word",
    "presentation",
    "is_equivalent",
    "canonical",
    "all_params",
]


class InvalidLinkParameter(ValueError):
    pass


class NotEven(InvalidLinkParameter):
    pass


class OutOfRange(InvalidLinkParameter):
    pass


class NotCoprime(InvalidLinkParameter):
    pass


@dataclass(frozen=True, order=True)
class TwoBridgeParam:
    """Validated pair ``(2p, q)`` with ``2p`` even, ``1 <= q < 2p`` and ``gcd(q, 2p) == 1``.

    Out-of-range ``q`` is rejected rather than reduced mod ``2p``.
    """

    twop: int
    q: int

    def __post_init__(self):
        twop, q = self.twop, self.q
        if not isinstance(twop, int) or not isinstance(q, int):
            raise TypeError("twop and q must be integers")
        if twop < 2:
            raise OutOfRange(f"twop must be >= 2, got {twop}")
        if twop % 2:
            raise NotEven(f"twop must be even, got {twop}")
        if not 1 <= q < twop:
            raise OutOfRange(f"q must satisfy 1 <= q < {twop}, got {q}")
        if gcd(q, twop) != 1:
            raise NotCoprime(f"gcd(q, twop) = gcd({q}, {twop}) = {gcd(q, twop)}, must be 1")

    @property
    def p(self) -> int:
        return self.twop // 2

    def __str__(self):
        return f"b({self.twop},{self.q})"


def is_equivalent(a: TwoBridgeParam, b: TwoBridgeParam) -> bool:
    """``b(2p,q) ~ b(2p',q')`` iff ``2p == 2p'`` and ``q' = q**(+-1) mod 2p``."""
    if a.twop != b.twop:
        return False
    n = a.twop
    return b.q % n in (a.q % n, pow(a.q, -1, n))


def canonical(a: TwoBridgeParam) -> TwoBridgeParam:
    return TwoBridgeParam(a.twop, min(a.q, pow(a.q, -1, a.twop)))


def epsilon_sequence(param: TwoBridgeParam) -> tuple[int, ...]:
    """Signs ``(-1)**floor(k*q/2p)`` for ``k = 1 .. 2p-1``."""
    return tuple(-1 if (k * param.q // param.twop) % 2 else 1 for k in range(1, param.twop))


def relator_word(param: TwoBridgeParam) -> Word:
    """``w = Xp^e1 X^e2 ... X^e(2p-2) Xp^e(2p-1)``."""
    eps = epsilon_sequence(param)
    return Word(tuple(Letter(SECOND if k % 2 else FIRST, e) for k, e in enumerate(eps, start=1)))


@dataclass(frozen=True)
class Presentation:
    """One-relator presentation ``<X, Xp | X w = w X>``."""

    generators: tuple[str, str]
    lhs: Word
    rhs: Word
    w: Word

    def __str__(self):
        return f"< {', '.join(self.generators)} | {self.lhs} = {self.rhs} >"


def presentation(param: TwoBridgeParam) -> Presentation:
    w = relator_word(param)
    return Presentation(("X", "Xp"), Word((X,)) + w, w + Word((X,)), w)


def all_params(max_p: int, min_p: int = 1):
    """Every valid ``TwoBridgeParam`` with ``min_p <= p <= max_p`` and all admissible q."""
    for p in range(min_p, max_p + 1):
        for q in range(1, 2 * p):
            if gcd(q, 2 * p) == 1:
                yield TwoBridgeParam(2 * p, q)
