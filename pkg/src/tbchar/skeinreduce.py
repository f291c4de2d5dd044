"""Basis of the skein module of a two-bridge link complement and the
t = -1 normal form (reduction modulo eta in y).

Over C[t^(+-1)] the module is free on ``x^a xp^b y^c`` with ``c <= p``.
At t = -1 the relation is eta, which is monic in y of degree p+1, so
reducing any polynomial to y-degree <= p is plain division with remainder.
"""

from __future__ import annotations

from dataclasses import dataclass

from .charvariety import eta
from .linkparam import TwoBridgeParam
from .polyring import BARRED, Polynomial

__all__ = ["BasisDescriptor", "basis_monomials", "normal_form", "is_zero_in_character_ring"]


@dataclass(frozen=True)
class BasisDescriptor:
    """Free basis ``{x^a xp^b y^c : a, b >= 0, 0 <= c <= p}`` of the skein module.

    The basis is the same over C[t^(+-1)] and after setting t = -1; only the
    latter has an explicit relation (eta) in this package.
    """

    param: TwoBridgeParam

    @property
    def y_degree_bound(self) -> int:
        return self.param.p

    def monomials(self, max_total_degree: int) -> list[tuple[int, int, int]]:
        return basis_monomials(self.param, max_total_degree)

    def __contains__(self, exp) -> bool:
        a, b, c = exp
        return a >= 0 and b >= 0 and 0 <= c <= self.y_degree_bound


def basis_monomials(param: TwoBridgeParam, max_total_degree: int) -> list[tuple[int, int, int]]:
    """Basis exponents of total degree ``<= max_total_degree``.

    Ordered by total degree ascending, then lexicographically descending
    (x before xp before y).
    """
    if max_total_degree < 0:
        raise ValueError("max_total_degree must be >= 0")
    p = param.p
    out = []
    for d in range(max_total_degree + 1):
        for a in range(d, -1, -1):
            for b in range(d - a, -1, -1):
                c = d - a - b
                if c <= p:
                    out.append((a, b, c))
    return out


def normal_form(param: TwoBridgeParam, f: Polynomial) -> Polynomial:
    """Unique representative of ``f`` modulo eta with y-degree at most p."""
    if f.variables != BARRED:
        raise ValueError(f"expected a polynomial over {BARRED}")
    return f.remainder_y(eta(param))


def is_zero_in_character_ring(param: TwoBridgeParam, f: Polynomial) -> bool:
    return normal_form(param, f).is_zero()
