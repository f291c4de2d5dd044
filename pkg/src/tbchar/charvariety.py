"""The defining polynomial of the SL2 character ring of b(2p, q), and its checks.

All polynomials here are over the barred coordinates (x, xp, y), the
negatives of tr X, tr X' and tr XX'.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .linkparam import TwoBridgeParam, relator_word
from .oracle import eval_word_matrix, sample_pairs, trace_coordinates
from .polyring import BARRED, NotDivisible, Polynomial, is_squarefree_univariate
from .traceengine import to_barred, trace_of_word
from .words import Word, X, X_INV, XP_INV

__all__ = [
    "CheckResult",
    "CharacterRingReport",
    "eta_words",
    "eta_raw",
    "eta",
    "eta_ab",
    "eta_nab",
    "chebyshev_S",
    "delta",
    "run_checks",
]

_Y = Polynomial.var("y")
_Y2_MINUS_4 = _Y**2 - 4


def eta_words(param: TwoBridgeParam) -> tuple[Word, Word]:
    """``(X^-1 w X Xp^-1, w Xp^-1)``: eta is the difference of their traces."""
    w = relator_word(param)
    return Word((X_INV,)) + w + Word((X, XP_INV)), w + Word((XP_INV,))


@lru_cache(maxsize=256)
def eta_raw(param: TwoBridgeParam) -> Polynomial:
    """``tr(X^-1 w X Xp^-1) - tr(w Xp^-1)`` in barred coordinates, sign as computed."""
    long_word, short_word = eta_words(param)
    return to_barred(trace_of_word(long_word) - trace_of_word(short_word))


def eta_sign(param: TwoBridgeParam) -> int:
    """Sign that makes the ``y**(p+1)`` coefficient of eta equal to +1."""
    lead = eta_raw(param).leading_coefficient_in_y()
    return -1 if lead.constant_term() < 0 else 1


def eta(param: TwoBridgeParam) -> Polynomial:
    """Generator of the character ideal, normalized to leading y-coefficient +1."""
    return eta_raw(param).scale(eta_sign(param))


def eta_ab() -> Polynomial:
    """``y^2 + x^2 + xp^2 + x*xp*y - 4``, cutting out the abelian characters."""
    x, xp = Polynomial.var("x"), Polynomial.var("xp")
    return _Y**2 + x**2 + xp**2 + x * xp * _Y - 4


@lru_cache(maxsize=256)
def eta_nab(param: TwoBridgeParam) -> Polynomial:
    """``eta / eta_ab``.  Raises :class:`NotDivisible` if the quotient is not exact."""
    return eta(param).divide_exact(eta_ab())


@lru_cache(maxsize=None)
def chebyshev_S(n: int) -> Polynomial:
    """``S_0 = 1``, ``S_1 = y``, ``S_{n+1} = y*S_n - S_{n-1}``."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return Polynomial.constant(1)
    if n == 1:
        return _Y
    return _Y * chebyshev_S(n - 1) - chebyshev_S(n - 2)


@lru_cache(maxsize=None)
def delta(n: int) -> Polynomial:
    """``delta_1 = y^2-4``, ``delta_2 = -(y^2-4)*y``, ``delta_{n+1} = -y*delta_n - delta_{n-1}``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return _Y2_MINUS_4
    if n == 2:
        return -(_Y2_MINUS_4 * _Y)
    return -(_Y * delta(n - 1)) - delta(n - 2)


@dataclass(frozen=True)
class CheckResult:
    passed: bool
    detail: str = ""

    def __bool__(self):
        return self.passed


@dataclass(frozen=True)
class CharacterRingReport:
    param: TwoBridgeParam
    eta: Polynomial
    eta_ab: Polynomial
    eta_nab: Polynomial | None
    checks: dict[str, CheckResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(self.checks.values())

    def failures(self) -> list[str]:
        return [name for name, res in self.checks.items() if not res]

    def to_json(self) -> dict:
        return {
            "link": {"twop": self.param.twop, "q": self.param.q},
            "eta": self.eta.to_json(),
            "eta_ab": self.eta_ab.to_json(),
            "eta_nab": self.eta_nab.to_json() if self.eta_nab is not None else None,
            "checks": {name: res.passed for name, res in self.checks.items()},
        }


def _unit_leading(f: Polynomial) -> bool:
    lc = f.leading_coefficient_in_y()
    return lc.is_constant() and lc.constant_term() in (1, -1)


def _degree_check(f: Polynomial, expected: int) -> CheckResult:
    deg = f.y_degree()
    lc = f.leading_coefficient_in_y()
    ok = deg == expected and _unit_leading(f)
    return CheckResult(ok, f"deg_y = {deg} (expected {expected}), leading coefficient {lc}")


def _oracle_check(param: TwoBridgeParam, raw: Polynomial, samples: int, seed: int) -> CheckResult:
    long_word, short_word = eta_words(param)
    for i, (A, B) in enumerate(sample_pairs(samples, seed)):
        u, v, w = trace_coordinates(A, B)
        lhs = raw.evaluate((-u, -v, -w))
        rhs = eval_word_matrix(long_word, A, B).trace() - eval_word_matrix(short_word, A, B).trace()
        if lhs != rhs:
            return CheckResult(False, f"sample {i}: polynomial gives {lhs}, matrices give {rhs}")
    return CheckResult(True, f"{samples} exact samples agree")


def run_checks(param: TwoBridgeParam, oracle_samples: int = 20, seed: int = 0) -> CharacterRingReport:
    """Compute eta and friends for ``param`` and run every check.

    Failed checks are recorded in the report, not raised.
    """
    if oracle_samples < 0:
        raise ValueError("oracle_samples must be >= 0")
    p = param.p
    raw = eta_raw(param)
    e = eta(param)
    ab = eta_ab()
    checks: dict[str, CheckResult] = {}

    checks["eta_degree"] = _degree_check(raw, p + 1)

    try:
        nab = eta_nab(param)
    except NotDivisible:
        nab = None
        checks["factorization"] = CheckResult(False, "eta is not divisible by eta_ab")
    else:
        ok = ab * nab == e
        checks["factorization"] = CheckResult(ok, "eta == eta_ab * eta_nab" if ok else "product mismatch")
    if nab is None:
        checks["eta_nab_degree"] = CheckResult(False, "eta_nab undefined")
    else:
        checks["eta_nab_degree"] = _degree_check(nab, p - 1)

    special = e.substitute({"x": 0, "xp": 0})
    target = _Y2_MINUS_4 * chebyshev_S(p - 1)
    ok = special == target or special == -target
    checks["specialization"] = CheckResult(ok, f"eta(0,0,y) = {special}")

    try:
        sqf = is_squarefree_univariate(special)
    except ArithmeticError as exc:
        checks["squarefree"] = CheckResult(False, str(exc))
    else:
        checks["squarefree"] = CheckResult(sqf, "gcd(f, f') is constant" if sqf else "repeated factor")

    checks["oracle"] = _oracle_check(param, raw, oracle_samples, seed)

    return CharacterRingReport(param=param, eta=e, eta_ab=ab, eta_nab=nab, checks=checks)
