"""Sparse polynomials in three variables with arbitrary-precision integer coefficients.

A polynomial is a frozen map from exponent triples ``(a, b, c)`` to nonzero
``int`` coefficients.  The third variable is the distinguished one: division
with remainder and the square-free test work in it.

Two variable sets are used throughout the package::

    TRACE  = (u, v, w)    traces of X, X', XX'
    BARRED = (x, xp, y)   their negatives
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "VariableSet",
    "TRACE",
    "BARRED",
    "Polynomial",
    "PolynomialError",
    "VariableSetMismatch",
    "NotDivisible",
    "LeadingCoefficientNotUnit",
    "ZeroPolynomialError",
    "NotUnivariate",
    "is_squarefree_univariate",
]

Exponent = tuple[int, int, int]


class PolynomialError(ArithmeticError):
    pass


class VariableSetMismatch(PolynomialError, ValueError):
    pass


class NotDivisible(PolynomialError):
    pass


class LeadingCoefficientNotUnit(PolynomialError):
    pass


class ZeroPolynomialError(PolynomialError):
    pass


class NotUnivariate(PolynomialError, ValueError):
    pass


@dataclass(frozen=True)
class VariableSet:
    names: tuple[str, str, str]

    def __post_init__(self):
        if len(self.names) != 3 or len(set(self.names)) != 3:
            raise ValueError(f"need three distinct variable names, got {self.names!r}")

    def index(self, var: Union[str, int]) -> int:
        if isinstance(var, int):
            if not 0 <= var < 3:
                raise IndexError(var)
            return var
        try:
            return self.names.index(var)
        except ValueError:
            raise KeyError(f"{var!r} is not one of {self.names}") from None

    def __iter__(self) -> Iterator[str]:
        return iter(self.names)

    def __str__(self):
        return "(" + ", ".join(self.names) + ")"


TRACE = VariableSet(("u", "v", "w"))
BARRED = VariableSet(("x", "xp", "y"))

_UNIT = (0, 0, 0)


def _order_key(exp: Exponent):
    # sorted() ascending on this key gives: total degree descending, then
    # lexicographically descending with the first variable most significant
    return (-sum(exp), -exp[0], -exp[1], -exp[2])


def _add_exp(e1: Exponent, e2: Exponent) -> Exponent:
    return (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])


class Polynomial:
    """Immutable sparse polynomial.

    Supports ``+ - *`` and ``**`` (non-negative integer powers) with other
    polynomials over the same :class:`VariableSet` and with plain ints.
    Equality is structural and includes the variable set.
    """

    __slots__ = ("_vars", "_terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, variables: VariableSet = BARRED):
        clean: dict[Exponent, int] = {}
        for exp, coeff in (terms or {}).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 3 or min(exp) < 0:
                raise ValueError(f"bad exponent {exp!r}")
            if not isinstance(coeff, int) or isinstance(coeff, bool):
                raise TypeError(f"coefficients must be int, got {type(coeff).__name__}")
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
                if clean[exp] == 0:
                    del clean[exp]
        self._vars = variables
        self._terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exponent, int], variables: VariableSet) -> "Polynomial":
        # trusted constructor: terms already canonical
        obj = cls.__new__(cls)
        obj._vars = variables
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c: int, variables: VariableSet = BARRED) -> "Polynomial":
        return cls._raw({_UNIT: c} if c else {}, variables)

    @classmethod
    def var(cls, name: Union[str, int], variables: VariableSet = BARRED) -> "Polynomial":
        exp = [0, 0, 0]
        exp[variables.index(name)] = 1
        return cls._raw({tuple(exp): 1}, variables)

    @classmethod
    def monomial(cls, exp: Exponent, coeff: int = 1, variables: VariableSet = BARRED) -> "Polynomial":
        return cls({tuple(exp): coeff}, variables)

    @classmethod
    def univariate(cls, coeffs: Iterable[int], variables: VariableSet = BARRED) -> "Polynomial":
        """Polynomial in the third variable from coefficients, constant term first."""
        return cls({(0, 0, k): c for k, c in enumerate(coeffs)}, variables)

    # -- inspection --------------------------------------------------------

    @property
    def variables(self) -> VariableSet:
        return self._vars

    @property
    def terms(self) -> dict[Exponent, int]:
        return dict(self._terms)

    def items(self) -> list[tuple[Exponent, int]]:
        """Terms in canonical order."""
        return sorted(self._terms.items(), key=lambda kv: _order_key(kv[0]))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return all(exp == _UNIT for exp in self._terms)

    def constant_term(self) -> int:
        return self._terms.get(_UNIT, 0)

    def degree(self, var: Union[str, int, None] = None) -> int:
        """Total degree, or degree in one variable.  The zero polynomial has degree -1."""
        if not self._terms:
            return -1
        if var is None:
            return max(sum(e) for e in self._terms)
        i = self._vars.index(var)
        return max(e[i] for e in self._terms)

    def y_degree(self) -> int:
        return self.degree(2)

    def coefficient_in_y(self, k: int) -> "Polynomial":
        """Coefficient of ``y**k`` as a polynomial in the first two variables."""
        return Polynomial._raw(
            {(a, b, 0): c for (a, b, e), c in self._terms.items() if e == k}, self._vars
        )

    def leading_coefficient_in_y(self) -> "Polynomial":
        return self.coefficient_in_y(self.y_degree())

    def involves(self, var: Union[str, int]) -> bool:
        i = self._vars.index(var)
        return any(e[i] for e in self._terms)

    def is_univariate_in_y(self) -> bool:
        return not (self.involves(0) or self.involves(1))

    def univariate_coeffs(self) -> list[int]:
        """Dense coefficient list in y, constant term first."""
        if not self.is_univariate_in_y():
            raise NotUnivariate(f"{self} involves more than {self._vars.names[2]}")
        out = [0] * (self.y_degree() + 1)
        for (_, _, c), coeff in self._terms.items():
            out[c] = coeff
        return out

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other._vars != self._vars:
                raise VariableSetMismatch(f"{self._vars} vs {other._vars}")
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return Polynomial.constant(other, self._vars)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for exp, c in other._terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return Polynomial._raw(out, self._vars)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({e: -c for e, c in self._terms.items()}, self._vars)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exponent, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = _add_exp(e1, e2)
                out[e] = out.get(e, 0) + c1 * c2
        return Polynomial._raw({e: c for e, c in out.items() if c}, self._vars)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative int")
        result = Polynomial.constant(1, self._vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c: int) -> "Polynomial":
        if not c:
            return Polynomial._raw({}, self._vars)
        return Polynomial._raw({e: c * v for e, v in self._terms.items()}, self._vars)

    def shift(self, exp: Exponent, coeff: int = 1) -> "Polynomial":
        """Multiply by the monomial ``coeff * var**exp``."""
        if not coeff:
            return Polynomial._raw({}, self._vars)
        return Polynomial._raw(
            {_add_exp(e, exp): coeff * c for e, c in self._terms.items()}, self._vars
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self._vars == other._vars and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self.is_constant() and self.constant_term() == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    # -- division ----------------------------------------------------------

    def divide_exact(self, divisor: "Polynomial") -> "Polynomial":
        """Return ``q`` with ``self == divisor * q`` over the integers.

        Raises :class:`NotDivisible` if no such ``q`` exists.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lead_exp, lead_c = divisor.items()[0]
        others = [(e, c) for e, c in divisor._terms.items() if e != lead_exp]
        rem = dict(self._terms)
        # max-heap on the canonical order, stale entries skipped on pop
        heap = [_order_key(e) for e in rem]
        heapq.heapify(heap)
        quotient: dict[Exponent, int] = {}
        while rem:
            key = heapq.heappop(heap)
            exp = (-key[1], -key[2], -key[3])
            c = rem.get(exp)
            if c is None:
                continue
            diff = (exp[0] - lead_exp[0], exp[1] - lead_exp[1], exp[2] - lead_exp[2])
            if min(diff) < 0 or c % lead_c:
                raise NotDivisible(f"{divisor} does not divide {self}")
            qc = c // lead_c
            quotient[diff] = qc
            del rem[exp]
            for e, gc in others:
                t = _add_exp(e, diff)
                val = rem.get(t, 0) - qc * gc
                if val:
                    if t not in rem:
                        heapq.heappush(heap, _order_key(t))
                    rem[t] = val
                else:
                    rem.pop(t, None)
        return Polynomial._raw(quotient, self._vars)

    def divmod_y(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        """Division with remainder in the third variable.

        ``divisor`` must have a leading coefficient of +1 or -1 as a polynomial
        in the third variable, so the division stays over the integers.
        Returns ``(q, r)`` with ``self == divisor*q + r`` and
        ``deg_y(r) < deg_y(divisor)``.
        """
        divisor = self._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        lc = divisor.leading_coefficient_in_y()
        if not (lc.is_constant() and lc.constant_term() in (1, -1)):
            raise LeadingCoefficientNotUnit(f"leading coefficient in y of {divisor} is {lc}")
        unit = lc.constant_term()
        d = divisor.y_degree()
        tail = [(e, c) for e, c in divisor._terms.items() if e[2] < d]
        # rows[k] holds the coefficient of y**k as {(a, b): c}
        rows: dict[int, dict[tuple[int, int], int]] = {}
        for (a, b, k), c in self._terms.items():
            rows.setdefault(k, {})[(a, b)] = c
        quotient: dict[Exponent, int] = {}
        for k in range(self.y_degree(), d - 1, -1):
            row = rows.pop(k, None)
            if not row:
                continue
            shift = k - d
            for (a, b), c in row.items():
                qc = c * unit
                quotient[(a, b, shift)] = qc
                for (ga, gb, gk), gc in tail:
                    target = rows.setdefault(gk + shift, {})
                    key = (a + ga, b + gb)
                    val = target.get(key, 0) - qc * gc
                    if val:
                        target[key] = val
                    else:
                        target.pop(key, None)
        remainder = {(a, b, k): c for k, row in rows.items() for (a, b), c in row.items()}
        return Polynomial._raw(quotient, self._vars), Polynomial._raw(remainder, self._vars)

    def remainder_y(self, divisor: "Polynomial") -> "Polynomial":
        return self.divmod_y(divisor)[1]

    # -- calculus and substitution -------------------------------------------

    def derivative(self, var: Union[str, int]) -> "Polynomial":
        i = self._vars.index(var)
        out = {}
        for exp, c in self._terms.items():
            if exp[i]:
                e = list(exp)
                e[i] -= 1
                out[tuple(e)] = c * exp[i]
        return Polynomial._raw(out, self._vars)

    def substitute(
        self,
        assignments: Mapping[Union[str, int], Union["Polynomial", int]],
        variables: VariableSet | None = None,
    ) -> "Polynomial":
        """Image under the ring homomorphism sending each assigned variable
        to its replacement.

        ``variables`` is the variable set of the result (default: unchanged).
        Unassigned variables are sent to the same-position variable of the
        result, which only makes sense when the variable sets agree.
        """
        target = variables or self._vars
        images: list[Polynomial] = []
        keyed = {self._vars.index(k): v for k, v in assignments.items()}
        for i in range(3):
            if i in keyed:
                img = keyed[i]
                if isinstance(img, int):
                    img = Polynomial.constant(img, target)
                elif img.variables != target:
                    raise VariableSetMismatch(f"replacement {img} is not over {target}")
            else:
                if target != self._vars and self.involves(i):
                    raise VariableSetMismatch(
                        f"no replacement for {self._vars.names[i]} into {target}"
                    )
                img = Polynomial.var(i, target)
            images.append(img)

        powers: list[dict[int, Polynomial]] = [{0: Polynomial.constant(1, target)} for _ in range(3)]

        def power(i: int, n: int) -> Polynomial:
            cache = powers[i]
            if n not in cache:
                cache[n] = power(i, n - 1) * images[i]
            return cache[n]

        result = Polynomial._raw({}, target)
        for (a, b, c), coeff in self._terms.items():
            result = result + (power(0, a) * power(1, b) * power(2, c)).scale(coeff)
        return result

    def evaluate(self, values: Iterable[int]) -> int:
        """Exact value at an integer point (one value per variable, in order)."""
        x0, x1, x2 = values
        total = 0
        for (a, b, c), coeff in self._terms.items():
            total += coeff * x0**a * x1**b * x2**c
        return total

    # -- output ------------------------------------------------------------

    def to_text(self) -> str:
        """Render in the input grammar, terms in canonical order."""
        if not self._terms:
            return "0"
        names = self._vars.names
        pieces = []
        for idx, (exp, c) in enumerate(self.items()):
            factors = []
            for name, e in zip(names, exp):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if idx == 0:
                pieces.append(("-" if c < 0 else "") + body)
            else:
                pieces.append((" - " if c < 0 else " + ") + body)
        return "".join(pieces)

    def to_json(self) -> dict:
        return {
            "vars": list(self._vars.names),
            "terms": [{"coeff": str(c), "exp": list(e)} for e, c in self.items()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "Polynomial":
        variables = VariableSet(tuple(doc["vars"]))
        terms: dict[Exponent, int] = {}
        for term in doc["terms"]:
            exp = tuple(term["exp"])
            if exp in terms:
                raise ValueError(f"duplicate exponent {exp}")
            terms[exp] = int(term["coeff"])
        return cls(terms, variables)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r}, vars={self._vars.names})"


def _trim(coeffs: list[Fraction]) -> list[Fraction]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_rem(f: list[Fraction], g: list[Fraction]) -> list[Fraction]:
    f = list(f)
    dg, lg = len(g) - 1, g[-1]
    while len(f) - 1 >= dg and f:
        q = f[-1] / lg
        shift = len(f) - 1 - dg
        for i, gc in enumerate(g):
            f[shift + i] -= q * gc
        _trim(f)
    return f


def univariate_gcd_degree(f: Polynomial, g: Polynomial) -> int:
    """Degree of gcd(f, g) over the rationals, both univariate in y."""
    a = _trim([Fraction(c) for c in f.univariate_coeffs()])
    b = _trim([Fraction(c) for c in g.univariate_coeffs()])
    while b:
        a, b = b, _poly_rem(a, b)
    return len(a) - 1


def is_squarefree_univariate(f: Polynomial) -> bool:
    """True iff ``f`` (univariate in y, nonzero) has no repeated factor over Q."""
    if f.is_zero():
        raise ZeroPolynomialError("square-freeness of the zero polynomial")
    if not f.is_univariate_in_y():
        raise NotUnivariate(f"{f} involves more than {f.variables.names[2]}")
    return univariate_gcd_degree(f, f.derivative(2)) <= 0
