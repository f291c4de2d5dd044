import json

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from tbchar.polyparse import parse
from tbchar.polyring import (
    BARRED,
    TRACE,
    LeadingCoefficientNotUnit,
    NotDivisible,
    NotUnivariate,
    Polynomial,
    VariableSet,
    VariableSetMismatch,
    ZeroPolynomialError,
    is_squarefree_univariate,
)

from strategies import nonzero_polynomials, polynomials, unit_leading_in_y

x, xp, y = (Polynomial.var(n) for n in ("x", "xp", "y"))
u, v, w = (Polynomial.var(n, TRACE) for n in ("u", "v", "w"))
ETA_AB = y**2 + x**2 + xp**2 + x * xp * y - 4

_SX, _SXP, _SY = sympy.symbols("x xp y")


def to_sympy(f: Polynomial):
    return sum(c * _SX**a * _SXP**b * _SY**e for (a, b, e), c in f.terms.items())


def test_zero_has_no_terms():
    assert Polynomial().terms == {}
    assert Polynomial({(1, 0, 0): 0}).is_zero()
    assert Polynomial() == 0


def test_variable_set_order_matters():
    assert VariableSet(("x", "xp", "y")) != VariableSet(("xp", "x", "y"))
    with pytest.raises(ValueError):
        VariableSet(("x", "x", "y"))


def test_add_examples():
    assert y**2 + (-(y**2)) == 0
    assert (x + 1) + (x - 1) == 2 * x
    assert ETA_AB + 4 == y**2 + x**2 + xp**2 + x * xp * y


def test_mul_examples():
    f = x * y + 3
    assert f * 1 == f
    assert (y - 2) * (y + 2) == y**2 - 4
    s2 = y**2 - 1
    # frozen from sympy.expand((y**2-4)*(y**2-1))
    assert (y**2 - 4) * s2 == y**4 - 5 * y**2 + 4


def test_variable_set_mismatch():
    with pytest.raises(VariableSetMismatch):
        x + u
    with pytest.raises(VariableSetMismatch):
        x * u


def test_substitute_examples():
    assert ETA_AB.substitute({"x": 0, "xp": 0}) == y**2 - 4
    f = x**2 * y + 3 * xp
    assert f.substitute({}) == f
    assert f.substitute({"x": x, "xp": xp, "y": y}) == f
    g = (u * v * w).substitute({"u": -x, "v": -xp, "w": -y}, variables=BARRED)
    assert g == -(x * xp * y)


def test_substitute_requires_target_images():
    with pytest.raises(VariableSetMismatch):
        (u * v).substitute({"u": -x}, variables=BARRED)


def test_divide_exact_examples():
    assert (y**2 - 4).divide_exact(y - 2) == y + 2
    assert ETA_AB.divide_exact(ETA_AB) == 1
    with pytest.raises(NotDivisible):
        (y**2 - 4).divide_exact(y - 1)
    with pytest.raises(ZeroDivisionError):
        y.divide_exact(Polynomial())


def test_divide_exact_rejects_coefficient_mismatch():
    with pytest.raises(NotDivisible):
        (x + 1).divide_exact(Polynomial.constant(2))


def test_divmod_y_examples():
    g = y**2 - 4
    f = x * y + 7
    assert f.divmod_y(g) == (0, f)
    # frozen from sympy.div(y**3, y**2 - 4) = (y, 4*y)
    assert (y**3).divmod_y(g) == (y, 4 * y)
    assert ETA_AB.divmod_y(ETA_AB) == (1, 0)


def test_divmod_y_non_unit_leading():
    with pytest.raises(LeadingCoefficientNotUnit):
        y.divmod_y(2 * y + 1)
    with pytest.raises(LeadingCoefficientNotUnit):
        y.divmod_y(x * y + 1)


def test_derivative_examples():
    assert (y**2 - 4).derivative("y") == 2 * y
    assert (x * xp).derivative("y") == 0
    assert ((y**2 - 4) * y).derivative("y") == 3 * y**2 - 4


def test_squarefree_examples():
    # gcd(y^3 - 4y, 3y^2 - 4) == 1 per sympy
    assert is_squarefree_univariate((y**2 - 4) * y)
    assert not is_squarefree_univariate((y - 2) ** 2)
    assert is_squarefree_univariate((y**2 - 4) * (y**2 - 1))
    assert is_squarefree_univariate(Polynomial.constant(5))


def test_squarefree_errors():
    with pytest.raises(ZeroPolynomialError):
        is_squarefree_univariate(Polynomial())
    with pytest.raises(NotUnivariate):
        is_squarefree_univariate(x * y)


@given(st.lists(st.integers(-20, 20), min_size=1, max_size=7))
def test_squarefree_matches_sympy(coeffs):
    f = Polynomial.univariate(coeffs)
    assume(not f.is_zero())
    sf = to_sympy(f)
    expected = sympy.degree(sympy.gcd(sf, sympy.diff(sf, _SY)), _SY) <= 0
    assert is_squarefree_univariate(f) == expected


def test_text_and_json():
    assert ETA_AB.to_text() == "x*xp*y + x^2 + xp^2 + y^2 - 4"
    assert Polynomial().to_text() == "0"
    assert (-(y**3) + 1).to_text() == "-y^3 + 1"
    doc = ETA_AB.to_json()
    assert doc["vars"] == ["x", "xp", "y"]
    assert doc["terms"][0] == {"coeff": "1", "exp": [1, 1, 1]}
    assert doc["terms"][-1] == {"coeff": "-4", "exp": [0, 0, 0]}
    assert Polynomial.from_json(json.loads(json.dumps(doc))) == ETA_AB


def test_big_coefficients_survive_json():
    f = Polynomial.constant(10**40 + 1) * y
    doc = json.loads(json.dumps(f.to_json()))
    assert doc["terms"][0]["coeff"] == str(10**40 + 1)
    assert Polynomial.from_json(doc) == f


def test_evaluate():
    assert ETA_AB.evaluate((1, 2, 3)) == 9 + 1 + 4 + 6 - 4


# -- properties ---------------------------------------------------------------


@given(polynomials(), polynomials(), polynomials())
def test_ring_axioms(f, g, h):
    assert f + g == g + f
    assert f * g == g * f
    assert (f + g) + h == f + (g + h)
    assert (f * g) * h == f * (g * h)
    assert f * (g + h) == f * g + f * h
    assert f + 0 == f and f * 1 == f
    assert f - f == 0


@given(polynomials(), polynomials())
def test_mul_matches_sympy(f, g):
    assert sympy.expand(to_sympy(f * g) - to_sympy(f) * to_sympy(g)) == 0


@given(polynomials(), nonzero_polynomials())
def test_divide_exact_inverts_mul(f, g):
    assert (f * g).divide_exact(g) == f


@given(polynomials(), unit_leading_in_y())
def test_divmod_y_reassembles(f, g):
    q, r = f.divmod_y(g)
    assert g * q + r == f
    assert r.y_degree() < g.y_degree()


@given(polynomials(max_terms=4), polynomials(max_terms=4), polynomials(max_terms=3), polynomials(max_terms=3))
@settings(max_examples=50)
def test_substitute_is_homomorphism(f, g, a, b):
    sub = {"x": a, "y": b}
    assert (f * g).substitute(sub) == f.substitute(sub) * g.substitute(sub)
    assert (f + g).substitute(sub) == f.substitute(sub) + g.substitute(sub)


@given(polynomials())
def test_text_round_trip(f):
    assert parse(f.to_text()) == f


@given(polynomials())
def test_json_round_trip(f):
    assert Polynomial.from_json(json.loads(json.dumps(f.to_json()))) == f
