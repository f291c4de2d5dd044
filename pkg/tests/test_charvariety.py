import math

import pytest

from tbchar.charvariety import chebyshev_S, delta, eta, eta_ab, eta_nab, eta_raw, eta_words, run_checks
from tbchar.linkparam import TwoBridgeParam, all_params
from tbchar.polyring import Polynomial, is_squarefree_univariate
from tbchar.traceengine import to_barred, trace_of_word
from tbchar.words import X, X_INV, XP, XP_INV, Word

x, xp, y = (Polynomial.var(n) for n in ("x", "xp", "y"))
HOPF = TwoBridgeParam(2, 1)
HOPF_ETA = x**2 + xp**2 + y**2 + x * xp * y - 4


def test_hopf_eta():
    assert eta(HOPF) == HOPF_ETA
    assert eta_nab(HOPF) == 1


def test_eta_words_hopf():
    long_word, short_word = eta_words(HOPF)
    assert long_word == Word((X_INV, XP, X, XP_INV))
    assert short_word == Word((XP, XP_INV))


def test_eta_ab():
    assert eta_ab().constant_term() == -4
    assert eta_ab().substitute({"x": 0, "xp": 0}) == y**2 - 4
    commutator = to_barred(trace_of_word(Word((X, XP, X_INV, XP_INV))))
    assert commutator - 2 == eta_ab()


def test_b41_specialization():
    special = eta(TwoBridgeParam(4, 1)).substitute({"x": 0, "xp": 0})
    assert special in ((y**2 - 4) * y, -(y**2 - 4) * y)
    assert eta_nab(TwoBridgeParam(4, 1)).substitute({"x": 0, "xp": 0}) in (y, -y)


@pytest.mark.parametrize("param", list(all_params(8)), ids=str)
def test_degrees(param):
    p = param.p
    raw = eta_raw(param)
    assert raw.y_degree() == p + 1
    assert raw.leading_coefficient_in_y() in (Polynomial.constant(1), Polynomial.constant(-1))
    assert eta(param).leading_coefficient_in_y() == 1
    nab = eta_nab(param)
    assert nab.y_degree() == p - 1
    assert nab.leading_coefficient_in_y() == 1


def test_chebyshev_examples():
    assert chebyshev_S(0) == 1
    assert chebyshev_S(1) == y
    assert chebyshev_S(2) == y**2 - 1
    assert chebyshev_S(3) == y**3 - 2 * y
    with pytest.raises(ValueError):
        chebyshev_S(-1)


def test_delta_examples():
    assert delta(1) == y**2 - 4
    assert delta(2) == -((y**2 - 4) * y)
    assert delta(3) == (y**2 - 4) * (y**2 - 1)


def test_delta_matches_trace_definition():
    # delta_n = tr((XXp)^(n+1) - (XpX)^(n-1)) in barred coordinates
    for n in range(1, 10):
        long_word = Word((X, XP) * (n + 1))
        short_word = Word((XP, X) * (n - 1))
        assert delta(n) == to_barred(trace_of_word(long_word) - trace_of_word(short_word))


def test_delta_closed_form():
    for n in range(1, 65):
        assert delta(n) == (y**2 - 4) * chebyshev_S(n - 1) * (-1) ** (n - 1)


def test_chebyshev_roots():
    for p in range(2, 17):
        coeffs = chebyshev_S(p - 1).univariate_coeffs()
        for j in range(1, p):
            t = 2 * math.cos(math.pi * j / p)
            assert abs(sum(c * t**k for k, c in enumerate(coeffs))) < 1e-9


@pytest.mark.parametrize("param", list(all_params(8)), ids=str)
def test_specialization_and_squarefree(param):
    special = eta(param).substitute({"x": 0, "xp": 0})
    assert special == (y**2 - 4) * chebyshev_S(param.p - 1)
    assert is_squarefree_univariate(special)


def test_run_checks_examples():
    for twop, q in [(2, 1), (6, 5), (6, 1)]:
        report = run_checks(TwoBridgeParam(twop, q), oracle_samples=20, seed=1)
        assert report.passed, report.failures()
    assert run_checks(HOPF, 5).eta_nab == 1


def test_inequivalent_links_differ():
    assert eta(TwoBridgeParam(6, 1)) != eta(TwoBridgeParam(6, 5))


def test_report_json_schema():
    doc = run_checks(TwoBridgeParam(6, 5), 3).to_json()
    assert doc["link"] == {"twop": 6, "q": 5}
    assert set(doc) == {"link", "eta", "eta_ab", "eta_nab", "checks"}
    assert Polynomial.from_json(doc["eta"]) == eta(TwoBridgeParam(6, 5))
    assert all(doc["checks"].values())


def test_negative_samples_rejected():
    with pytest.raises(ValueError):
        run_checks(HOPF, -1)
