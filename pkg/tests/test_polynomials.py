from fractions import Fraction

import pytest

from matroid_workbench import BivariatePoly, InvalidInput, UnivariatePoly

from helpers import upoly


def test_bivariate_construction_drops_zeros():
    p = BivariatePoly({(1, 0): 2, (0, 1): 0})
    assert p.terms() == [((1, 0), 2)]
    assert p.coeff(0, 1) == 0
    assert not p.is_zero()
    assert BivariatePoly({}).is_zero()


def test_bivariate_rejects_negative_exponents_and_bad_keys():
    with pytest.raises(InvalidInput):
        BivariatePoly({(-1, 0): 1})
    with pytest.raises(InvalidInput):
        BivariatePoly({(0, -2): 1})


def test_bivariate_arithmetic():
    x = BivariatePoly.monomial(1, 0)
    y = BivariatePoly.monomial(0, 1)
    p = (x + y) * (x + y)
    assert dict(p.terms()) == {(2, 0): 1, (1, 1): 2, (0, 2): 1}
    assert (p - p).is_zero()
    assert p.scale(3).coeff(1, 1) == 6
    assert p.shift(1, 2).coeff(3, 2) == 1
    assert p.evaluate(Fraction(1, 2), 1) == Fraction(9, 4)
    assert p.degree_x() == 2 and p.degree_y() == 2 and p.total_degree() == 2


def test_bivariate_json_round_trip_and_term_order():
    p = BivariatePoly({(2, 0): 1, (1, 0): 1, (0, 1): 1})
    obj = p.to_json()
    # terms are emitted in descending lexicographic (x, y) order
    assert obj == {
        "terms": [
            {"x": 2, "y": 0, "c": "1"},
            {"x": 1, "y": 0, "c": "1"},
            {"x": 0, "y": 1, "c": "1"},
        ]
    }
    assert BivariatePoly.from_json(obj) == p

    q = BivariatePoly({(0, 3): -5, (4, 4): 7})
    assert BivariatePoly.from_json(q.to_json()) == q


def test_bivariate_json_rejects_duplicates_and_junk():
    with pytest.raises(InvalidInput):
        BivariatePoly.from_json(
            {"terms": [{"x": 1, "y": 0, "c": "1"}, {"x": 1, "y": 0, "c": "2"}]}
        )
    with pytest.raises(InvalidInput):
        BivariatePoly.from_json({"terms": [{"x": True, "y": 0, "c": "1"}]})
    with pytest.raises(InvalidInput):
        BivariatePoly.from_json({"terms": [{"x": 0, "y": 0, "c": "1.5"}]})
    with pytest.raises(InvalidInput):
        BivariatePoly.from_json({"nope": []})


def test_univariate_basics():
    p = upoly(1, -3, 2)  # u^2 - 3u + 2
    assert p.degree() == 2
    assert p.coeff(1) == -3
    assert p.evaluate(1) == 0
    assert p.evaluate(Fraction(1, 2)) == Fraction(3, 4)
    assert UnivariatePoly.zero().degree() == -1
    assert (p - p).is_zero()


def test_univariate_json_round_trip():
    p = upoly(1, 0, -7, 6)
    obj = p.to_json(name="u")
    exps = [t["u"] for t in obj["terms"]]
    assert exps == sorted(exps, reverse=True)
    assert UnivariatePoly.from_json(obj, name="u") == p


def test_divmod_linear_exact_division():
    # (u - 1)(u - 2) = u^2 - 3u + 2 divided at root 1
    p = upoly(1, -3, 2)
    q, rem = p.divmod_linear(1)
    assert rem == 0
    assert q == upoly(1, -2)
    q2, rem2 = p.divmod_linear(2)
    assert rem2 == 0
    assert q2 == upoly(1, -1)


def test_divmod_linear_remainder():
    p = upoly(1, 0, 1)  # u^2 + 1
    q, rem = p.divmod_linear(1)
    assert rem == 2
    assert q == upoly(1, 1)
    # reconstruct: p == q * (u - root) + rem
    u = UnivariatePoly.monomial(1)
    assert q * (u - upoly(1)) + upoly(rem) == p


def test_univariate_rejects_negative_exponent():
    with pytest.raises(InvalidInput):
        UnivariatePoly({-1: 1})
