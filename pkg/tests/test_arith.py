from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glwedge.arith import (
    LaurentPoly,
    VarId,
    WindowError,
    det,
    exact_divide,
    format_rational,
    lp_coefficient,
    lp_exp,
    lp_invert_unit,
    lp_log_unit,
    lp_mul,
    rat_add,
    rat_div,
    rat_mul,
    rat_neg,
    rational,
)

z, w, e1, e2 = VarId("z", 1), VarId("w", 1), VarId("e", 1), VarId("e", 2)
Z, W, E1, E2 = (LaurentPoly.var(v) for v in (z, w, e1, e2))


def test_rationals():
    assert rat_add(Fraction(1, 2), Fraction(1, 3)) == Fraction(5, 6)
    assert rational(Fraction(2, 4)) == Fraction(1, 2)
    assert rat_mul(Fraction(-1, 3), Fraction(3, 5)) == Fraction(-1, 5)
    assert rat_neg(Fraction(1, 7)) == Fraction(-1, 7)
    with pytest.raises(ZeroDivisionError):
        rat_div(1, 0)


def test_format_rational_is_p_over_q():
    assert format_rational(Fraction(-3, 6)) == "-1/2"
    assert format_rational(2) == "2/1"


def test_telescoping_product_in_window():
    geo = (1 + Z + Z ** 2 + Z ** 3).truncate({z: 3})
    prod = lp_mul(1 - Z, geo)
    assert prod == 1
    assert prod.horizon(z) == 3
    assert str(prod) == "1"


def test_inverse_times_var():
    assert LaurentPoly.var(w, -1) * W == 1


def test_identity_factor():
    p = (1 - Z * LaurentPoly.var(w, -1)) * LaurentPoly.constant(1)
    assert str(p) == "1 - z1*w1^-1"
    assert lp_coefficient(p, {}) == 1


def test_coefficient_window_contract():
    p = LaurentPoly.constant(1) + Z.scale(2)
    assert lp_coefficient(p, {z: 1}) == 2
    series = (1 + Z).truncate({z: 3})
    assert series.coefficient({z: 3}) == 0
    with pytest.raises(WindowError):
        series.coefficient({z: 5})


def test_invert_unit_examples():
    assert lp_invert_unit(1 - E1 * Z, z, 3) == LaurentPoly(
        {(): 1, (("e1", 1), ("z1", 1)): 1, (("e1", 2), ("z1", 2)): 1, (("e1", 3), ("z1", 3)): 1}
    )
    assert lp_invert_unit(LaurentPoly.constant(1), z, 5) == 1
    got = lp_invert_unit(1 - E1 * Z + E2 * Z ** 2, z, 2)
    want = 1 + E1 * Z + (E1 ** 2 - E2) * Z ** 2
    assert got.compare(want).equal
    assert got.horizon(z) == 2


def test_invert_rejects_non_unit():
    with pytest.raises(ValueError):
        lp_invert_unit(2 - Z, z, 3)


def test_truncated_times_exact_shifts_horizon():
    a = LaurentPoly.var(z, 5).truncate({z: 5})
    b = LaurentPoly.var(z, -10)
    # a known up to z^5 and b exact: the product is known up to z^-5
    assert (a * b).horizon(z) == -5


def test_log_exp_roundtrip():
    series = lp_invert_unit(1 - E1 * Z, z, 5)
    log = lp_log_unit(series, z, 5)
    for j in range(1, 6):
        assert log.extract({z: j}) == E1 ** j * LaurentPoly.constant(Fraction(1, j))
    assert lp_exp(log, z, 5) == series


def test_exact_divide():
    a = (Z - W) * (Z + W * 3)
    assert exact_divide(a, Z - W) == Z + W * 3
    with pytest.raises(ArithmeticError):
        exact_divide(Z * Z + 1, Z - W)


def test_det_small():
    assert det([[Z, 1], [1, W]]) == Z * W - 1
    assert det([]) == 1


def test_json_roundtrip():
    p = (LaurentPoly.constant(Fraction(1, 2)) - Z * LaurentPoly.var(w, -1)).truncate({z: 4})
    data = p.to_json()
    assert data == [{"exponents": {}, "coeff": "1/2"}, {"exponents": {"z1": 1, "w1": -1}, "coeff": "-1/1"}]
    assert LaurentPoly.from_json(data) == p


# --- properties ---------------------------------------------------------------

exps = st.integers(min_value=-2, max_value=3)
coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def polys(draw, window=None):
    n = draw(st.integers(min_value=0, max_value=4))
    terms = {}
    for _ in range(n):
        key = (("z1", draw(exps)), ("w1", draw(exps)))
        terms[key] = draw(coeffs)
    return LaurentPoly(terms, window)


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), polys())
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a + b == b + a


@settings(max_examples=60, deadline=None)
@given(polys(), polys(), st.integers(min_value=0, max_value=4))
def test_truncation_commutes_with_operations(a, b, D):
    win = {z: D}
    lhs = (a.truncate(win) * b.truncate(win))
    rhs = (a * b).truncate(win)
    assert lhs.compare(rhs).equal
    assert (a.truncate(win) + b).compare((a + b).truncate(win)).equal


@settings(max_examples=40, deadline=None)
@given(st.lists(coeffs, min_size=1, max_size=4), st.integers(min_value=0, max_value=6))
def test_inverse_is_inverse(cs, D):
    a = LaurentPoly.constant(1)
    for i, c in enumerate(cs, start=1):
        a = a + LaurentPoly.monomial({z: i}, c)
    inv = lp_invert_unit(a, z, D)
    prod = a * inv
    assert prod == 1
    assert prod.horizon(z) == D
