from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glwedge.arith import LaurentPoly, VarId, lp_invert_unit
from glwedge.bosonic import E
from glwedge.partitions import Partition, enumerate_partitions
from glwedge.symfun import (
    VarSet,
    cauchy_expand,
    complete,
    ei_reciprocal,
    elementary,
    exp_of_newton,
    jacobi_trudi,
    newton_vars,
    power_sum,
    schur,
    vandermonde,
)

z1, z2, z3 = (LaurentPoly.var(VarId("z", i)) for i in (1, 2, 3))
w1, w2 = (LaurentPoly.var(VarId("w", i)) for i in (1, 2))
Z1, Z2, Z3 = VarSet("z", 1), VarSet("z", 2), VarSet("z", 3)


def inv(x):
    return LaurentPoly.var(VarId("z", x), -1)


def test_elementary_examples():
    assert elementary(1, Z2) == z1 + z2
    assert elementary(3, Z2) == 0
    assert elementary(2, Z2.inverse()) == inv(1) * inv(2)
    assert elementary(0, Z3) == 1


def test_complete_and_power_sum_examples():
    assert complete(2, Z2) == z1 ** 2 + z1 * z2 + z2 ** 2
    assert complete(0, Z3) == 1
    assert complete(1, Z1) == z1
    assert power_sum(2, Z2) == z1 ** 2 + z2 ** 2
    assert power_sum(1, Z1) == z1
    assert power_sum(3, Z1.inverse()) == inv(1) ** 3


def test_vandermonde_examples():
    assert vandermonde(VarSet("w", 2)) == w2 - w1
    assert vandermonde(VarSet("w", 1)) == 1
    assert vandermonde(Z3) == (z2 - z1) * (z3 - z1) * (z3 - z2)


def test_schur_examples():
    assert schur((1,), Z2) == z1 + z2
    assert schur((1, 1), Z2) == z1 * z2
    assert schur((2,), Z2) == complete(2, Z2)
    with pytest.raises(ValueError):
        schur((1, 1, 1), Z2)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_schur_is_jacobi_trudi(k):
    vs = VarSet("z", k)
    for lam in enumerate_partitions(k, 6):
        assert schur(lam, vs) == jacobi_trudi(lam, vs), lam


def test_ei_reciprocal_examples():
    assert ei_reciprocal(1, 2)[0]
    assert ei_reciprocal(2, 2)[2] == 1
    ok, lhs, _ = ei_reciprocal(0, 3)
    assert ok and lhs == inv(1) * inv(2) * inv(3)


@pytest.mark.parametrize("k", range(1, 6))
def test_ei_reciprocal_all(k):
    assert all(ei_reciprocal(i, k)[0] for i in range(k + 1))


@pytest.mark.parametrize("k,D", [(1, 3), (2, 2), (1, 0), (3, 2)])
def test_cauchy(k, D):
    ok, lhs, rhs = cauchy_expand(k, D)
    assert ok
    assert lhs.coefficient({}) == 1


def test_newton_examples():
    e1 = LaurentPoly.var(VarId("e", 1))
    x = newton_vars(1, 2)
    assert x[0] == e1 and x[1] == (e1 ** 2).scale(Fraction(1, 2))
    assert newton_vars(2, 1)[0] == e1
    with pytest.raises(ValueError):
        newton_vars(2, 0)


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.integers(min_value=1, max_value=5))
def test_newton_chain_reproduces_inverse(r, D):
    t = VarId("z", 1)
    assert exp_of_newton(newton_vars(r, D), t, D) == lp_invert_unit(E(r, t), t, D)


@settings(max_examples=30, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=3), max_size=2), st.integers(min_value=2, max_value=3))
def test_schur_symmetric_in_two_variables(parts, k):
    lam = Partition(sorted(parts, reverse=True))
    s = schur(lam, VarSet("z", k))
    swap = {"z1": "z2", "z2": "z1"}
    swapped = LaurentPoly.zero()
    for exps, c in s.items():
        swapped = swapped + LaurentPoly.monomial({swap.get(str(v), str(v)): e for v, e in exps.items()}, c)
    assert swapped == s
