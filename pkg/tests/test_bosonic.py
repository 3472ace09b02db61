import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from glwedge.arith import LaurentPoly, VarId
from glwedge.bosonic import (
    BrElement,
    bf_iso,
    bf_iso_inv,
    from_schur_coordinates,
    h,
    module_action,
    remark_counterexample,
    schur_basis_decompose,
    schur_det,
    schur_det_of,
    schur_det_transformed,
    sigma_minus_bar_on_Br,
    sigma_minus_bar_on_h,
    sigma_minus_on_h,
)
from glwedge.exterior import ExtElement, basis_element
from glwedge.partitions import Partition, enumerate_partitions

e1, e2 = LaurentPoly.var(VarId("e", 1)), LaurentPoly.var(VarId("e", 2))
z = VarId("z", 1)
zinv = LaurentPoly.var(z, -1)
b = ExtElement.basis


def test_h_examples():
    assert h(3, -1) == 0
    assert h(1, 3) == e1 ** 3
    assert h(2, 2) == e1 ** 2 - e2
    assert h(4, 0) == 1


def test_schur_det_examples():
    assert schur_det((), 3) == 1
    assert schur_det((1, 1), 2) == e2
    # the 2x2 determinant h1^2 - h2 vanishes in B_1, but schur_det refuses l(lam) > r
    assert schur_det_of((1, 1), 2, lambda j: h(1, j).poly) == 0
    with pytest.raises(ValueError):
        schur_det((1, 1), 1)


def test_schur_basis_decompose_examples():
    assert schur_basis_decompose(BrElement(2, e2)) == {Partition((1, 1)): 1}
    assert schur_basis_decompose(BrElement(3, 1)) == {Partition(()): 1}
    assert schur_basis_decompose(h(2, 2)) == {Partition((2,)): 1}


def test_bf_iso_examples():
    assert bf_iso(schur_det((1,), 2)) == b((2, 0))
    assert bf_iso_inv(b((1, 0))) == 1
    assert bf_iso(BrElement(2, e2)) == b((2, 1))
    with pytest.raises(ValueError):
        bf_iso_inv(b((1, 0)) + b((0,)))


def test_module_action_examples():
    assert module_action(h(1, 2), basis_element(1, ())) == basis_element(1, (2,))
    u = basis_element(3, (2, 1))
    assert module_action(BrElement(3, 1), u) == u
    assert module_action(BrElement(2, e2), b((1, 0))) == b((2, 1))


def test_lowering_on_h_examples():
    assert sigma_minus_bar_on_h(2, 0, z) == 1
    assert sigma_minus_bar_on_h(2, 2, z) == (e1 ** 2 - e2) - e1 * zinv
    assert sigma_minus_on_h(2, 1, z) == e1 + zinv


def test_transformed_determinant_examples():
    transformed, image = remark_counterexample()
    assert transformed == zinv * zinv - e1 * zinv
    assert image == 0
    assert schur_det_transformed((), 2, lambda j: sigma_minus_bar_on_h(2, j, z)) == 1
    got = schur_det_transformed((1,), 2, lambda j: sigma_minus_bar_on_h(2, j, z))
    assert got == sigma_minus_bar_on_Br(schur_det((1,), 2), z).poly
    with pytest.raises(ValueError):
        schur_det_transformed((1, 1), 1, lambda j: sigma_minus_bar_on_h(1, j, z))


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_giambelli(r):
    vac = basis_element(r, ())
    for lam in enumerate_partitions(r, 6):
        assert module_action(schur_det(lam, r), vac) == basis_element(r, lam), lam


@pytest.mark.parametrize("r", [1, 2, 3])
def test_lowering_commutes_with_schur_det(r):
    for lam in enumerate_partitions(r, 4):
        via_ext = sigma_minus_bar_on_Br(schur_det(lam, r), z).poly
        in_br = schur_det_transformed(lam, r, lambda j: sigma_minus_bar_on_h(r, j, z))
        assert via_ext == in_br, lam


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_decompose_inverts_schur_det(r):
    for lam in enumerate_partitions(r, 6):
        assert schur_basis_decompose(schur_det(lam, r)) == {lam: 1}


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=3), st.dictionaries(
    st.lists(st.integers(min_value=0, max_value=3), max_size=3).map(lambda xs: Partition(sorted(xs, reverse=True))),
    st.integers(min_value=-3, max_value=3).filter(bool), max_size=4))
def test_schur_coordinates_roundtrip(r, coords):
    coords = {lam: c for lam, c in coords.items() if lam.length <= r}
    x = from_schur_coordinates(r, coords)
    assert schur_basis_decompose(x) == coords
    assert bf_iso_inv(bf_iso(x), r) == x
