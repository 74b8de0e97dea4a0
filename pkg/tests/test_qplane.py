import pytest
from hypothesis import given, settings, strategies as st

from elchi.envalg import E, J, P1, P2, named_element
from elchi.funalg import FElement, a1, th
from elchi.qplane import (
    NotInPlaneError, PlaneCoactionElement, PlaneElement, PochBasisElement, chi, chibar,
    coaction_via_coproduct, invariance_check, plane_coaction, plane_from_f, plane_lambda, plane_to_f,
    poch_basis_convert, poch_chi, poch_one_minus_chibar, pochhammer_poly, rho, rho_poly,
)
from elchi.scalar import I, ONE, Z

c, cb, one = chi(), chibar(), PlaneElement.one()


def test_commutation():
    assert cb * c == c * cb - c + cb
    assert (c - cb) * c == (c + 1) * (c - cb)
    assert one * (c * cb) == c * cb


def test_passage_to_f():
    assert plane_to_f(c) == (a1() - FElement.basis((0, 0, 1)).scale(I)).scale(Z ** -1)
    assert plane_to_f(one) == FElement.one()
    assert plane_from_f(a1()) == (c - cb).scale(Z / 2)
    with pytest.raises(NotInPlaneError):
        plane_from_f(th(1))
    assert plane_from_f(plane_to_f(c.scale(Z))) == c.scale(Z)


@given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), max_size=4))
@settings(max_examples=30, deadline=None)
def test_round_trip_through_f(keys):
    a = PlaneElement.zero()
    for k in keys:
        a = a + PlaneElement.basis(k)
    assert plane_from_f(plane_to_f(a)) == a


@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
@settings(max_examples=25, deadline=None)
def test_embedding_is_multiplicative(p, q, r, s):
    x, y = c ** p * cb ** q, c ** r * cb ** s
    assert plane_to_f(x * y) == plane_to_f(x) * plane_to_f(y)


def test_pochhammer_examples():
    assert poch_chi(0) == one
    assert poch_chi(2) == c ** 2 + c
    assert poch_one_minus_chibar(2) == cb ** 2 - 3 * cb + 2
    assert pochhammer_poly(c + 3, 2) == (c + 3) * (c + 4)


def test_rho_examples():
    assert rho() == c - c * cb
    assert rho_poly(0) == one
    assert rho_poly(1) == c - c * cb
    assert rho_poly(2) == rho() * (rho() + 2)
    assert rho_poly(3) == rho() * (rho() + 2) * (rho() + 6)


def test_poch_basis():
    coords = poch_basis_convert(c ** 2, "to_poch")
    assert coords == {PochBasisElement.make("chi", 0, 2): ONE, PochBasisElement.make("chi", 0, 1): -ONE}
    b = PochBasisElement.make("chi", 1, 1)
    elem = rho_poly(1) * poch_chi(1)
    assert poch_basis_convert(elem, "to_poch") == {b: ONE}
    assert poch_basis_convert({b: ONE}, "to_monomial") == elem
    labels = set()
    for p in range(4):
        labels |= set(poch_basis_convert(c ** p * cb ** (3 - p), "to_poch"))
    top = {lab for lab in labels if 2 * lab.ell + lab.r == 3}
    assert len(top) == 4


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), min_size=1, max_size=5))
@settings(max_examples=30, deadline=None)
def test_poch_round_trip(keys):
    a = PlaneElement.zero()
    for k in keys:
        a = a + PlaneElement.basis(k).scale(Z ** k[0])
    assert poch_basis_convert(poch_basis_convert(a, "to_poch"), "to_monomial") == a


def test_coaction():
    expected = PlaneCoactionElement.pure(th(1), c) + PlaneCoactionElement.pure(plane_to_f(c), one)
    assert plane_coaction(c) == expected
    assert plane_coaction(one) == PlaneCoactionElement.pure(FElement.one(), one)
    assert plane_coaction(c * cb) == plane_coaction(c) * plane_coaction(cb)
    lhs = plane_coaction(c) * plane_coaction(cb) - plane_coaction(cb) * plane_coaction(c)
    assert lhs == plane_coaction(c) - plane_coaction(cb)
    for a in (c, cb, c * cb ** 2):
        assert plane_coaction(a) == coaction_via_coproduct(a)


def test_invariance():
    assert invariance_check(plane_to_f(c ** 2 * cb))
    assert not invariance_check(th(1))
    assert invariance_check(FElement.one())


@pytest.mark.parametrize("u", [P1(), P2(), J(), E(-1), named_element("Hplus"), named_element("Jscript")], ids=str)
def test_plane_route_matches_f_route(u):
    for p in range(3):
        for q in range(3 - p):
            a = c ** p * cb ** q
            assert plane_lambda(u, a, route="plane") == plane_lambda(u, a, route="f")


def test_u_plus_minus_on_monomials():
    up, um = named_element("Uplus"), named_element("Uminus")
    for n in range(3):
        for m in range(3):
            assert plane_lambda(up, c ** n * cb ** m) == c ** n * (cb + 1) ** m
            assert plane_lambda(um, cb ** m * c ** n) == (cb - 1) ** m * c ** n
