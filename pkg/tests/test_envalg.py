import pytest

from elchi.envalg import (
    E, J, P1, P2, UElement, UTensorElement, commutator, ell_action, ell_direct, lambda_action,
    lambda_direct, named_element, prop24_crosscheck, u_antipode, u_coproduct, u_counit, u_f_pairing,
    u_star, u_window,
)
from elchi.funalg import FElement, a1, a2, f_counit, f_window, th
from elchi.qplane import chi, plane_lambda
from elchi.scalar import I, ONE, Z

one = UElement.one()


def test_normal_product_examples():
    assert J() * P1() == P1() * J() + E(2).scale(I / (2 * Z)) - E(-2).scale(I / (2 * Z))
    assert J() * E(2) == E(2) * J() - (P1() * E(2)).scale(I * Z)
    assert P1() * P2() == P2() * P1()
    assert commutator(J(), P2()) == P1().scale(-I)


def test_coproduct_examples():
    assert u_coproduct(P2()) == UTensorElement.pure(P2(), one) + UTensorElement.pure(one, P2())
    assert u_coproduct(P1()) == UTensorElement.pure(E(-1), P1()) + UTensorElement.pure(P1(), E(1))
    hp = named_element("Hplus")
    assert u_coproduct(hp) == UTensorElement.pure(one, hp) + UTensorElement.pure(hp, E(2))


def test_antipode_counit_star_examples():
    assert u_antipode(P1()) == -P1()
    assert u_antipode(J()) == -J() - P1().scale(I * Z / 2)
    assert u_antipode(E(3)) == E(-3)
    assert u_counit(J()).is_zero()
    assert u_counit(E(-2)) == ONE
    assert u_counit(named_element("Casimir")).is_zero()
    assert u_star(P1().scale(Z)) == P1().scale(Z)
    tau, nu1 = named_element("tau"), named_element("nu1")
    assert u_star(tau) == -tau - nu1.scale(I * Z)
    assert u_star(J() * P1()) == P1() * J()


def test_named_elements():
    assert named_element("X") == J() - P1().scale(I * Z / 4)
    zinv2 = Z ** -2
    assert named_element("Casimir") == E(2).scale(zinv2) - one.scale(2 * zinv2) + E(-2).scale(zinv2) + P1() ** 2
    assert named_element("Uplus") == (one + E(-2)).scale(ONE / 2) - (E(-1) * P1()).scale(I * Z / 2)
    with pytest.raises(KeyError):
        named_element("nope")


def test_pairing_examples():
    assert u_f_pairing(named_element("nu1"), a1()) == ONE
    for l in range(-3, 4):
        assert u_f_pairing(named_element("tau"), th(l)) == -l * I
    for key in f_window(1, 2):
        f = FElement.basis(key)
        assert u_f_pairing(one, f) == f_counit(f)
    assert u_f_pairing(E(2), a2()) == I * Z


def test_action_examples():
    for key in f_window(2, 3):
        l, m, n = key
        f = FElement.basis(key)
        expected = FElement.basis((l, m, n - 1)).scale(-n * I) if n else FElement.zero()
        assert lambda_action(P2(), f) == expected
        assert ell_action(named_element("tau"), f) == f.scale(-l * I)
        assert ell_action(one, f) == f
    assert lambda_action(named_element("Jscript"), a1()) == a2().scale(I)
    assert plane_lambda(E(-2), chi()) == chi() + 1
    assert not ell_action(named_element("X"), a1())
    assert not lambda_action(named_element("X"), FElement.one())


@pytest.mark.parametrize("u", [P1(), J(), E(-1), named_element("Hminus"), P1() * J()], ids=str)
def test_fast_action_matches_pairing_definition(u):
    for key in f_window(1, 2):
        f = FElement.basis(key)
        assert lambda_action(u, f) == lambda_direct(u, f)
        assert ell_action(u, f) == ell_direct(u, f)


def test_prop24_small_window():
    reps = prop24_crosscheck(lmax=1, degree=2)
    assert reps["P1"].passed and reps["P2"].passed
    assert reps["J"].informational
    assert reps["J"].details["discrepancies_confined_to_positive_z"]


def test_pbw_associativity_small_window():
    mons = [UElement.basis(k) for k in u_window(1, 1)]
    for x in mons:
        for y in mons:
            for w in mons:
                assert (x * y) * w == x * (y * w)
