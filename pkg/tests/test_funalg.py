import pytest
from hypothesis import given, settings, strategies as st

from elchi.funalg import (
    FElement, FTensorElement, a1, a2, f_antipode, f_coproduct, f_counit,
    f_star, f_window, th,
)
from elchi.scalar import I, ONE, Z

half = ONE / 2


def test_normal_product_examples():
    assert a2() * a1() == a1() * a2() - a1().scale(I * Z)
    assert FElement.one() * (th(2) * a1() * a2()) == th(2) * a1() * a2()
    expected = th(1) * a1() - FElement.one().scale(Z / 2) + th(1).scale(Z) - th(2).scale(Z / 2)
    assert a1() * th(1) == expected


def test_defining_relations():
    # [a1, a2] = i z a1 and Th(l) Th(m) = Th(l + m)
    assert a1() * a2() - a2() * a1() == a1().scale(I * Z)
    assert th(2) * th(-3) == th(-1)
    assert th(0) == FElement.one()


def test_coproduct_examples():
    one = FElement.one()
    assert f_coproduct(th(3)) == FTensorElement.pure(th(3), th(3))
    assert f_coproduct(one) == FTensorElement.pure(one, one)
    cos = (th(1) + th(-1)).scale(half)
    isin = (th(1) - th(-1)).scale(half * I)
    expected = FTensorElement.pure(cos, a1()) - FTensorElement.pure(isin, a2()) + FTensorElement.pure(a1(), one)
    assert f_coproduct(a1()) == expected


def test_antipode_and_counit_examples():
    assert f_antipode(th(1)) == th(-1)
    expected = -((th(1) + th(-1)) * a1()).scale(half) - ((th(1) - th(-1)) * a2()).scale(half * I)
    assert f_antipode(a1()) == expected
    assert f_antipode(FElement.one()) == FElement.one()
    assert f_counit(th(5)) == ONE
    assert f_counit(a1()).is_zero()
    assert f_counit(th(2) * a1() * a2()).is_zero()


def test_star_examples():
    assert f_star(th(1)) == th(-1)
    assert f_star(a1() * a2()) == a1() * a2() - a1().scale(I * Z)
    expected = th(-1) * a1() + (th(-2) - th(-1).scale(2 * ONE) + FElement.one()).scale(Z / 2)
    assert f_star(th(1) * a1()) == expected


window = f_window(1, 2)
monos = st.sampled_from(window).map(FElement.basis)


@given(monos, monos, monos)
@settings(max_examples=30, deadline=None)
def test_associativity(f, g, h):
    assert (f * g) * h == f * (g * h)


@given(monos, monos)
@settings(max_examples=30, deadline=None)
def test_star_antimultiplicative_and_antipode_antimultiplicative(f, g):
    assert f_star(f * g) == f_star(g) * f_star(f)
    assert f_antipode(f * g) == f_antipode(g) * f_antipode(f)
    assert f_star(f_star(f)) == f


@pytest.mark.parametrize("key", window)
def test_antipode_axiom_small_window(key):
    f = FElement.basis(key)
    left = right = FElement.zero()
    for (k1, k2), c in f_coproduct(f).terms.items():
        b1, b2 = FElement.basis(k1), FElement.basis(k2)
        left = left + (f_antipode(b1) * b2).scale(c)
        right = right + (b1 * f_antipode(b2)).scale(c)
    assert left == right == FElement.one().scale(f_counit(f))
