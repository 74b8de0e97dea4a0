from math import factorial

import pytest
import sympy as sp

from elchi.classical import CommutativePoly, PoleAtZeroError, classical_oracle, limit_compare, z0_limit
from elchi.qplane import chi, chibar
from elchi.scalar import HM, HP, K, ONE, Z, GaussianRational, ParamScalar
from elchi.schrodinger import AngularSpec, PlaneWaveSpec, angular_state, plane_wave_state


def _poly(terms):
    return CommutativePoly({k: v for k, v in terms.items()})


def test_limit_examples():
    assert z0_limit(chi().scale(Z)) == _poly({(1, 0): ONE})
    with pytest.raises(PoleAtZeroError):
        z0_limit(chi())
    expected = _poly({
        (0, 0): ONE, (1, 0): -HP, (0, 1): HM,
        (2, 0): HP * HP / 2, (0, 2): HM * HM / 2, (1, 1): -HP * HM,
    })
    assert z0_limit(plane_wave_state(PlaneWaveSpec(order=2))) == expected


def test_planewave_oracle_against_sympy_exponential():
    x, xb, hp, hm = sp.symbols("x xb hp hm")
    order = 5
    series = sp.expand(sp.series(sp.exp(-hp * x + hm * xb).subs({x: x * sp.Symbol("e"), xb: xb * sp.Symbol("e")}),
                                 sp.Symbol("e"), 0, order + 1).removeO().subs(sp.Symbol("e"), 1))
    oracle = classical_oracle("planewave", order)
    for (a, b, ep, em), c in sp.Poly(series, x, xb, hp, hm).terms():
        q = sp.Rational(c)
        assert oracle.coefficient((a, b)) == ParamScalar.monomial(GaussianRational(f"{q.p}/{q.q}"), hp=ep, hm=em)
    assert classical_oracle("planewave", 0) == _poly({(0, 0): ONE})


def test_bessel_oracle_examples():
    b0 = classical_oracle("bessel", 4, r=0)
    for ell in range(5):
        assert b0.coefficient((ell, ell)) == K ** ell * (ONE / factorial(ell) ** 2)
    b2 = classical_oracle("bessel", 2, r=2)
    assert b2.coefficient((3, 1)) == K ** 3 * (ONE / 6)
    # sympy: sum_l (k t)^l / (l! (l+r)!) is the series of (k t)^(-r/2) I_r(2 sqrt(k t))
    t = sp.symbols("t", positive=True)
    r = 2
    ser = sp.series(sp.besseli(r, 2 * sp.sqrt(t)) / t ** sp.Rational(r, 2), t, 0, 4).removeO()
    for ell in range(3):
        q = sp.Rational(ser.coeff(t, ell))
        assert b2.coefficient((ell + r, ell)) == K ** (ell + r) * ParamScalar.const(GaussianRational(f"{q.p}/{q.q}"))


def test_angular_limits_small():
    for r in (-2, 0, 2):
        fam = "chi" if r <= 0 else "chibar"
        rep = limit_compare(angular_state(AngularSpec(r, 5)), classical_oracle("bessel", 5, r=abs(r), family=fam), 10)
        assert rep.passed, rep.summary()


def test_limit_is_multiplicative():
    a = chi().scale(Z) + chibar().scale(Z * HP)
    b = (chi() * chibar()).scale(Z * Z) - chibar().scale(Z)
    assert z0_limit(a * b) == z0_limit(a) * z0_limit(b)


def test_negative_control():
    state = plane_wave_state(PlaneWaveSpec(order=3)) + (chi() * chi()).scale(Z * Z)
    rep = limit_compare(state, classical_oracle("planewave", 3), 3)
    assert [d.key for d in rep.mismatches] == [(2, 0)]
