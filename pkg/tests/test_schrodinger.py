from math import factorial

import pytest
import sympy as sp

from elchi.qplane import PlaneElement, chi, chibar, poch_chi, poch_chibar, rho_poly
from elchi.scalar import HM, HP, K, ONE, Z, GaussianRational, ParamScalar
from elchi.schrodinger import (
    AngularSpec, ParameterPoleError, PlaneWaveSpec, angular_state, hypergeometric_series,
    lemma32_report, lemma34_report, lemma35_report, plane_wave_convert, plane_wave_state,
    verify_angular, verify_plane_wave,
)


def _from_sympy(expr, u_scalar, v_scalar, u, v):
    """Convert a polynomial in u, v with rational coefficients into a ParamScalar."""
    out = ParamScalar()
    for (eu, ev), c in sp.Poly(sp.expand(expr), u, v).terms():
        q = sp.Rational(c)
        out = out + ParamScalar.const(GaussianRational(f"{q.p}/{q.q}")) * u_scalar ** eu * v_scalar ** ev
    return out


def test_plane_wave_small_orders():
    assert plane_wave_state(PlaneWaveSpec(order=0)) == PlaneElement.one()
    expected = 1 + chi().scale(-Z * HP) + (1 - chibar()).scale(Z * HM)
    assert plane_wave_state(PlaneWaveSpec(order=1)) == expected


def test_plane_wave_coefficients_match_binomial_series():
    # (1+u)^(-s) = sum_m (-u)^m (s)_m / m!  and  (1-v)^(t-1) = sum_n v^n (1-t)_n / n!
    u, v, s, t = sp.symbols("u v s t")
    N = 3
    ser1 = sp.series((1 + u) ** (-s), u, 0, N + 1).removeO()
    ser2 = sp.series((1 - v) ** (t - 1), v, 0, N + 1).removeO()
    coords = plane_wave_convert(plane_wave_state(PlaneWaveSpec(order=N)))
    for m in range(N + 1):
        a_m = sp.simplify(ser1.coeff(u, m) / sp.rf(s, m))
        for n in range(N + 1 - m):
            b_n = sp.simplify(ser2.coeff(v, n) / sp.rf(1 - t, n))
            expected = _from_sympy(a_m * b_n * u ** m * v ** n, Z * HP, Z * HM, u, v)
            assert coords[(m, n)] == expected


def test_angular_examples():
    kz2 = K * Z * Z
    expected = sum((rho_poly(l).scale(kz2 ** l * (ONE / factorial(l) ** 2)) for l in range(3)), PlaneElement.zero())
    assert angular_state(AngularSpec(0, 2)) == expected
    assert angular_state(AngularSpec(-1, 0)) == poch_chi(1).scale(-K * Z)
    assert angular_state(AngularSpec(1, 0)) == poch_chibar(1).scale(-K * Z)


def test_hypergeometric_edge_cases():
    assert hypergeometric_series("1F0", [chi()], [], -Z * HP, 0) == PlaneElement.one()
    with pytest.raises(ParameterPoleError):
        hypergeometric_series("2F1", [chibar(), 1 - chi()], [-1], K, 3)
    with pytest.raises(ValueError):
        hypergeometric_series("3F2", [chi()], [], K, 1)


def test_plane_wave_suite_small_window():
    rep = verify_plane_wave(4, 4)
    assert rep.passed, rep.summary()
    assert rep.eigenvalue == 4 * HP * HM


def test_plane_wave_negative_control_names_key():
    rep = verify_plane_wave(3, 3, corrupt=(1, 2))
    assert not rep.passed
    assert rep.discrepancies[0].key == ("coefficient", 1, 2)


def test_lemma34_and_lemma35_small():
    assert lemma34_report(4).passed
    assert lemma35_report(4).passed


def test_lemma32_sign_conflict_is_exactly_two_relations():
    rep = lemma32_report(4)
    failing = {d.key[0] for d in rep.discrepancies}
    assert failing == {"H+ (1-chi)_n", "H- (chibar)_n"}
    assert rep.details["holds_with_opposite_sign"] == {"H+ (1-chi)_n": True, "H- (chibar)_n": True}


def test_angular_observed_structure():
    """The computed action: Jscript eigenvalues and recurrences hold, while the
    HH+- identities hold with rho_j -> (-1)^j rho_j and H+H- has eigenvalue -k."""
    rep = verify_angular(max_r=2, max_l=3)
    kinds = {d.key[0] for d in rep.discrepancies}
    assert kinds <= {"HHplus", "HHminus", "HpHm"}
    assert rep.details["per_element_opposite_sign"]
    assert rep.details["ladder_signs_flipped"]
    assert rep.details["eigenvalue_minus_k"]
