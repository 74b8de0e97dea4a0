"""Eigenstates of the deformed free Schroedinger operator 4 lambda(H+ H-).

Plane waves are expanded in the products (chi)_m (1-chibar)_n, angular
states in rho_ell (chi)_r and rho_ell (chibar)_r.  Angular coefficients are
kept in normalized form

    d(ell, r) = (-k z)^r (k z^2)^ell / (ell! (ell + r)!)

so every coefficient stays in the free ring.  All state-level checks are
done componentwise in the relevant product basis, never in the monomial
basis, because truncation pollutes low monomial degrees.

Each check reports the statement as printed.  Where the computed action
differs, the report's ``details`` record the form that does hold, so the
two can be compared side by side.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial
from typing import Dict, Optional, Sequence, Tuple

from .envalg import E, UElement, lambda_action, named_element
from .funalg import FElement
from .qplane import (
    PlaneElement,
    PochBasisElement,
    chi,
    chibar,
    plane_lambda,
    poch_basis_convert,
    poch_basis_element,
    poch_chi,
    poch_chibar,
    poch_one_minus_chi,
    poch_one_minus_chibar,
    pochhammer_poly,
    rho_poly,
)
from .report import EigenReport, VerificationReport
from .scalar import HM, HP, I, K, ONE, ZERO, Z, GaussianRational, ParamScalar, as_scalar

__all__ = [
    "ParameterPoleError",
    "PlaneWaveSpec",
    "AngularSpec",
    "plane_wave_basis",
    "plane_wave_convert",
    "plane_wave_state",
    "verify_plane_wave",
    "angular_coefficient",
    "angular_state",
    "verify_angular",
    "hypergeometric_series",
    "lemma32_report",
    "lemma34_report",
    "lemma35_report",
    "lemma38_report",
    "hypergeometric_report",
]


class ParameterPoleError(ZeroDivisionError):
    """A lower hypergeometric parameter hits a nonpositive integer."""


_ZINV = Z.inverse()


def _q(num: int, den: int = 1) -> ParamScalar:
    return ParamScalar.const(GaussianRational(f"{num}/{den}"))


@lru_cache(maxsize=None)
def _hphm() -> UElement:
    return named_element("Hplus") * named_element("Hminus")


def _lam(name_or_u, a: PlaneElement) -> PlaneElement:
    if isinstance(name_or_u, str):
        u = _hphm() if name_or_u == "HpHm" else named_element(name_or_u)
    else:
        u = name_or_u
    return plane_lambda(u, a)


# --------------------------------------------------------------------------
# plane waves


@dataclass(frozen=True)
class PlaneWaveSpec:
    """Truncation order N keeps (m, n) with m + n <= N."""

    order: int = 8
    hp: ParamScalar = HP
    hm: ParamScalar = HM

    def coefficient(self, m: int, n: int) -> ParamScalar:
        return (-Z * self.hp) ** m * (Z * self.hm) ** n * _q(1, factorial(m) * factorial(n))


@lru_cache(maxsize=None)
def plane_wave_basis(m: int, n: int) -> PlaneElement:
    """(chi)_m (1 - chibar)_n."""
    return poch_chi(m) * poch_one_minus_chibar(n)


def plane_wave_convert(a: PlaneElement) -> Dict[Tuple[int, int], ParamScalar]:
    """Coordinates of ``a`` in the (chi)_m (1-chibar)_n basis.

    The top-degree part of (chi)_m (1-chibar)_n is (-1)^n chi^m chibar^n, so
    the expansion is triangular by total degree.
    """
    rest = dict(a.terms)
    out: Dict = {}
    while rest:
        key = max(rest, key=lambda k: (k[0] + k[1], k))
        c = rest.pop(key)
        m, n = key
        coef = -c if n % 2 else c
        out[(m, n)] = coef
        for k, v in plane_wave_basis(m, n).terms.items():
            if k == key:
                continue
            new = rest.get(k, ZERO) - coef * v
            if new.terms:
                rest[k] = new
            else:
                rest.pop(k, None)
    return out


def plane_wave_state(spec: PlaneWaveSpec, corrupt: Optional[Tuple[int, int]] = None) -> PlaneElement:
    """Sum of h_mn (chi)_m (1-chibar)_n over m + n <= N.

    ``corrupt`` adds 1 to one coefficient; it exists for negative controls.
    """
    out = PlaneElement.zero()
    for m in range(spec.order + 1):
        for n in range(spec.order + 1 - m):
            c = spec.coefficient(m, n)
            if corrupt == (m, n):
                c = c + ONE
            out = out + plane_wave_basis(m, n).scale(c)
    return out


def verify_plane_wave(
    max_m: int = 8,
    max_n: int = 8,
    spec: Optional[PlaneWaveSpec] = None,
    corrupt: Optional[Tuple[int, int]] = None,
) -> EigenReport:
    spec = spec or PlaneWaveSpec(order=max(max_m, max_n))
    rep = EigenReport(
        "plane-wave",
        window={"max_m": max_m, "max_n": max_n, "order": spec.order},
        eigenvalue=4 * spec.hp * spec.hm,
    )
    hplus, hminus = named_element("Hplus"), named_element("Hminus")
    state = plane_wave_state(spec, corrupt=corrupt)
    coords = plane_wave_convert(state)
    for m in range(spec.order + 1):
        for n in range(spec.order + 1 - m):
            rep.expect_equal(("coefficient", m, n), spec.coefficient(m, n), coords.get((m, n), ZERO))
    # per-element action identities
    for m in range(max_m + 1):
        for n in range(max_n + 1):
            b = plane_wave_basis(m, n)
            exp_p = plane_wave_basis(m - 1, n).scale(-m * _ZINV) if m else PlaneElement.zero()
            exp_m = plane_wave_basis(m, n - 1).scale(n * _ZINV) if n else PlaneElement.zero()
            rep.expect_equal(("Hplus", m, n), exp_p, _lam(hplus, b))
            rep.expect_equal(("Hminus", m, n), exp_m, _lam(hminus, b))

    def coeff(m, n):
        return coords.get((m, n), ZERO) if m + n <= spec.order else spec.coefficient(m, n)

    # scalar recurrences
    for m in range(max_m):
        for n in range(max_n + 1):
            rep.expect_equal(
                ("recurrence+", m, n), spec.hp * coeff(m, n), -(m + 1) * _ZINV * coeff(m + 1, n)
            )
    for m in range(max_m + 1):
        for n in range(max_n):
            rep.expect_equal(
                ("recurrence-", m, n), spec.hm * coeff(m, n), (n + 1) * _ZINV * coeff(m, n + 1)
            )
    # Casimir on the truncated state: components with m + n <= N - 2 are exact
    image = plane_wave_convert(_lam("Casimir", state))
    ev = rep.eigenvalue
    for m in range(spec.order - 1):
        for n in range(spec.order - 1 - m):
            rep.expect_equal(("Casimir", m, n), ev * coords.get((m, n), ZERO), image.get((m, n), ZERO))
    return rep


# --------------------------------------------------------------------------
# angular states


@dataclass(frozen=True)
class AngularSpec:
    """r <= 0 selects rho_ell (chi)_|r|, r > 0 selects rho_ell (chibar)_r."""

    r: int
    L: int = 8
    k: ParamScalar = K

    @property
    def family(self) -> str:
        return "chi" if self.r <= 0 else "chibar"


def angular_coefficient(ell: int, r: int, k: ParamScalar = K) -> ParamScalar:
    """(-k z)^|r| (k z^2)^ell / (ell! (ell + |r|)!)."""
    r = abs(r)
    return (-k * Z) ** r * (k * Z * Z) ** ell * _q(1, factorial(ell) * factorial(ell + r))


def _element(fam: str, ell: int, r: int) -> PlaneElement:
    return poch_basis_element(PochBasisElement.make(fam, ell, r))


def angular_state(spec: AngularSpec) -> PlaneElement:
    fam, r = spec.family, abs(spec.r)
    out = PlaneElement.zero()
    for ell in range(spec.L + 1):
        out = out + _element(fam, ell, r).scale(angular_coefficient(ell, r, spec.k))
    return out


def _angular_coords(spec: AngularSpec) -> Dict[PochBasisElement, ParamScalar]:
    fam, r = spec.family, abs(spec.r)
    return {
        PochBasisElement.make(fam, ell, r): angular_coefficient(ell, r, spec.k) for ell in range(spec.L + 1)
    }


@lru_cache(maxsize=None)
def _image(name: str, fam: str, ell: int, r: int) -> Tuple:
    """lambda(name) of one basis element, in Pochhammer coordinates."""
    img = _lam(name, _element(fam, ell, r))
    return tuple(sorted(poch_basis_convert(img).items()))


def _state_image(name: str, coords: Dict[PochBasisElement, ParamScalar]) -> Dict:
    acc: Dict = {}
    for b, c in coords.items():
        for b2, v in _image(name, b.family, b.ell, b.r):
            cur = acc.get(b2)
            acc[b2] = c * v if cur is None else cur + c * v
    return {b: v for b, v in acc.items() if v.terms}


def _mirror(fam: str) -> str:
    return "chibar" if fam == "chi" else "chi"


def _per_element_expected(name: str, fam: str, j: int, r: int, sign: int) -> PlaneElement:
    """Per-element ladder formulas for the chi family, mirrored for chibar.

    ``sign = +1`` gives the printed form, ``sign = -1`` the form with the
    rho_(j-1) contribution and the raising coefficient negated.
    """
    lowering = (name == "HHplus") == (fam == "chi")
    if lowering:
        if r == 0:
            return None
        body = _element(fam, j, r - 1).scale(j + r)
        if j:
            body = body + _element(fam, j - 1, r - 1).scale(sign * j * (j + r - 1) * (j + r))
        return body.scale(-_ZINV)
    if not j:
        return PlaneElement.zero()
    return _element(fam, j - 1, r + 1).scale(-sign * j * _ZINV)


def verify_angular(max_r: int = 5, max_l: int = 8, k: ParamScalar = K) -> EigenReport:
    """Angular-momentum states: per-element HH+- identities, normalized
    ladders, Jscript and H+H- eigenvalues, and the coefficient recurrences."""
    rep = EigenReport(
        "angular",
        window={"max_r": max_r, "max_l": max_l},
        eigenvalue=4 * k,
    )
    observed = {"per_element_opposite_sign": True, "ladder_signs_flipped": True, "eigenvalue_minus_k": True}
    modulus = k * (1 + Z * Z * k)
    # (a) per-element identities
    for fam in ("chi", "chibar"):
        for j in range(max_l + 1):
            for r in range(max_r + 1):
                if fam == "chibar" and r == 0:
                    continue
                b = _element(fam, j, r)
                for name in ("HHplus", "HHminus"):
                    printed = _per_element_expected(name, fam, j, r, +1)
                    if printed is None:
                        continue
                    actual = _lam(name, b)
                    rep.expect_equal((name, fam, j, r), printed, actual)
                    if actual != _per_element_expected(name, fam, j, r, -1):
                        observed["per_element_opposite_sign"] = False
    # (b) ladders on truncated states, components ell <= max_l - 1.  The
    # second factor of each pair is the one observed to hold instead.
    ladder_pairs = {"raise": (ONE, -ONE), "lower": (modulus, k * (1 - Z * Z * k))}
    for fam in ("chi", "chibar"):
        up, down = ("HHminus", "HHplus") if fam == "chi" else ("HHplus", "HHminus")
        sgn_r = -1 if fam == "chi" else 1
        for r in range(max_r + 1):
            if fam == "chibar" and r == 0:
                continue
            spec = AngularSpec(sgn_r * r, max_l, k)
            coords = _angular_coords(spec)
            ladders = [(up, r + 1, "raise")]
            if r >= 1:
                ladders.append((down, r - 1, "lower"))
            for name, r2, kind in ladders:
                printed, derived = ladder_pairs[kind]
                target = _angular_coords(AngularSpec(sgn_r * r2, max_l, k))
                image = _state_image(name, coords)
                for b2, c2 in target.items():
                    if b2.ell > max_l - 1:
                        continue
                    got = image.get(b2, ZERO)
                    rep.expect_equal((name, spec.r, b2), printed * c2, got)
                    if got != derived * c2:
                        observed["ladder_signs_flipped"] = False
    # (c) Jscript eigenvalue per basis element, (d) H+H- eigenvalue on states
    for fam in ("chi", "chibar"):
        sgn = -1 if fam == "chi" else 1
        for r in range(max_r + 1):
            if fam == "chibar" and r == 0:
                continue
            for j in range(max_l + 1):
                b = _element(fam, j, r)
                rep.expect_equal(("Jscript", fam, j, r), b.scale(sgn * r), _lam("Jscript", b))
            coords = _angular_coords(AngularSpec(sgn * r, max_l, k))
            image = _state_image("HpHm", coords)
            for b2, c2 in coords.items():
                if b2.ell > max_l - 1:
                    continue
                rep.expect_equal(("HpHm", sgn * r, b2), k * c2, image.get(b2, ZERO))
                if image.get(b2, ZERO) != -k * c2:
                    observed["eigenvalue_minus_k"] = False
    # (e) scalar recurrences in normalized form
    for r in range(max_r + 1):
        for ell in range(max_l):
            d = lambda l, rr: angular_coefficient(l, rr, k)
            rep.expect_equal(("recurrence-", r, ell), d(ell, r + 1), -(ell + 1) * _ZINV * d(ell + 1, r))
            if r >= 1:
                rhs = -_ZINV * ((ell + r) * d(ell, r) + (ell + 1) * (ell + r) * (ell + r + 1) * d(ell + 1, r))
                rep.expect_equal(("recurrence+", r, ell), modulus * d(ell, r - 1), rhs)
    rep.details.update(observed)
    rep.details["modulus"] = str(modulus)
    rep.details["observed_HpHm_eigenvalue"] = str(-k) if observed["eigenvalue_minus_k"] else None
    return rep


# --------------------------------------------------------------------------
# hypergeometric series with noncommuting upper parameters


def hypergeometric_series(
    kind: str,
    upper: Sequence[PlaneElement],
    lower: Sequence,
    arg,
    order: int,
) -> PlaneElement:
    """Truncated pFq: sum over ell <= order of (a1)_ell ... / (ell! (b1)_ell ...) arg^ell.

    Upper parameters are plane elements (multiplied in the written order);
    lower parameters and the argument are scalars.
    """
    p, q = {"1F0": (1, 0), "2F1": (2, 1)}.get(kind, (None, None))
    if p is None:
        raise ValueError(f"unknown series kind {kind!r}")
    if len(upper) != p or len(lower) != q:
        raise ValueError(f"{kind} takes {p} upper and {q} lower parameters")
    arg = as_scalar(arg)
    lower = [as_scalar(b) for b in lower]
    out = PlaneElement.zero()
    denom = ONE
    power = ONE
    for ell in range(order + 1):
        if ell:
            denom = denom * ell
            for b in lower:
                denom = denom * (b + (ell - 1))
            power = power * arg
        if not denom.terms:
            raise ParameterPoleError(f"lower parameter reaches a nonpositive integer at ell = {ell}")
        term = PlaneElement.one()
        for a in upper:
            term = term * pochhammer_poly(a, ell)
        out = out + term.scale(power * denom.inverse())
    return out


def hypergeometric_report(order: int = 8, max_r: int = 5, max_l: int = 8) -> VerificationReport:
    rep = VerificationReport("hypergeometric", window={"order": order, "max_r": max_r, "max_l": max_l})
    # plane wave as a product of two 1F0 series
    left = hypergeometric_series("1F0", [chi()], [], -Z * HP, order)
    right = hypergeometric_series("1F0", [1 - chibar()], [], Z * HM, order)
    prod = plane_wave_convert(left * right)
    spec = PlaneWaveSpec(order)
    for m in range(order + 1):
        for n in range(order + 1 - m):
            rep.expect_equal(("1F0*1F0", m, n), spec.coefficient(m, n), prod.get((m, n), ZERO))
    # angular states as 2F1 times (-kz)^r (chi)_r / r!
    for fam in ("chi", "chibar"):
        for r in range(max_r + 1):
            if fam == "chibar" and r == 0:
                continue
            f21 = hypergeometric_series("2F1", [chibar(), 1 - chi()], [r + 1], K * Z * Z, max_l)
            tail = (poch_chi(r) if fam == "chi" else poch_chibar(r)).scale((-K * Z) ** r * _q(1, factorial(r)))
            sgn = -1 if fam == "chi" else 1
            rep.expect_equal(("2F1", sgn * r), angular_state(AngularSpec(sgn * r, max_l)), f21 * tail)
    return rep


# --------------------------------------------------------------------------
# lemma-level checks


def lemma32_report(nmax: int = 10) -> VerificationReport:
    """The six Pochhammer relations for lambda(H+) and lambda(H-).

    Quotients such as (1-chi)_n / (1-chi) are read as removal of the first
    factor, i.e. (2-chi)_(n-1).
    """
    rep = VerificationReport("lemma32", window={"nmax": nmax})
    opposite = {}
    for n in range(1, nmax + 1):
        s = n * _ZINV
        cases = [
            ("H+ (chibar)_n", "Hplus", poch_chibar(n), PlaneElement.zero()),
            ("H+ (chi)_n", "Hplus", poch_chi(n), poch_chi(n - 1).scale(-s)),
            ("H+ (1-chi)_n", "Hplus", poch_one_minus_chi(n), poch_one_minus_chi(n - 1, 1).scale(-s)),
            ("H- (chi)_n", "Hminus", poch_chi(n), PlaneElement.zero()),
            ("H- (chibar)_n", "Hminus", poch_chibar(n), poch_chibar(n - 1, 1).scale(s)),
            ("H- (1-chibar)_n", "Hminus", poch_one_minus_chibar(n), poch_one_minus_chibar(n - 1).scale(s)),
        ]
        for label, name, arg, expected in cases:
            actual = _lam(name, arg)
            if not rep.expect_equal((label, n), expected, actual):
                opposite.setdefault(label, True)
                if actual != -expected:
                    opposite[label] = False
    rep.details["holds_with_opposite_sign"] = opposite
    return rep


def lemma34_report(nmax: int = 10) -> VerificationReport:
    rep = VerificationReport("lemma34", window={"nmax": nmax})
    jscript = named_element("Jscript")
    a1, a2 = FElement.basis((0, 1, 0)), FElement.basis((0, 0, 1))
    rep.expect_equal("Jscript a1", a1.scale(0) + a2.scale(I), lambda_action(jscript, a1))
    rep.expect_equal("Jscript a2", a1.scale(-I), lambda_action(jscript, a2))
    rep.expect_equal("E^-2 chi", chi() + 1, plane_lambda(E(-2), chi()))
    rep.expect_equal("E^-2 chibar", chibar() + 1, plane_lambda(E(-2), chibar()))
    for n in range(nmax + 1):
        rep.expect_equal(("(chi)_n", n), poch_chi(n).scale(-n), _lam(jscript, poch_chi(n)))
        rep.expect_equal(("(chibar)_n", n), poch_chibar(n).scale(n), _lam(jscript, poch_chibar(n)))
    return rep


def lemma35_report(nmax: int = 8) -> VerificationReport:
    rep = VerificationReport("lemma35", window={"nmax": nmax})
    jscript = named_element("Jscript")
    c, cb = chi(), chibar()
    rep.expect_equal("[chi, chibar]", c - cb, c * cb - cb * c)
    for d in range(nmax + 1):
        p = c ** d
        shifted = (c + 1) ** d
        rep.expect_equal(("shift law", d), shifted * (c - cb), (c - cb) * p)
    for n in range(nmax + 1):
        rho_n = rho_poly(n)
        rep.expect_equal(("(chibar)_n (1-chi)_n", n), rho_n, poch_chibar(n) * poch_one_minus_chi(n))
        rep.expect_equal(("(chi)_n (1-chibar)_n", n), rho_n, poch_chi(n) * poch_one_minus_chibar(n))
        rep.expect_equal(("Jscript rho_n", n), PlaneElement.zero(), _lam(jscript, rho_n))
    return rep


def lemma38_report(max_j: int = 8, max_r: int = 5, max_deg: int = 8) -> VerificationReport:
    """lambda(U+-) on monomials and the per-element HH+- formulas for the chi family."""
    rep = VerificationReport("lemma38", window={"max_j": max_j, "max_r": max_r, "max_deg": max_deg})
    c, cb = chi(), chibar()
    uplus, uminus = named_element("Uplus"), named_element("Uminus")
    reversed_order = True
    same_order = True
    for total in range(max_deg + 1):
        for n in range(total + 1):
            m = total - n
            rep.expect_equal(("U+", n, m), c ** n * (cb + 1) ** m, _lam(uplus, c ** n * cb ** m))
            actual = _lam(uminus, cb ** m * c ** n)
            rep.expect_equal(("U-", m, n), (cb - 1) ** m * c ** n, actual)
            if _lam(uminus, c ** n * cb ** m) != c ** n * (cb - 1) ** m:
                same_order = False
            if actual != (cb - 1) ** m * c ** n:
                reversed_order = False
    rep.details["U- printed ordering chibar^m chi^n holds"] = reversed_order
    rep.details["U- ordering chi^n chibar^m holds"] = same_order
    opposite = True
    for j in range(max_j + 1):
        for r in range(max_r + 1):
            b = _element("chi", j, r)
            for name in ("HHplus", "HHminus"):
                printed = _per_element_expected(name, "chi", j, r, +1)
                if printed is None:
                    continue
                actual = _lam(name, b)
                rep.expect_equal((name, j, r), printed, actual)
                if actual != _per_element_expected(name, "chi", j, r, -1):
                    opposite = False
    rep.details["per_element_holds_with_rho_sign_flipped"] = opposite
    return rep
