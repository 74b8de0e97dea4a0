"""Identity checks over finite windows for the two Hopf algebras, their
pairing and the quantum plane.  Each function returns a VerificationReport."""

from __future__ import annotations

from typing import Dict

from . import envalg as U
from . import funalg as F
from .envalg import (
    E,
    J,
    P1,
    P2,
    UElement,
    UTensorElement,
    commutator,
    ell_action,
    lambda_action,
    named_element,
    u_antipode,
    u_coproduct,
    u_counit,
    u_f_pairing,
    u_star,
    u_window,
)
from .funalg import (
    FElement,
    FTensorElement,
    f_antipode,
    f_coproduct,
    f_counit,
    f_star,
    f_tensor_star,
    f_window,
)
from .qplane import (
    PlaneCoactionElement,
    PlaneElement,
    chi,
    chibar,
    coaction_via_coproduct,
    invariance_check,
    plane_coaction,
    plane_to_f,
)
from .report import VerificationReport
from .scalar import I, ONE, ZERO, Z, GaussianRational, ParamScalar
from .sparse import accumulate

__all__ = [
    "hopf_f_report",
    "hopf_u_report",
    "duality_report",
    "lemma22_report",
    "prop23_report",
    "abstract_identities_report",
    "GENERATOR_SET",
]

_HALF = ParamScalar.const(GaussianRational("1/2"))


# --------------------------------------------------------------------------
# generic Hopf-axiom helpers (keys -> elements)


def _coassoc(tensor_cls, elem_cls, mono_coproduct, key):
    """(Delta (x) id) Delta and (id (x) Delta) Delta on one basis key."""
    base = mono_coproduct(key)
    left: Dict = {}
    right: Dict = {}
    for (k1, k2), c in base.terms.items():
        for (a, b), v in mono_coproduct(k1).terms.items():
            accumulate(left, (a, b, k2), c * v)
        for (a, b), v in mono_coproduct(k2).terms.items():
            accumulate(right, (k1, a, b), c * v)
    return tensor_cls.from_acc(left), tensor_cls.from_acc(right)


def _counit_sides(elem_cls, mono_coproduct, counit_key, key):
    left: Dict = {}
    right: Dict = {}
    for (k1, k2), c in mono_coproduct(key).terms.items():
        e1 = counit_key(k1)
        if e1.terms:
            accumulate(left, k2, c * e1)
        e2 = counit_key(k2)
        if e2.terms:
            accumulate(right, k1, c * e2)
    return elem_cls.from_acc(left), elem_cls.from_acc(right)


def _antipode_sides(elem_cls, mono_coproduct, antipode, key):
    left = elem_cls.zero()
    right = elem_cls.zero()
    for (k1, k2), c in mono_coproduct(key).terms.items():
        b1, b2 = elem_cls.basis(k1), elem_cls.basis(k2)
        left = left + (antipode(b1) * b2).scale(c)
        right = right + (b1 * antipode(b2)).scale(c)
    return left, right


def _f_counit_key(key) -> ParamScalar:
    return ONE if key[1] == 0 and key[2] == 0 else ZERO


def _u_counit_key(key) -> ParamScalar:
    return ONE if key[0] == 0 and key[1] == 0 and key[3] == 0 else ZERO


# --------------------------------------------------------------------------
# F


F_LETTERS = ((1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, 0, 1))


def _f_relations_preserved(rep: VerificationReport) -> None:
    T, Tm, x1, x2 = (f_coproduct(FElement.basis(k)) for k in F_LETTERS)
    one = FTensorElement.one()
    half_z = Z * _HALF
    # [T, a1] = (z/2)(1 - T)^2 ; [T, a2] = i (z/2)(T^2 - 1) ; [a1, a2] = i z a1
    rep.expect_equal("Delta [T, a1]", ((one - T) * (one - T)).scale(half_z), T * x1 - x1 * T)
    rep.expect_equal("Delta [T, a2]", (T * T - one).scale(I * half_z), T * x2 - x2 * T)
    rep.expect_equal("Delta [a1, a2]", x1.scale(I * Z), x1 * x2 - x2 * x1)
    rep.expect_equal("Delta T T^-1", one, T * Tm)


def hopf_f_report(lmax: int = 2, degree: int = 3, pair_degree: int = 2, pair_lmax: int = 1) -> VerificationReport:
    """Hopf *-algebra axioms of F on the window |l| <= lmax, m + n <= degree.

    Multiplicativity of Delta is checked against every generator letter on
    both sides for the full window, and on all pairs inside the smaller
    ``pair`` window; together with the relation checks this determines Delta
    as an algebra map.
    """
    rep = VerificationReport("hopf-f", window={"lmax": lmax, "degree": degree})
    window = f_window(lmax, degree)
    mono = F.f_coproduct_monomial
    _f_relations_preserved(rep)
    for key in window:
        f = FElement.basis(key)
        a, b = _coassoc(FTensorElement, FElement, mono, key)
        rep.expect_equal(("coassociativity", key), a, b)
        left, right = _counit_sides(FElement, mono, _f_counit_key, key)
        rep.expect_equal(("counit left", key), f, left)
        rep.expect_equal(("counit right", key), f, right)
        left, right = _antipode_sides(FElement, mono, f_antipode, key)
        unit = FElement.scalar(f_counit(f))
        rep.expect_equal(("antipode left", key), unit, left)
        rep.expect_equal(("antipode right", key), unit, right)
        rep.expect_equal(("star involutive", key), f, f_star(f_star(f)))
        rep.expect_equal(("Delta star", key), f_tensor_star(f_coproduct(f)), f_coproduct(f_star(f)))
        df = f_coproduct(f)
        for lk in F_LETTERS:
            x = FElement.basis(lk)
            dx = f_coproduct(x)
            rep.expect_equal(("Delta(f x)", key, lk), df * dx, f_coproduct(f * x))
            rep.expect_equal(("Delta(x f)", key, lk), dx * df, f_coproduct(x * f))
    small = f_window(pair_lmax, pair_degree)
    for ka in small:
        fa = FElement.basis(ka)
        for kb in small:
            fb = FElement.basis(kb)
            rep.expect_equal(("Delta(fg)", ka, kb), f_coproduct(fa) * f_coproduct(fb), f_coproduct(fa * fb))
    return rep


# --------------------------------------------------------------------------
# U


def _u_relations_preserved(rep: VerificationReport) -> None:
    dP1, dP2, dJ = u_coproduct(P1()), u_coproduct(P2()), u_coproduct(J())
    i2z = I * _HALF * Z.inverse()
    rep.expect_equal("Delta [J, P1]", u_coproduct((E(2) - E(-2)).scale(i2z)), dJ * dP1 - dP1 * dJ)
    rep.expect_equal("Delta [J, P2]", dP1.scale(-I), dJ * dP2 - dP2 * dJ)
    rep.expect_equal("Delta [P1, P2]", UTensorElement.zero(), dP1 * dP2 - dP2 * dP1)
    for b in (1, 2):
        dE = u_coproduct(E(b))
        rep.expect_equal(
            ("Delta [J, E^b]", b), u_coproduct((P1() * E(b)).scale(-I * Z * _HALF * b)), dJ * dE - dE * dJ
        )
        rep.expect_equal(("Delta E^b E^-b", b), UTensorElement.one(), dE * u_coproduct(E(-b)))


def hopf_u_report(degree: int = 2, bmax: int = 2) -> VerificationReport:
    """Hopf *-algebra axioms of U on PBW monomials with a + c + d <= degree, |b| <= bmax."""
    rep = VerificationReport("hopf-u", window={"degree": degree, "bmax": bmax})
    window = u_window(degree, bmax)
    mono = U._mono_coproduct
    _u_relations_preserved(rep)
    for key in window:
        u = UElement.basis(key)
        a, b = _coassoc(UTensorElement, UElement, mono, key)
        rep.expect_equal(("coassociativity", key), a, b)
        left, right = _counit_sides(UElement, mono, _u_counit_key, key)
        rep.expect_equal(("counit left", key), u, left)
        rep.expect_equal(("counit right", key), u, right)
        left, right = _antipode_sides(UElement, mono, u_antipode, key)
        unit = UElement.scalar(u_counit(u))
        rep.expect_equal(("antipode left", key), unit, left)
        rep.expect_equal(("antipode right", key), unit, right)
        rep.expect_equal(("star involutive", key), u, u_star(u_star(u)))
        rep.expect_equal(("Delta star", key), _u_tensor_star(u_coproduct(u)), u_coproduct(u_star(u)))
    for ka in window:
        ua = UElement.basis(ka)
        da = u_coproduct(ua)
        for kb in window:
            ub = UElement.basis(kb)
            rep.expect_equal(("Delta(uv)", ka, kb), da * u_coproduct(ub), u_coproduct(ua * ub))
            rep.expect_equal(("u v associativity with J", ka, kb), (ua * J()) * ub, ua * (J() * ub))
    # named coproducts and star
    tau, nu1 = named_element("tau"), named_element("nu1")
    hp, hm = named_element("Hplus"), named_element("Hminus")
    one = UElement.one()
    rep.expect_equal(
        "Delta tau", UTensorElement.pure(E(-2), tau) + UTensorElement.pure(tau, one), u_coproduct(tau)
    )
    rep.expect_equal(
        "Delta H+", UTensorElement.pure(one, hp) + UTensorElement.pure(hp, E(2)), u_coproduct(hp)
    )
    rep.expect_equal(
        "Delta H-", UTensorElement.pure(E(-2), hm) + UTensorElement.pure(hm, one), u_coproduct(hm)
    )
    rep.expect_equal("tau*", -tau - (I * Z) * nu1, u_star(tau))
    return rep


def _u_tensor_star(t: UTensorElement) -> UTensorElement:
    acc: Dict = {}
    for (k1, k2), c in t.terms.items():
        for a, v in U._mono_star(k1).terms.items():
            for b, w in U._mono_star(k2).terms.items():
                accumulate(acc, (a, b), c.conjugate() * v * w)
    return UTensorElement.from_acc(acc)


# --------------------------------------------------------------------------
# duality and the two actions


def generator_set() -> Dict[str, UElement]:
    return {
        "P1": P1(),
        "P2": P2(),
        "J": J(),
        "E": E(1),
        "E^-1": E(-1),
        "tau": named_element("tau"),
        "nu1": named_element("nu1"),
        "nu2": named_element("nu2"),
    }


GENERATOR_SET = tuple(generator_set())


def duality_report(lmax: int = 2, degree: int = 2, action_pairs: bool = True) -> VerificationReport:
    rep = VerificationReport("duality", window={"lmax": lmax, "degree": degree})
    gens = generator_set()
    window = [FElement.basis(k) for k in f_window(lmax, degree)]
    for name, u in gens.items():
        du = u_coproduct(u)
        su = u_antipode(u)
        for f in window:
            fk = next(iter(f.terms))
            rep.expect_equal(("<S(u), f>", name, fk), u_f_pairing(u, f_antipode(f)), u_f_pairing(su, f))
            for g in window:
                gk = next(iter(g.terms))
                rep.expect_equal(
                    ("<Delta u, f (x) g>", name, fk, gk), u_f_pairing(u, f * g), U.pair_tensor(du, f, g)
                )
    if not action_pairs:
        return rep
    # actions computed literally from the pairing (coproduct route)
    direct = {"lambda": U.lambda_direct, "ell": U.ell_direct}
    names = list(gens)
    for side, act in direct.items():
        for y in names:
            for zname in names:
                yz = gens[y] * gens[zname]
                for f in window:
                    fk = next(iter(f.terms))
                    rep.expect_equal(
                        (f"{side}(YZ)", y, zname, fk), act(gens[y], act(gens[zname], f)), act(yz, f)
                    )
    # module-algebra laws
    for y in names:
        terms = u_coproduct(gens[y]).terms.items()
        for f in window:
            fk = next(iter(f.terms))
            for g in window:
                gk = next(iter(g.terms))
                fg = f * g
                lam = FElement.zero()
                ell = FElement.zero()
                for (k1, k2), c in terms:
                    y1, y2 = UElement.basis(k1), UElement.basis(k2)
                    lam = lam + (U.lambda_direct(y2, f) * U.lambda_direct(y1, g)).scale(c)
                    ell = ell + (U.ell_direct(y1, f) * U.ell_direct(y2, g)).scale(c)
                rep.expect_equal(("lambda(Y)(fg)", y, fk, gk), lam, U.lambda_direct(gens[y], fg))
                rep.expect_equal(("ell(Y)(fg)", y, fk, gk), ell, U.ell_direct(gens[y], fg))
    # the fast evaluation agrees with the literal definition
    for y in names:
        for f in window:
            fk = next(iter(f.terms))
            rep.expect_equal(("lambda fast", y, fk), U.lambda_direct(gens[y], f), lambda_action(gens[y], f))
            rep.expect_equal(("ell fast", y, fk), U.ell_direct(gens[y], f), ell_action(gens[y], f))
    return rep


# --------------------------------------------------------------------------
# twisted primitive X, homogeneous space


def lemma22_report() -> VerificationReport:
    rep = VerificationReport("lemma22")
    x = named_element("X")
    rep.expect_equal(
        "Delta X", UTensorElement.pure(E(-1), x) + UTensorElement.pure(x, E(1)), u_coproduct(x)
    )
    rep.expect_equal("(* o S)(X)", -x, u_star(u_antipode(x)))
    return rep


def prop23_report(plane_degree: int = 6, lmax: int = 3, degree: int = 3) -> VerificationReport:
    rep = VerificationReport("prop23", window={"plane_degree": plane_degree, "lmax": lmax, "degree": degree})
    x_el = named_element("X")
    for d in range(plane_degree + 1):
        for m in range(d + 1):
            key = (0, m, d - m)
            rep.expect_equal(("ell(X) f", key), FElement.zero(), ell_action(x_el, FElement.basis(key)))
    for key in f_window(lmax, degree):
        if key[0] == 0:
            continue
        rep.expect_true(("ell(X) f nonzero", key), not invariance_check(FElement.basis(key)))
    # coactions of x = z chi and xbar = -z chibar
    x_pl, xb_pl = chi().scale(Z), chibar().scale(-Z)
    x_f, xb_f = plane_to_f(x_pl), plane_to_f(xb_pl)
    one_p = PlaneElement.one()
    rep.expect_equal(
        "delta x",
        PlaneCoactionElement.pure(FElement.basis((1, 0, 0)), x_pl) + PlaneCoactionElement.pure(x_f, one_p),
        plane_coaction(x_pl),
    )
    rep.expect_equal(
        "delta xbar",
        PlaneCoactionElement.pure(FElement.basis((-1, 0, 0)), xb_pl) + PlaneCoactionElement.pure(xb_f, one_p),
        plane_coaction(xb_pl),
    )
    for d in range(4):
        for p in range(d + 1):
            mono = PlaneElement.basis((p, d - p))
            rep.expect_equal(("delta = Delta on plane", p, d - p), coaction_via_coproduct(mono), plane_coaction(mono))
    dx, dxb = plane_coaction(chi()), plane_coaction(chibar())
    rep.expect_equal("delta relation", dx - dxb, dx * dxb - dxb * dx)
    rep.expect_equal("[x, xbar] in F", (x_f + xb_f).scale(-Z), x_f * xb_f - xb_f * x_f)
    rep.expect_equal("[x, xbar] in plane", (x_pl + xb_pl).scale(-Z), x_pl * xb_pl - xb_pl * x_pl)
    rep.expect_equal("x in F", FElement({(0, 1, 0): 1, (0, 0, 1): -I}), x_f)
    rep.expect_equal("xbar in F", FElement({(0, 1, 0): 1, (0, 0, 1): I}), xb_f)
    return rep


# --------------------------------------------------------------------------
# abstract identities in PBW normal form


def abstract_identities_report() -> VerificationReport:
    rep = VerificationReport("abstract-identities")
    c = named_element("Casimir")
    hp, hm = named_element("Hplus"), named_element("Hminus")
    hhp, hhm = named_element("HHplus"), named_element("HHminus")
    jsc = named_element("Jscript")
    rep.expect_equal("C = 4 H+ H-", c, (hp * hm).scale(4))
    for name, g in (("P1", P1()), ("P2", P2()), ("J", J())):
        rep.expect_equal(("[C, g]", name), UElement.zero(), commutator(c, g))
    rep.expect_equal("[Jscript, HH+]", hhp, commutator(jsc, hhp))
    rep.expect_equal("[Jscript, HH-]", -hhm, commutator(jsc, hhm))
    rep.expect_equal("[HH+, HH-]", UElement.zero(), commutator(hhp, hhm))
    hh = hp * hm
    rep.expect_equal("CasimirTilde = HH+ HH-", named_element("CasimirTilde"), hhp * hhm)
    rep.expect_equal("HH+ HH- = H+H-(1 + z^2 H+H-)", hhp * hhm, hh * (UElement.one() + hh.scale(Z * Z)))
    # involution facts that no other statement depends on
    rep.details["HH+* = HH-"] = u_star(hhp) == hhm
    rep.details["Jscript* = Jscript"] = u_star(jsc) == jsc
    rep.details["Jscript* - Jscript"] = str(u_star(jsc) - jsc)
    return rep
