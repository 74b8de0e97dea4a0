"""The z -> 0 limit of quantum-plane states.

A normal-ordered monomial chi^p chibar^q equals (-1)^q z^-(p+q) x^p xbar^q,
already in x-left order, so the limit only rescales coefficients and drops
every term with a positive power of z.  The classical oracles below are
written directly as commutative series and share no code with the
quantum side.
"""

from __future__ import annotations

from math import factorial
from typing import Dict

from .qplane import PlaneElement
from .report import LimitReport
from .scalar import HM, HP, I, K, ZERO, GaussianRational, ParamScalar, PoleAtZeroError
from .sparse import SparseElement, accumulate

__all__ = [
    "CommutativePoly",
    "PoleAtZeroError",
    "z0_limit",
    "classical_oracle",
    "limit_compare",
    "phase_convention_report",
]


class CommutativePoly(SparseElement):
    """Polynomial in commuting x, xbar; keys are (x_exp, xbar_exp)."""

    UNIT_KEY = (0, 0)

    @staticmethod
    def _canon_key(key):
        a, b = key
        if a < 0 or b < 0:
            raise ValueError(f"negative exponent in {key}")
        return (int(a), int(b))

    def _product(self, other: "CommutativePoly") -> "CommutativePoly":
        acc: Dict = {}
        for (a, b), c in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                accumulate(acc, (a + a2, b + b2), c * c2)
        return CommutativePoly.from_acc(acc)

    def _key_str(self, key) -> str:
        a, b = key
        parts = []
        for name, e in (("x", a), ("xbar", b)):
            if e == 1:
                parts.append(name)
            elif e:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def truncate(self, order: int) -> "CommutativePoly":
        return CommutativePoly.from_acc({k: v for k, v in self.terms.items() if k[0] + k[1] <= order})


def _q(num: int, den: int = 1) -> ParamScalar:
    return ParamScalar.const(GaussianRational(f"{num}/{den}"))


def z0_limit(a: PlaneElement) -> CommutativePoly:
    """Rewrite in x, xbar and set z = 0; raises PoleAtZeroError on a pole."""
    acc: Dict = {}
    for (p, q), c in a.terms.items():
        scaled = c * ParamScalar.monomial(-1 if q % 2 else 1, z=-(p + q))
        val = scaled.eval_z0()
        if val.terms:
            accumulate(acc, (p, q), val)
    return CommutativePoly.from_acc(acc)


def classical_oracle(
    kind: str,
    order: int,
    r: int = 0,
    hp: ParamScalar = HP,
    hm: ParamScalar = HM,
    k: ParamScalar = K,
    family: str = "chi",
    phase: str = "direct",
) -> CommutativePoly:
    """Classical series, independent of the quantum machinery.

    planewave: exp(-hp x + hm xbar) through total degree ``order``
    (``phase="printed"`` gives exp(i (hp x - hm xbar)) instead).
    bessel: (-k x)^r sum_{ell <= order} (k xbar x)^ell / (ell! (ell + r)!);
    ``family="chibar"`` uses (k xbar)^r in front.
    """
    acc: Dict = {}
    if kind == "planewave":
        if phase == "direct":
            cx, cxb = -hp, hm
        elif phase == "printed":
            cx, cxb = I * hp, -I * hm
        else:
            raise ValueError(f"unknown phase convention {phase!r}")
        for a in range(order + 1):
            for b in range(order + 1 - a):
                acc[(a, b)] = cx ** a * cxb ** b * _q(1, factorial(a) * factorial(b))
        return CommutativePoly.from_acc(acc)
    if kind == "bessel":
        r = abs(r)
        if family == "chi":
            pref, shift = (-k) ** r, (r, 0)
        elif family == "chibar":
            pref, shift = k ** r, (0, r)
        else:
            raise ValueError(f"unknown family {family!r}")
        for ell in range(order + 1):
            acc[(ell + shift[0], ell + shift[1])] = pref * k ** ell * _q(1, factorial(ell) * factorial(ell + r))
        return CommutativePoly.from_acc(acc)
    raise ValueError(f"unknown oracle kind {kind!r}")


def limit_compare(
    state: PlaneElement,
    oracle: CommutativePoly,
    order: int,
    identity: str = "classical-limit",
) -> LimitReport:
    """Exact coefficient comparison of z0_limit(state) and ``oracle`` up to total degree ``order``."""
    rep = LimitReport(identity, window={"order": order}, order=order)
    try:
        lim = z0_limit(state)
    except PoleAtZeroError as exc:
        rep.expect_true("pole", False, note=str(exc))
        return rep
    keys = {k for k in lim.terms if sum(k) <= order} | {k for k in oracle.terms if sum(k) <= order}
    for key in sorted(keys):
        rep.expect_equal(key, oracle.coefficient(key), lim.coefficient(key))
    return rep


def phase_convention_report(order: int = 8) -> LimitReport:
    """Relate the direct plane-wave limit to the printed exp(i (h+ x - h- xbar)).

    Substituting h+ -> -i h+ and h- -> -i h- in exp(-h+ x + h- xbar) gives the
    printed series term by term.
    """
    rep = LimitReport("plane-wave phase convention", window={"order": order}, order=order)
    direct = classical_oracle("planewave", order)
    printed = classical_oracle("planewave", order, phase="printed")
    sub = {k: v.scale_params(hp=-I.constant_value(), hm=-I.constant_value()) for k, v in direct.terms.items()}
    for key in sorted(set(sub) | set(printed.terms)):
        rep.expect_equal(key, printed.coefficient(key), sub.get(key, ZERO))
    rep.details["substitution"] = "h+ -> -i*h+, h- -> -i*h-"
    rep.details["direct_equals_printed_without_substitution"] = direct == printed
    rep.details["direct"] = "exp(-h+*x + h-*xbar)"
    rep.details["printed"] = "exp(i*(h+*x - h-*xbar))"
    return rep
