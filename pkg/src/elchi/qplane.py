"""The quantum plane generated by chi = x/z and chibar = -xbar/z.

Inside F the plane is spanned by the l = 0 monomials, with
``x = a1 - i a2`` and ``xbar = a1 + i a2``.  In the chi variables the
commutation relation is z-free,

    chibar chi = chi chibar - chi + chibar,

and more generally ``chibar P(chi) = P(chi + 1) chibar + chi (P(chi) - P(chi + 1))``.
Elements are stored chi-left: keys ``(p, q)`` for ``chi^p chibar^q``.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb
from typing import Dict, NamedTuple, Tuple

from .envalg import (
    UElement,
    _gen_coproduct_terms,
    _gens_right_to_left,
    _gen_element,
    ell_action,
    lambda_action,
    named_element,
)
from .funalg import FElement, _mono_product as _f_mono_product, f_coproduct
from .scalar import I, ONE, Z, GaussianRational, ParamScalar
from .sparse import SparseElement, TensorElement, accumulate, product_from_table

__all__ = [
    "NotInPlaneError",
    "PlaneMonomial",
    "PlaneElement",
    "PlaneCoactionElement",
    "PochBasisElement",
    "chi",
    "chibar",
    "plane_normal_product",
    "plane_to_f",
    "plane_from_f",
    "pochhammer_poly",
    "poch_chi",
    "poch_chibar",
    "rho",
    "rho_poly",
    "plane_coaction",
    "invariance_check",
    "poch_basis_element",
    "poch_basis_convert",
    "plane_lambda",
]


class NotInPlaneError(ValueError):
    """Raised when an F element has a Th(l) component with l != 0."""


class PlaneMonomial(NamedTuple):
    p: int
    q: int


def _pkey_str(key) -> str:
    p, q = key
    parts = []
    for name, e in (("chi", p), ("chibar", q)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class PlaneElement(SparseElement):
    UNIT_KEY = (0, 0)

    @staticmethod
    def _canon_key(key):
        p, q = key
        if p < 0 or q < 0:
            raise ValueError(f"negative plane exponent in {key}")
        return (int(p), int(q))

    def _product(self, other: "PlaneElement") -> "PlaneElement":
        return PlaneElement.from_acc(product_from_table(self, other, _mono_product))

    def _key_str(self, key) -> str:
        return _pkey_str(key)

    def degree(self) -> int:
        return max((p + q for p, q in self.terms), default=0)


def chi() -> PlaneElement:
    return PlaneElement.basis((1, 0))


def chibar() -> PlaneElement:
    return PlaneElement.basis((0, 1))


# --------------------------------------------------------------------------
# multiplication


@lru_cache(maxsize=None)
def _cbar_chi_pow(r: int) -> Tuple:
    """chibar * chi^r = (chi+1)^r chibar + chi^(r+1) - chi (chi+1)^r."""
    acc: Dict = {(r + 1, 0): ONE}
    for j in range(r + 1):
        c = ParamScalar.const(comb(r, j))
        accumulate(acc, (j, 1), c)
        accumulate(acc, (j + 1, 0), -c)
    return tuple((k, v) for k, v in acc.items() if v.terms)


@lru_cache(maxsize=None)
def _swap(q: int, r: int) -> Tuple:
    """Normal form of chibar^q chi^r."""
    if q == 0 or r == 0:
        return (((r, q), ONE),)
    acc: Dict = {}
    # chibar^q chi^r = chibar^(q-1) (chibar chi^r)
    for (p1, q1), c1 in _cbar_chi_pow(r):
        for (p2, q2), c2 in _swap(q - 1, p1):
            accumulate(acc, (p2, q2 + q1), c1 * c2)
    return tuple((k, v) for k, v in acc.items() if v.terms)


@lru_cache(maxsize=None)
def _mono_product(u, v) -> Tuple:
    p, q = u
    r, s = v
    return tuple(((p + a, b + s), c) for (a, b), c in _swap(q, r))


def plane_normal_product(a: PlaneElement, b: PlaneElement) -> PlaneElement:
    return a * b


# --------------------------------------------------------------------------
# passage to and from F


_ZINV = Z.inverse()
_HALF = ParamScalar.const(GaussianRational("1/2"))


@lru_cache(maxsize=None)
def _chi_f() -> FElement:
    return FElement({(0, 1, 0): _ZINV, (0, 0, 1): -I * _ZINV})


@lru_cache(maxsize=None)
def _chibar_f() -> FElement:
    return FElement({(0, 1, 0): -_ZINV, (0, 0, 1): -I * _ZINV})


@lru_cache(maxsize=None)
def _mono_to_f(key) -> FElement:
    p, q = key
    if q:
        return _mono_to_f((p, q - 1)) * _chibar_f()
    if p:
        return _mono_to_f((p - 1, 0)) * _chi_f()
    return FElement.one()


def plane_to_f(a: PlaneElement) -> FElement:
    """Substitute chi = (a1 - i a2)/z, chibar = -(a1 + i a2)/z."""
    return a.linear(_mono_to_f, FElement)


@lru_cache(maxsize=None)
def _a1_plane() -> PlaneElement:
    return PlaneElement({(1, 0): Z * _HALF, (0, 1): -Z * _HALF})


@lru_cache(maxsize=None)
def _a2_plane() -> PlaneElement:
    c = I * Z * _HALF
    return PlaneElement({(1, 0): c, (0, 1): c})


@lru_cache(maxsize=None)
def _mono_from_f(m: int, n: int) -> PlaneElement:
    if n:
        return _mono_from_f(m, n - 1) * _a2_plane()
    if m:
        return _mono_from_f(m - 1, 0) * _a1_plane()
    return PlaneElement.one()


def plane_from_f(a: FElement) -> PlaneElement:
    """Inverse of :func:`plane_to_f` on the l = 0 subalgebra."""
    acc: Dict = {}
    for (l, m, n), c in a.terms.items():
        if l:
            raise NotInPlaneError(f"term Th({l}) a1^{m} a2^{n} is not in the quantum plane")
        for k, v in _mono_from_f(m, n).terms.items():
            accumulate(acc, k, c * v)
    return PlaneElement.from_acc(acc)


# --------------------------------------------------------------------------
# Pochhammer polynomials and the rho family


def pochhammer_poly(base: PlaneElement, n: int) -> PlaneElement:
    """(base)_n = base (base + 1) ... (base + n - 1)."""
    out = PlaneElement.one()
    for j in range(n):
        out = out * (base + j)
    return out


@lru_cache(maxsize=None)
def poch_chi(n: int, shift: int = 0) -> PlaneElement:
    """(chi + shift)_n."""
    return pochhammer_poly(chi() + shift, n)


@lru_cache(maxsize=None)
def poch_chibar(n: int, shift: int = 0) -> PlaneElement:
    """(chibar + shift)_n."""
    return pochhammer_poly(chibar() + shift, n)


@lru_cache(maxsize=None)
def poch_one_minus_chi(n: int, shift: int = 0) -> PlaneElement:
    """(shift + 1 - chi)_n."""
    return pochhammer_poly(PlaneElement.scalar(shift + 1) - chi(), n)


@lru_cache(maxsize=None)
def poch_one_minus_chibar(n: int, shift: int = 0) -> PlaneElement:
    """(shift + 1 - chibar)_n."""
    return pochhammer_poly(PlaneElement.scalar(shift + 1) - chibar(), n)


def rho() -> PlaneElement:
    """rho = chibar (1 - chi) = chi - chi chibar."""
    return rho_poly(1)


@lru_cache(maxsize=None)
def rho_poly(n: int) -> PlaneElement:
    """rho_n = rho (rho + 2) (rho + 6) ... (rho + n(n-1))."""
    if n == 0:
        return PlaneElement.one()
    if n == 1:
        return chibar() * (1 - chi())
    return rho_poly(n - 1) * (rho_poly(1) + n * (n - 1))


# --------------------------------------------------------------------------
# coaction


class PlaneCoactionElement(TensorElement):
    """Element of F (x) B: left slot keyed like F, right slot like the plane."""

    FACTOR_TABLES = (_f_mono_product, _mono_product)
    FACTOR_UNITS = ((0, 0, 0), (0, 0))

    def _key_str(self, key) -> str:
        f, p = key
        return f"{FElement.basis(f)._key_str(f) or '1'} (x) {_pkey_str(p) or '1'}"


@lru_cache(maxsize=None)
def _gen_coaction(which: str) -> PlaneCoactionElement:
    if which == "chi":
        return PlaneCoactionElement.pure(FElement.basis((1, 0, 0)), chi()) + PlaneCoactionElement.pure(
            _chi_f(), PlaneElement.one()
        )
    return PlaneCoactionElement.pure(FElement.basis((-1, 0, 0)), chibar()) + PlaneCoactionElement.pure(
        _chibar_f(), PlaneElement.one()
    )


@lru_cache(maxsize=None)
def _mono_coaction(key) -> PlaneCoactionElement:
    p, q = key
    if q:
        return _mono_coaction((p, q - 1)) * _gen_coaction("chibar")
    if p:
        return _mono_coaction((p - 1, 0)) * _gen_coaction("chi")
    return PlaneCoactionElement.one()


def plane_coaction(a: PlaneElement) -> PlaneCoactionElement:
    """Algebra map with chi -> Th(1) (x) chi + chi (x) 1, chibar -> Th(-1) (x) chibar + chibar (x) 1."""
    return a.linear(_mono_coaction, PlaneCoactionElement)


def coaction_via_coproduct(a: PlaneElement) -> PlaneCoactionElement:
    """Restriction of the F coproduct, with the right slot read back into the plane."""
    acc: Dict = {}
    for (f1, f2), c in f_coproduct(plane_to_f(a)).terms.items():
        for k, v in plane_from_f(FElement.basis(f2)).terms.items():
            accumulate(acc, (f1, k), c * v)
    return PlaneCoactionElement.from_acc(acc)


def invariance_check(f: FElement) -> bool:
    """True iff ell(X) f = 0."""
    return not ell_action(named_element("X"), f)


# --------------------------------------------------------------------------
# Pochhammer basis


class PochBasisElement(NamedTuple):
    """rho_ell (chi)_r (family "chi") or rho_ell (chibar)_r (family "chibar").

    At r = 0 both families coincide; the canonical label is "chi".
    """

    family: str
    ell: int
    r: int

    @classmethod
    def make(cls, family: str, ell: int, r: int) -> "PochBasisElement":
        if family not in ("chi", "chibar"):
            raise ValueError(f"unknown family {family!r}")
        if r == 0:
            family = "chi"
        return cls(family, ell, r)


@lru_cache(maxsize=None)
def poch_basis_element(b: PochBasisElement) -> PlaneElement:
    fam, ell, r = b
    right = poch_chi(r) if fam == "chi" else poch_chibar(r)
    return rho_poly(ell) * right


def _leading_label(key) -> Tuple[PochBasisElement, ParamScalar]:
    # top-degree part of rho_ell (chi)_r is (-1)^ell chi^(ell+r) chibar^ell
    p, q = key
    if p >= q:
        b = PochBasisElement.make("chi", q, p - q)
        sign = q
    else:
        b = PochBasisElement.make("chibar", p, q - p)
        sign = p
    return b, (-ONE if sign % 2 else ONE)


def poch_basis_convert(a, direction: str = "to_poch"):
    """Change of basis between chi^p chibar^q and rho_ell (chi)_r / rho_ell (chibar)_r.

    ``to_poch`` takes a PlaneElement and returns ``{PochBasisElement: coeff}``;
    ``to_monomial`` takes such a mapping and returns a PlaneElement.
    """
    if direction == "to_monomial":
        acc: Dict = {}
        for b, c in a.items():
            for k, v in poch_basis_element(PochBasisElement.make(*b)).terms.items():
                accumulate(acc, k, c * v)
        return PlaneElement.from_acc(acc)
    if direction != "to_poch":
        raise ValueError(f"unknown direction {direction!r}")
    rest = dict(a.terms)
    out: Dict = {}
    while rest:
        key = max(rest, key=lambda k: (k[0] + k[1], k))
        c = rest.pop(key)
        b, sign = _leading_label(key)
        coef = c * sign
        out[b] = coef
        for k, v in poch_basis_element(b).terms.items():
            if k == key:
                continue
            accumulate(rest, k, -coef * v)
            if not rest[k].terms:
                del rest[k]
    return out


# --------------------------------------------------------------------------
# lambda on the plane
#
# Generator images of chi and chibar are taken from the F action; longer
# monomials use lambda(Y)(x w) = sum lambda(Y(2)) x . lambda(Y(1)) w with x the
# first letter.  Each E^b acts as the automorphism chi -> chi - b/2,
# chibar -> chibar - b/2.


@lru_cache(maxsize=None)
def _letter_lambda(gen, which: str) -> PlaneElement:
    src = _chi_f() if which == "chi" else _chibar_f()
    return plane_from_f(lambda_action(_gen_element(gen), src))


@lru_cache(maxsize=None)
def _shift_power(which: str, e: int, shift) -> PlaneElement:
    base = (chi() if which == "chi" else chibar()) + PlaneElement.scalar(shift)
    return base ** e


@lru_cache(maxsize=None)
def _act_gen(gen, pkey) -> PlaneElement:
    p, q = pkey
    if isinstance(gen, tuple):
        b = gen[1]
        if b == 0 or pkey == (0, 0):
            return PlaneElement.basis(pkey)
        shift = ParamScalar.const(GaussianRational(f"{-b}/2"))
        return _shift_power("chi", p, shift) * _shift_power("chibar", q, shift)
    if pkey == (0, 0):
        return PlaneElement.zero()
    if p + q == 1:
        return _letter_lambda(gen, "chi" if p else "chibar")
    if p:
        x, rest = (1, 0), (p - 1, q)
    else:
        x, rest = (0, 1), (0, q - 1)
    acc: Dict = {}
    for k1, k2, c in _gen_coproduct_terms(gen):
        left = _act_umono(k2, x)
        if not left:
            continue
        right = _act_umono(k1, rest)
        if not right:
            continue
        for k, v in (left * right).terms.items():
            accumulate(acc, k, c * v)
    return PlaneElement.from_acc(acc)


def _act_gen_element(gen, a: PlaneElement) -> PlaneElement:
    acc: Dict = {}
    for key, c in a.terms.items():
        for k2, c2 in _act_gen(gen, key).terms.items():
            accumulate(acc, k2, c * c2)
    return PlaneElement.from_acc(acc)


@lru_cache(maxsize=None)
def _act_umono(ukey, pkey) -> PlaneElement:
    cur = PlaneElement.basis(pkey)
    for gen in _gens_right_to_left(ukey):
        cur = _act_gen_element(gen, cur)
        if not cur:
            break
    return cur


def plane_lambda(u: UElement, a: PlaneElement, route: str = "f") -> PlaneElement:
    """lambda(u) restricted to the quantum plane.

    The default ``route="f"`` converts to F, acts there and converts back;
    ``route="plane"`` stays in the plane and agrees with it exactly.
    """
    if route == "f":
        return plane_from_f(lambda_action(u, plane_to_f(a)))
    if route != "plane":
        raise ValueError(f"unknown route {route!r}")
    acc: Dict = {}
    for ukey, cu in u.terms.items():
        for pkey, cp in a.terms.items():
            c = cu * cp
            for k, v in _act_umono(ukey, pkey).terms.items():
                accumulate(acc, k, c * v)
    return PlaneElement.from_acc(acc)
