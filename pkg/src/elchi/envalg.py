"""The quantized enveloping algebra U_l(E(2)), its pairing with F_l(E(2)),
and the two canonical left actions.

PBW monomials are keys ``(a, c, b, d)`` for ``P1^a P2^c E^b J^d`` where
``E = exp(z P2 / 2)``.  P1, P2 and every E^b commute; J is moved to the
right with

    J P1  = P1 J + (i/2z) (E^2 - E^-2)
    J g   = g J - i P1 g'(P2)          for g a function of P2
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

from .funalg import (
    FElement,
    f_coproduct,
    f_coproduct_monomial,
    f_window,
    is_letter,
    split_first,
)
from .report import VerificationReport
from .scalar import I, ONE, ZERO, Z, GaussianRational, ParamScalar
from .sparse import SparseElement, TensorElement, accumulate, product_from_table

__all__ = [
    "UMonomial",
    "UElement",
    "UTensorElement",
    "P1",
    "P2",
    "J",
    "E",
    "NAMED_ELEMENTS",
    "named_element",
    "u_normal_product",
    "u_coproduct",
    "u_antipode",
    "u_counit",
    "u_star",
    "u_f_pairing",
    "lambda_action",
    "ell_action",
    "prop24_crosscheck",
    "prop24_closed_form",
    "commutator",
]


class UMonomial(NamedTuple):
    """Basis key ``P1^a P2^c E^b J^d``."""

    a: int
    c: int
    b: int
    d: int


_HALF = ParamScalar.const(GaussianRational("1/2"))
_QUARTER = ParamScalar.const(GaussianRational("1/4"))
_ZINV = Z.inverse()
_I_2Z = I * _HALF * _ZINV


def _ukey_str(key) -> str:
    a, c, b, d = key
    parts = []
    for name, e in (("P1", a), ("P2", c)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    if b:
        parts.append(f"E({b})")
    if d == 1:
        parts.append("J")
    elif d:
        parts.append(f"J^{d}")
    return "*".join(parts)


class UElement(SparseElement):
    UNIT_KEY = (0, 0, 0, 0)

    @staticmethod
    def _canon_key(key):
        a, c, b, d = key
        if a < 0 or c < 0 or d < 0:
            raise ValueError(f"negative PBW exponent in {key}")
        return (int(a), int(c), int(b), int(d))

    def _product(self, other: "UElement") -> "UElement":
        return UElement.from_acc(product_from_table(self, other, _mono_product))

    def _key_str(self, key) -> str:
        return _ukey_str(key)


def P1() -> UElement:
    return UElement.basis((1, 0, 0, 0))


def P2() -> UElement:
    return UElement.basis((0, 1, 0, 0))


def J() -> UElement:
    return UElement.basis((0, 0, 0, 1))


def E(b: int = 1) -> UElement:
    return UElement.basis((0, 0, b, 0))


def u_window(degree: int, bmax: int):
    """PBW keys with a + c + d <= degree and |b| <= bmax."""
    return [
        (a, c, b, d)
        for a in range(degree + 1)
        for c in range(degree + 1 - a)
        for d in range(degree + 1 - a - c)
        for b in range(-bmax, bmax + 1)
    ]


# --------------------------------------------------------------------------
# multiplication


@lru_cache(maxsize=None)
def _lmul_J(key) -> Tuple:
    a, c, b, d = key
    out = [((a, c, b, d + 1), ONE)]
    if a:
        coef = _I_2Z * a
        out += [((a - 1, c, b + 2, d), coef), ((a - 1, c, b - 2, d), -coef)]
    if c:
        out.append(((a + 1, c - 1, b, d), -I * c))
    if b:
        out.append(((a + 1, c, b, d), -I * Z * _HALF * b))
    return tuple(out)


def _apply_left(acc: Dict, rule) -> Dict:
    out: Dict = {}
    for key, c in acc.items():
        for k2, c2 in rule(key):
            accumulate(out, k2, c if c2 is ONE else c * c2)
    return {k: v for k, v in out.items() if v.terms}


@lru_cache(maxsize=None)
def _mono_product(u, v) -> Tuple:
    a, c, b, d = u
    acc = {tuple(v): ONE}
    for _ in range(d):
        acc = _apply_left(acc, _lmul_J)
    return tuple(((k[0] + a, k[1] + c, k[2] + b, k[3]), x) for k, x in acc.items())


def u_normal_product(x: UElement, y: UElement) -> UElement:
    return x * y


def commutator(x, y):
    return x * y - y * x


# --------------------------------------------------------------------------
# Hopf structure


class UTensorElement(TensorElement):
    FACTOR_TABLES = (_mono_product,)
    FACTOR_UNITS = ((0, 0, 0, 0),)

    def _key_str(self, key) -> str:
        return " (x) ".join(_ukey_str(k) or "1" for k in key)


@lru_cache(maxsize=None)
def _gen_coproduct(name: str) -> UTensorElement:
    one = UElement.one()
    if name == "P1":
        return UTensorElement.pure(E(-1), P1()) + UTensorElement.pure(P1(), E(1))
    if name == "P2":
        return UTensorElement.pure(P2(), one) + UTensorElement.pure(one, P2())
    if name == "J":
        return UTensorElement.pure(E(-1), J()) + UTensorElement.pure(J(), E(1))
    raise ValueError(name)


@lru_cache(maxsize=None)
def _mono_coproduct(key) -> UTensorElement:
    a, c, b, d = key
    if d:
        return _mono_coproduct((a, c, b, d - 1)) * _gen_coproduct("J")
    if c:
        return _mono_coproduct((a, c - 1, b, 0)) * _gen_coproduct("P2")
    if a:
        return _mono_coproduct((a - 1, 0, b, 0)) * _gen_coproduct("P1")
    return UTensorElement.basis(((0, 0, b, 0), (0, 0, b, 0)))


def u_coproduct(x: UElement) -> UTensorElement:
    acc: Dict = {}
    for key, c in x.terms.items():
        for k2, c2 in _mono_coproduct(key).terms.items():
            accumulate(acc, k2, c * c2)
    return UTensorElement.from_acc(acc)


@lru_cache(maxsize=None)
def _mono_antipode(key) -> UElement:
    a, c, b, d = key
    if d:
        s_j = -J() - (I * Z * _HALF) * P1()
        return s_j * _mono_antipode((a, c, b, d - 1))
    sign = -1 if (a + c) % 2 else 1
    return UElement({(a, c, -b, 0): sign})


def u_antipode(x: UElement) -> UElement:
    """S(P1) = -P1, S(P2) = -P2, S(E^b) = E^-b, S(J) = -J - i z P1 / 2."""
    return x.linear(_mono_antipode, UElement)


def u_counit(x: UElement) -> ParamScalar:
    total = ZERO
    for (a, c, b, d), coef in x.terms.items():
        if a == 0 and c == 0 and d == 0:
            total = total + coef
    return total


@lru_cache(maxsize=None)
def _mono_star(key) -> UElement:
    a, c, b, d = key
    acc = {(a, c, b, 0): ONE}
    for _ in range(d):
        acc = _apply_left(acc, _lmul_J)
    return UElement.from_acc(acc)


def u_star(x: UElement) -> UElement:
    """Antilinear antihomomorphism fixing P1, P2, J (and hence every E^b)."""
    acc: Dict = {}
    for key, c in x.terms.items():
        cc = c.conjugate()
        for k2, c2 in _mono_star(key).terms.items():
            accumulate(acc, k2, cc * c2)
    return UElement.from_acc(acc)


# --------------------------------------------------------------------------
# named elements


def _build_named() -> Dict[str, UElement]:
    one = UElement.one()
    half = _HALF
    zq = Z * _QUARTER
    x_el = J() - (I * zq) * P1()
    h_plus = (E(2) - one).scale(half * _ZINV) - (I * half) * (E(1) * P1())
    h_minus = (one - E(-2)).scale(half * _ZINV) + (I * half) * (E(-1) * P1())
    u_plus = (one + E(-2) - (I * Z) * (E(-1) * P1())).scale(half)
    u_minus = (one + E(2) + (I * Z) * (E(1) * P1())).scale(half)
    hh_plus = u_plus * h_plus
    hh_minus = u_minus * h_minus
    return {
        "nu1": (-I) * (E(-1) * P1()),
        "nu2": (-I) * P2(),
        "tau": (-I) * (E(-1) * x_el),
        "X": x_el,
        "Hplus": h_plus,
        "Hminus": h_minus,
        "Uplus": u_plus,
        "Uminus": u_minus,
        "HHplus": hh_plus,
        "HHminus": hh_minus,
        "Jscript": E(-1) * x_el,
        "Casimir": (E(2) - 2 * one + E(-2)).scale(_ZINV * _ZINV) + P1() * P1(),
        "CasimirTilde": hh_plus * hh_minus,
    }


NAMED_ELEMENTS: Dict[str, UElement] = _build_named()


def named_element(name: str) -> UElement:
    try:
        return NAMED_ELEMENTS[name]
    except KeyError:
        raise KeyError(f"unknown named element {name!r}; known: {sorted(NAMED_ELEMENTS)}") from None


# --------------------------------------------------------------------------
# duality pairing
#
# Primitive functionals on Th(l) a1^m a2^n:
#   <nu1, .> = d_{m1} d_{n0}     <nu2, .> = d_{m0} d_{n1}
#   <tau, .> = -i l d_{m0} d_{n0}    <E^b, .> = d_{m0} (i b z / 2)^n
# P1 = i E nu1, P2 = i nu2, J = i E tau + i (z/4) P1.


def _word(ukey) -> Tuple:
    a, c, b, d = ukey
    w = ("P1",) * a + ("P2",) * c
    if b:
        w += (("E", b),)
    return w + ("J",) * d


@lru_cache(maxsize=None)
def pair_letter(letter, fkey) -> ParamScalar:
    """Pairing of a single U letter with a basis monomial of F."""
    l, m, n = fkey
    if isinstance(letter, tuple):
        _, b = letter
        if m:
            return ZERO
        return (I * Z * _HALF * b) ** n
    if letter == "nu1":
        return ONE if (m, n) == (1, 0) else ZERO
    if letter == "nu2":
        return ONE if (m, n) == (0, 1) else ZERO
    if letter == "tau":
        return -I * l if m == 0 and n == 0 else ZERO
    if letter == "P2":
        return I * pair_letter("nu2", fkey)
    if letter in ("P1", "J"):
        prim = "nu1" if letter == "P1" else "tau"
        total = ZERO
        for (g1, g2), c in f_coproduct_monomial(fkey).terms.items():
            v = pair_letter(("E", 1), g1)
            if v.terms:
                w = pair_letter(prim, g2)
                if w.terms:
                    total = total + c * v * w
        total = I * total
        if letter == "J":
            total = total + I * Z * _QUARTER * pair_letter("P1", fkey)
        return total
    raise ValueError(f"unknown letter {letter!r}")


@lru_cache(maxsize=None)
def _pair_word(word: Tuple, fkey) -> ParamScalar:
    if not word:
        return ONE if fkey[1] == 0 and fkey[2] == 0 else ZERO
    if len(word) == 1:
        return pair_letter(word[0], fkey)
    total = ZERO
    head, rest = word[0], word[1:]
    for (g1, g2), c in f_coproduct_monomial(fkey).terms.items():
        v = pair_letter(head, g1)
        if v.terms:
            w = _pair_word(rest, g2)
            if w.terms:
                total = total + c * v * w
    return total


def u_f_pairing(u: UElement, f: FElement) -> ParamScalar:
    """Bilinear pairing with <uv, f> = sum <u, f(1)> <v, f(2)>."""
    total = ZERO
    for ukey, cu in u.terms.items():
        word = _word(ukey)
        for fkey, cf in f.terms.items():
            v = _pair_word(word, fkey)
            if v.terms:
                total = total + cu * cf * v
    return total


def pair_tensor(t: UTensorElement, f: FElement, g: FElement) -> ParamScalar:
    """<t, f (x) g> for t in U (x) U."""
    total = ZERO
    for (k1, k2), c in t.terms.items():
        v = u_f_pairing(UElement.basis(k1), f)
        if v.terms:
            w = u_f_pairing(UElement.basis(k2), g)
            if w.terms:
                total = total + c * v * w
    return total


# --------------------------------------------------------------------------
# actions
#
# lambda(Y) f = sum <S(Y), f(1)> f(2)        ell(Y) f = sum f(1) <Y, f(2)>
#
# On generator letters of F both are evaluated literally from the pairing.
# Longer monomials use the module-algebra laws
#   lambda(Y)(x w) = sum lambda(Y(2)) x . lambda(Y(1)) w
#   ell(Y)(x w)    = sum ell(Y(1)) x . ell(Y(2)) w
# which follow from Delta being multiplicative and the pairing being a Hopf
# pairing; `method="coproduct"` evaluates the defining formula on whole
# monomials instead.


def lambda_direct(u: UElement, f: FElement) -> FElement:
    su = u_antipode(u)
    acc: Dict = {}
    for (g1, g2), c in f_coproduct(f).terms.items():
        v = u_f_pairing(su, FElement.basis(g1))
        if v.terms:
            accumulate(acc, g2, c * v)
    return FElement.from_acc(acc)


def ell_direct(u: UElement, f: FElement) -> FElement:
    acc: Dict = {}
    for (g1, g2), c in f_coproduct(f).terms.items():
        v = u_f_pairing(u, FElement.basis(g2))
        if v.terms:
            accumulate(acc, g1, c * v)
    return FElement.from_acc(acc)


_GEN_ELEMENT = {"P1": P1, "P2": P2, "J": J}


def _gen_element(gen) -> UElement:
    if isinstance(gen, tuple):
        return E(gen[1])
    return _GEN_ELEMENT[gen]()


@lru_cache(maxsize=None)
def _gen_coproduct_terms(gen) -> Tuple:
    if isinstance(gen, tuple):
        k = (0, 0, gen[1], 0)
        return ((k, k, ONE),)
    return tuple((k1, k2, c) for (k1, k2), c in _gen_coproduct(gen).terms.items())


def _counit_gen(gen) -> ParamScalar:
    return ONE if isinstance(gen, tuple) else ZERO


@lru_cache(maxsize=None)
def _act_gen(side: str, gen, fkey) -> FElement:
    if fkey == (0, 0, 0):
        return FElement.scalar(_counit_gen(gen))
    if isinstance(gen, tuple) and gen[1] == 0:
        return FElement.basis(fkey)
    if is_letter(fkey):
        direct = lambda_direct if side == "lambda" else ell_direct
        return direct(_gen_element(gen), FElement.basis(fkey))
    x, rest = split_first(fkey)
    acc: Dict = {}
    for k1, k2, c in _gen_coproduct_terms(gen):
        if side == "lambda":
            left, right = _act_umono(side, k2, x), _act_umono(side, k1, rest)
        else:
            left, right = _act_umono(side, k1, x), _act_umono(side, k2, rest)
        if not left or not right:
            continue
        for k, v in (left * right).terms.items():
            accumulate(acc, k, c * v)
    return FElement.from_acc(acc)


def _gens_right_to_left(ukey) -> Tuple:
    a, c, b, d = ukey
    seq = ("J",) * d
    if b:
        seq += (("E", b),)
    return seq + ("P2",) * c + ("P1",) * a


@lru_cache(maxsize=None)
def _act_umono(side: str, ukey, fkey) -> FElement:
    cur = FElement.basis(fkey)
    for gen in _gens_right_to_left(ukey):
        cur = _act_gen_element(side, gen, cur)
        if not cur:
            break
    return cur


def _act_gen_element(side: str, gen, f: FElement) -> FElement:
    acc: Dict = {}
    for key, c in f.terms.items():
        for k2, c2 in _act_gen(side, gen, key).terms.items():
            accumulate(acc, k2, c * c2)
    return FElement.from_acc(acc)


def _act(side: str, u: UElement, f: FElement) -> FElement:
    acc: Dict = {}
    for ukey, cu in u.terms.items():
        for fkey, cf in f.terms.items():
            c = cu * cf
            for k, v in _act_umono(side, ukey, fkey).terms.items():
                accumulate(acc, k, c * v)
    return FElement.from_acc(acc)


def lambda_action(u: UElement, f: FElement, method: str = "leibniz") -> FElement:
    """lambda(u) f = (S(u) (x) id) Delta f."""
    if method == "coproduct":
        return lambda_direct(u, f)
    return _act("lambda", u, f)


def ell_action(u: UElement, f: FElement, method: str = "leibniz") -> FElement:
    """ell(u) f = (id (x) u) Delta f."""
    if method == "coproduct":
        return ell_direct(u, f)
    return _act("ell", u, f)


# --------------------------------------------------------------------------
# printed closed forms of lambda on F, compared against the pairing route


def _a_poly(m: int, shift: ParamScalar, n: int) -> FElement:
    """a1^m (a2 + shift)^n in normal form."""
    base = FElement.basis((0, 0, 1)) + FElement.scalar(shift)
    return FElement.basis((0, m, 0)) * base ** n


def prop24_closed_form(gen: str, key) -> FElement:
    l, m, n = key
    half_iz = I * Z * _HALF
    th_l = FElement.basis((l, 0, 0))
    if gen == "P1":
        if m == 0:
            return FElement.zero()
        return th_l * _a_poly(m - 1, half_iz, n).scale(-I * m)
    if gen == "P2":
        if n == 0:
            return FElement.zero()
        return th_l * FElement.basis((0, m, n - 1)).scale(-I * n)
    if gen == "J":
        plus = FElement.basis((0, 0, 1)) + FElement.scalar(half_iz)
        minus3 = FElement.basis((0, 0, 1)) - FElement.scalar(3 * half_iz)
        first = FElement.basis((0, m, 0)).scale(I * l)
        if m:
            shift = -(I * _HALF) * (GaussianRational(m) - GaussianRational("1/2")) * Z
            first = first + (FElement.basis((0, m - 1, 0)) * (FElement.basis((0, 0, 1)) + FElement.scalar(shift))).scale(m)
        body = first * plus ** n
        body = body + (FElement.basis((0, m + 1, 0)) * (plus ** n - minus3 ** n)).scale(I * _HALF * _ZINV)
        return th_l * body.scale(I)
    raise ValueError(gen)


def prop24_crosscheck(lmax: int = 2, degree: int = 4, gens=("P1", "P2", "J")):
    """Compare the printed closed forms of lambda(P1), lambda(P2), lambda(J)
    with the pairing-route action on every window monomial.

    Returns one report per generator.  Mismatches are recorded with the
    exact discrepancy (pairing route minus printed form); the J report also
    records whether every discrepancy term carries a positive power of z.
    """
    reports = {}
    window = f_window(lmax, degree)
    for gen in gens:
        rep = VerificationReport(
            f"prop24-lambda({gen})",
            window={"lmax": lmax, "degree": degree},
        )
        only_positive_z = True
        for key in window:
            actual = lambda_action(_gen_element(gen), FElement.basis(key))
            expected = prop24_closed_form(gen, key)
            if not rep.expect_equal(key, expected, actual):
                diff = actual - expected
                for _, c in diff.terms.items():
                    if c.z_range()[0] < 1:
                        only_positive_z = False
        rep.details["discrepancies_confined_to_positive_z"] = only_positive_z
        if gen == "J":
            rep.informational = True
        reports[gen] = rep
    return reports
