"""The Hopf *-algebra F_l(E(2)) of quantized functions on E(2).

Elements are kept in the normal-ordered basis ``Th(l) a1^m a2^n`` where
``Th(l) = exp(-i l theta)``.  Multiplication rewrites with

    [Th(1), a1] = (z/2) (1 - Th(1))^2
    [Th(1), a2] = i (z/2) (Th(2) - 1)
    [a1, a2]    = i z a1

Since [a1, Th(1)] and [a2, Th(1)] are functions of Th alone, moving a letter
past ``Th(l)`` only needs the derivative rule ``[a, Th(l)] = l Th(l-1) [a, Th(1)]``
and ``a2 a1^m = a1^m (a2 - i m z)``.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Dict, NamedTuple, Tuple

from .scalar import I, ONE, ZERO, Z, GaussianRational, ParamScalar
from .sparse import SparseElement, TensorElement, accumulate, product_from_table

__all__ = [
    "FMonomial",
    "FElement",
    "FTensorElement",
    "th",
    "a1",
    "a2",
    "f_normal_product",
    "f_coproduct",
    "f_antipode",
    "f_counit",
    "f_star",
    "f_window",
]


class FMonomial(NamedTuple):
    """Basis key ``Th(l) a1^m a2^n``."""

    l: int
    m: int
    n: int


_HALF = ParamScalar.const(GaussianRational("1/2"))
_IHALF = ParamScalar.const(GaussianRational(0, "1/2"))
_ZHALF = Z * _HALF
_IZHALF = I * _ZHALF
_IZ = I * Z


def _fkey_str(key) -> str:
    l, m, n = key
    parts = []
    if l:
        parts.append(f"Th({l})")
    for name, e in (("a1", m), ("a2", n)):
        if e == 1:
            parts.append(name)
        elif e:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


class FElement(SparseElement):
    UNIT_KEY = (0, 0, 0)

    @staticmethod
    def _canon_key(key):
        l, m, n = key
        if m < 0 or n < 0:
            raise ValueError(f"negative a-exponent in {key}")
        return (int(l), int(m), int(n))

    def _product(self, other: "FElement") -> "FElement":
        return FElement.from_acc(product_from_table(self, other, _mono_product))

    def _key_str(self, key) -> str:
        return _fkey_str(key)

    def max_degree(self) -> int:
        return max((m + n for _, m, n in self.terms), default=0)


def th(l: int = 1) -> FElement:
    return FElement.basis((l, 0, 0))


def a1() -> FElement:
    return FElement.basis((0, 1, 0))


def a2() -> FElement:
    return FElement.basis((0, 0, 1))


def f_window(lmax: int, degree: int):
    """All basis keys with |l| <= lmax and m + n <= degree."""
    return [
        (l, m, d - m)
        for l in range(-lmax, lmax + 1)
        for d in range(degree + 1)
        for m in range(d + 1)
    ]


# --------------------------------------------------------------------------
# multiplication


@lru_cache(maxsize=None)
def _lmul_a1(key) -> Tuple:
    l, m, n = key
    out = [((l, m + 1, n), ONE)]
    if l:
        c = _ZHALF * l
        out += [((l - 1, m, n), -c), ((l, m, n), c + c), ((l + 1, m, n), -c)]
    return tuple(out)


@lru_cache(maxsize=None)
def _lmul_a2(key) -> Tuple:
    l, m, n = key
    out = [((l, m, n + 1), ONE)]
    diag = ZERO
    if m:
        diag = -_IZ * m
    if l:
        c = _IZHALF * l
        out += [((l + 1, m, n), -c), ((l - 1, m, n), c)]
    if diag.terms:
        out.append(((l, m, n), diag))
    return tuple(out)


def _apply_left(acc: Dict, rule) -> Dict:
    out: Dict = {}
    for key, c in acc.items():
        for k2, c2 in rule(key):
            accumulate(out, k2, c if c2 is ONE else c * c2)
    return {k: v for k, v in out.items() if v.terms}


@lru_cache(maxsize=None)
def _mono_product(u, v) -> Tuple:
    l, m, n = u
    if m == 0 and n == 0:
        return (((v[0] + l, v[1], v[2]), ONE),)
    acc = {tuple(v): ONE}
    for _ in range(n):
        acc = _apply_left(acc, _lmul_a2)
    for _ in range(m):
        acc = _apply_left(acc, _lmul_a1)
    return tuple(((k[0] + l, k[1], k[2]), c) for k, c in acc.items())


def f_normal_product(a: FElement, b: FElement) -> FElement:
    return a * b


def f_letters(key) -> list:
    """Word of generator letters for a basis key: Th(+-1)^|l|, a1^m, a2^n."""
    l, m, n = key
    step = 1 if l > 0 else -1
    return [("Th", step)] * abs(l) + ["a1"] * m + ["a2"] * n


def split_first(key):
    """Split ``key`` as (first letter key, rest key) so that key = first * rest."""
    l, m, n = key
    if l:
        s = 1 if l > 0 else -1
        return (s, 0, 0), (l - s, m, n)
    if m:
        return (0, 1, 0), (0, m - 1, n)
    return (0, 0, 1), (0, 0, n - 1)


def is_letter(key) -> bool:
    l, m, n = key
    return abs(l) + m + n == 1


# --------------------------------------------------------------------------
# tensors, coproduct


class FTensorElement(TensorElement):
    FACTOR_TABLES = (_mono_product,)
    FACTOR_UNITS = ((0, 0, 0),)

    def _key_str(self, key) -> str:
        return " (x) ".join(_fkey_str(k) or "1" for k in key)


def _cos() -> FElement:
    return FElement({(-1, 0, 0): _HALF, (1, 0, 0): _HALF})


def _sin() -> FElement:
    return FElement({(1, 0, 0): _IHALF, (-1, 0, 0): -_IHALF})


@lru_cache(maxsize=None)
def _letter_coproduct(key) -> FTensorElement:
    l, m, n = key
    one = FElement.one()
    if m == 0 and n == 0:
        return FTensorElement.basis(((l, 0, 0), (l, 0, 0)))
    if (l, m, n) == (0, 1, 0):
        return (
            FTensorElement.pure(_cos(), a1())
            - FTensorElement.pure(_sin(), a2())
            + FTensorElement.pure(a1(), one)
        )
    if (l, m, n) == (0, 0, 1):
        return (
            FTensorElement.pure(_sin(), a1())
            + FTensorElement.pure(_cos(), a2())
            + FTensorElement.pure(a2(), one)
        )
    raise ValueError(f"{key} is not a generator")


@lru_cache(maxsize=None)
def _mono_coproduct(key) -> FTensorElement:
    l, m, n = key
    if m == 0 and n == 0:
        return _letter_coproduct((l, 0, 0))
    if n:
        return _mono_coproduct((l, m, n - 1)) * _letter_coproduct((0, 0, 1))
    return _mono_coproduct((l, m - 1, 0)) * _letter_coproduct((0, 1, 0))


def f_coproduct(a: FElement) -> FTensorElement:
    """Algebra-map extension of the generator coproducts."""
    acc: Dict = {}
    for key, c in a.terms.items():
        for k2, c2 in _mono_coproduct(key).terms.items():
            accumulate(acc, k2, c * c2)
    return FTensorElement.from_acc(acc)


def f_coproduct_monomial(key) -> FTensorElement:
    return _mono_coproduct(tuple(key))


# --------------------------------------------------------------------------
# antipode, counit, star


@lru_cache(maxsize=None)
def _mono_antipode(key) -> FElement:
    # S(Th(l) a1^m a2^n) = S(a2)^n S(a1)^m Th(-l)
    l, m, n = key
    if n:
        return _s_a2() * _mono_antipode((l, m, n - 1))
    if m:
        return _s_a1() * _mono_antipode((l, m - 1, 0))
    return FElement.basis((-l, 0, 0))


@lru_cache(maxsize=None)
def _s_a1() -> FElement:
    return -(_cos() * a1()) - _sin() * a2()


@lru_cache(maxsize=None)
def _s_a2() -> FElement:
    return _sin() * a1() - _cos() * a2()


def f_antipode(a: FElement) -> FElement:
    """Antihomomorphism with S(Th(1)) = Th(-1), S(a1) = -cos a1 - sin a2, S(a2) = sin a1 - cos a2."""
    return a.linear(_mono_antipode, FElement)


def f_counit(a: FElement) -> ParamScalar:
    total = ZERO
    for (l, m, n), c in a.terms.items():
        if m == 0 and n == 0:
            total = total + c
    return total


@lru_cache(maxsize=None)
def _mono_star(key) -> FElement:
    l, m, n = key
    out = FElement.basis((0, 0, n))
    out = out * FElement.basis((0, m, 0))
    return out * FElement.basis((-l, 0, 0))


def f_star(a: FElement) -> FElement:
    """Antilinear antihomomorphism fixing a1, a2 and sending Th(l) to Th(-l)."""
    acc: Dict = {}
    for key, c in a.terms.items():
        cc = c.conjugate()
        for k2, c2 in _mono_star(key).terms.items():
            accumulate(acc, k2, cc * c2)
    return FElement.from_acc(acc)


def f_tensor_star(t: FTensorElement) -> FTensorElement:
    """``* (x) *`` applied slotwise (no flip)."""
    acc: Dict = {}
    for key, c in t.terms.items():
        combos = [((), c.conjugate())]
        for k in key:
            img = _mono_star(k)
            combos = [(kk + (k2,), cc * c2) for kk, cc in combos for k2, c2 in img.terms.items()]
        for kk, cc in combos:
            accumulate(acc, kk, cc)
    return FTensorElement.from_acc(acc)


def f_multiply(t: FTensorElement) -> FElement:
    """Multiplication map F (x) F -> F."""
    acc: Dict = {}
    for (x, y), c in t.terms.items():
        for k, c2 in _mono_product(x, y):
            accumulate(acc, k, c * c2)
    return FElement.from_acc(acc)
