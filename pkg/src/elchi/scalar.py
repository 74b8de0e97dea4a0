"""Exact coefficient ring Q(i)[z, 1/z, h+, h-, k].

Every algebra in the package stores its coefficients as :class:`ParamScalar`
values: sparse maps from an exponent key ``(z, hp, hm, k)`` to a Gaussian
rational.  The z exponent may be negative, the parameter exponents may not.
Zero coefficients are never stored, so structural equality is mathematical
equality.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterator, Tuple

from gmpy2 import mpq

__all__ = [
    "GaussianRational",
    "ParamScalar",
    "PoleAtZeroError",
    "ONE",
    "ZERO",
    "I",
    "Z",
    "HP",
    "HM",
    "K",
    "as_scalar",
    "scalar_arith",
    "scalar_conjugate",
    "scalar_eval_z0",
]

Key = Tuple[int, int, int, int]

_Q0 = mpq(0)
_Q1 = mpq(1)


class PoleAtZeroError(ArithmeticError):
    """Raised when z = 0 is substituted into a term with a negative z power."""


def _to_mpq(value) -> mpq:
    if isinstance(value, Fraction):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return mpq(value)
    return mpq(value)


def _fmt_q(q: mpq) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is type(_Q0) else _to_mpq(re)
        self.im = im if type(im) is type(_Q0) else _to_mpq(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        return cls(value)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GaussianRational):
            try:
                other = GaussianRational.coerce(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + other.re, self.im + other.im)

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: "GaussianRational") -> "GaussianRational":
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussianRational(a * c, _Q0)
        return GaussianRational(a * c - b * d, a * d + b * c)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __pow__(self, n: int) -> "GaussianRational":
        out = GaussianRational(1)
        for _ in range(n):
            out = out * self
        return out

    def is_real(self) -> bool:
        return not self.im

    def __repr__(self) -> str:
        return f"GaussianRational({_fmt_q(self.re)!r}, {_fmt_q(self.im)!r})"

    def __str__(self) -> str:
        if not self.im:
            return _fmt_q(self.re)
        if not self.re:
            return f"{_fmt_q(self.im)}*i"
        return f"({_fmt_q(self.re)} + {_fmt_q(self.im)}*i)"


class ParamScalar:
    """Sparse Laurent polynomial in z, polynomial in h+, h-, k.

    ``terms`` maps ``(z_exp, hp_exp, hm_exp, k_exp)`` to a nonzero
    :class:`GaussianRational`.  Instances are treated as immutable.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Key, GaussianRational] | None = None, *, _trusted=False):
        if terms is None:
            terms = {}
        elif not _trusted:
            terms = {tuple(k): GaussianRational.coerce(v) for k, v in terms.items()}
            for key in terms:
                if len(key) != 4 or any(e < 0 for e in key[1:]):
                    raise ValueError(f"bad exponent key {key}")
            terms = {k: v for k, v in terms.items() if v}
        self.terms = terms
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, value) -> "ParamScalar":
        g = GaussianRational.coerce(value)
        if not g:
            return cls({}, _trusted=True)
        return cls({(0, 0, 0, 0): g}, _trusted=True)

    @classmethod
    def monomial(cls, coeff=1, z=0, hp=0, hm=0, k=0) -> "ParamScalar":
        return cls({(z, hp, hm, k): coeff})

    # basic queries -------------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0, 0, 0) in self.terms)

    def constant_value(self) -> GaussianRational:
        return self.terms.get((0, 0, 0, 0), GaussianRational(0))

    def items(self) -> Iterator[Tuple[Key, GaussianRational]]:
        """Terms in canonical (sorted) key order."""
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def z_range(self) -> Tuple[int, int]:
        zs = [k[0] for k in self.terms]
        return (min(zs), max(zs)) if zs else (0, 0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ParamScalar):
            try:
                other = as_scalar(other)
            except TypeError:
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # arithmetic ----------------------------------------------------------
    def __add__(self, other) -> "ParamScalar":
        if not isinstance(other, ParamScalar):
            other = _coerce_or_none(other)
            if other is None:
                return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for key, val in other.terms.items():
            cur = out.get(key)
            if cur is None:
                out[key] = val
            else:
                s = cur + val
                if s:
                    out[key] = s
                else:
                    del out[key]
        return ParamScalar(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "ParamScalar":
        return ParamScalar({k: -v for k, v in self.terms.items()}, _trusted=True)

    def __sub__(self, other) -> "ParamScalar":
        if not isinstance(other, ParamScalar):
            other = _coerce_or_none(other)
            if other is None:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "ParamScalar":
        return as_scalar(other) - self

    def __mul__(self, other) -> "ParamScalar":
        if not isinstance(other, ParamScalar):
            other = _coerce_or_none(other)
            if other is None:
                return NotImplemented
        a, b = self.terms, other.terms
        if not a or not b:
            return ZERO
        if len(a) == 1 and len(b) == 1:
            (ka, va), = a.items()
            (kb, vb), = b.items()
            return ParamScalar(
                {(ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3]): va * vb},
                _trusted=True,
            )
        out: Dict[Key, GaussianRational] = {}
        for ka, va in a.items():
            for kb, vb in b.items():
                key = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2], ka[3] + kb[3])
                prod = va * vb
                cur = out.get(key)
                out[key] = prod if cur is None else cur + prod
        return ParamScalar({k: v for k, v in out.items() if v}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ParamScalar":
        if not isinstance(n, int):
            raise TypeError("integer exponent required")
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "ParamScalar":
        """Inverse of a unit: a single term with no parameter symbols."""
        if len(self.terms) != 1:
            raise ZeroDivisionError(f"{self} is not a unit of the coefficient ring")
        (key, val), = self.terms.items()
        if any(key[1:]):
            raise ZeroDivisionError(f"{self} is not a unit of the coefficient ring")
        return ParamScalar({(-key[0], 0, 0, 0): val.inverse()}, _trusted=True)

    def __truediv__(self, other) -> "ParamScalar":
        if not isinstance(other, ParamScalar):
            other = as_scalar(other)
        return self * other.inverse()

    def conjugate(self) -> "ParamScalar":
        """i -> -i with z, h+, h-, k held real."""
        return ParamScalar({k: v.conjugate() for k, v in self.terms.items()}, _trusted=True)

    def eval_z0(self) -> "ParamScalar":
        for key in self.terms:
            if key[0] < 0:
                raise PoleAtZeroError(f"term z^{key[0]} has no value at z = 0")
        return ParamScalar({k: v for k, v in self.terms.items() if k[0] == 0}, _trusted=True)

    def scale_params(self, hp=None, hm=None, k=None, z=None) -> "ParamScalar":
        """Substitute each symbol by a constant multiple of itself."""
        factors = [GaussianRational.coerce(f) if f is not None else None for f in (z, hp, hm, k)]
        out = {}
        for key, val in self.terms.items():
            for e, f in zip(key, factors):
                if f is not None and e:
                    val = val * (f ** e if e > 0 else f.inverse() ** (-e))
            out[key] = val
        return ParamScalar(out, _trusted=True)

    # printing ------------------------------------------------------------
    def __repr__(self) -> str:
        return f"ParamScalar({self})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = [_term_str(k, v) for k, v in self.items()]
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out


_SYMBOLS = ("z", "h+", "h-", "k")


def _term_str(key: Key, val: GaussianRational) -> str:
    factors = []
    for sym, e in zip(_SYMBOLS, key):
        if e == 1:
            factors.append(sym)
        elif e:
            factors.append(f"{sym}^{e}")
    return _coeff_prefix(val, factors)


def _coeff_prefix(val: GaussianRational, factors) -> str:
    """Render ``val * f1 * f2 ...`` in the workbench expression syntax."""
    re, im = val.re, val.im
    if re and im:
        head = f"({_fmt_q(re)} + {_fmt_q(im)}*i)" if im > 0 else f"({_fmt_q(re)} - {_fmt_q(-im)}*i)"
        return "*".join([head] + list(factors))
    if im:
        q, unit = im, ["i"]
    else:
        q, unit = re, []
    sign = "-" if q < 0 else ""
    q = abs(q)
    body = list(unit) + list(factors)
    if q != 1 or not body:
        body = [_fmt_q(q)] + body
    return sign + "*".join(body)


def as_scalar(value) -> ParamScalar:
    if isinstance(value, ParamScalar):
        return value
    if isinstance(value, (int, Fraction, GaussianRational, complex)) or type(value) is type(_Q0):
        return ParamScalar.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} to ParamScalar")


def _coerce_or_none(value):
    try:
        return as_scalar(value)
    except TypeError:
        return None


ZERO = ParamScalar({}, _trusted=True)
ONE = ParamScalar.const(1)
I = ParamScalar.const(GaussianRational(0, 1))
Z = ParamScalar.monomial(z=1)
HP = ParamScalar.monomial(hp=1)
HM = ParamScalar.monomial(hm=1)
K = ParamScalar.monomial(k=1)


def scalar_arith(a: ParamScalar, b: ParamScalar, op: str) -> ParamScalar:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "neg":
        return -a
    raise ValueError(f"unknown op {op!r}")


def scalar_conjugate(a: ParamScalar) -> ParamScalar:
    return a.conjugate()


def scalar_eval_z0(a: ParamScalar) -> ParamScalar:
    return a.eval_z0()
