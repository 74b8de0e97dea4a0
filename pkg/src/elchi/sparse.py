"""Shared machinery for sparse linear combinations over the coefficient ring."""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Hashable, Iterable, Iterator, Tuple

from .scalar import ONE, ZERO, GaussianRational, ParamScalar, as_scalar

_SCALAR_TYPES = (int, Fraction, GaussianRational, ParamScalar, complex)


def is_scalar_like(value) -> bool:
    return isinstance(value, _SCALAR_TYPES) or type(value).__name__ == "mpq"


def accumulate(acc: Dict, key, value: ParamScalar) -> None:
    cur = acc.get(key)
    acc[key] = value if cur is None else cur + value


def pruned(acc: Dict) -> Dict:
    return {k: v for k, v in acc.items() if v.terms}


class SparseElement:
    """A finite linear combination ``sum coeff * basis_key``.

    Subclasses fix the meaning of the keys and implement ``_product`` for
    the algebra multiplication.  Coefficients are :class:`ParamScalar`.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Dict[Hashable, object] | None = None):
        out = {}
        for key, val in (terms or {}).items():
            val = as_scalar(val)
            if val.terms:
                out[self._canon_key(key)] = val
        self.terms = out
        self._hash = None

    @staticmethod
    def _canon_key(key):
        return tuple(key)

    @classmethod
    def _trusted(cls, terms: Dict) -> "SparseElement":
        obj = cls.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def from_acc(cls, acc: Dict) -> "SparseElement":
        return cls._trusted(pruned(acc))

    @classmethod
    def basis(cls, key, coeff=ONE) -> "SparseElement":
        return cls({key: coeff})

    @classmethod
    def zero(cls) -> "SparseElement":
        return cls._trusted({})

    # container protocol ---------------------------------------------------
    def __iter__(self) -> Iterator[Tuple[Hashable, ParamScalar]]:
        for key in sorted(self.terms):
            yield key, self.terms[key]

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, key) -> ParamScalar:
        return self.terms.get(tuple(key), ZERO)

    def keys(self):
        return sorted(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, SparseElement):
            return type(self) is type(other) and self.terms == other.terms
        if is_scalar_like(other):
            return self == self.scalar(other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self.terms.items())))
        return self._hash

    # linear structure -------------------------------------------------------
    def __add__(self, other):
        if is_scalar_like(other):
            other = self.scalar(other)
        if type(other) is not type(self):
            return NotImplemented
        acc = dict(self.terms)
        for k, v in other.terms.items():
            accumulate(acc, k, v)
        return self.from_acc(acc)

    def __radd__(self, other):
        return self + other

    def __neg__(self):
        return self._trusted({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if is_scalar_like(other):
            other = self.scalar(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "SparseElement":
        c = as_scalar(c)
        if not c.terms:
            return self.zero()
        return self.from_acc({k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if is_scalar_like(other):
            return self.scale(other)
        if type(other) is type(self):
            return self._product(other)
        return NotImplemented

    def __rmul__(self, other):
        if is_scalar_like(other):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not defined for algebra elements")
        out = self.one()
        for _ in range(n):
            out = out * self
        return out

    def map_coefficients(self, fn: Callable[[ParamScalar], ParamScalar]) -> "SparseElement":
        return self.from_acc({k: fn(v) for k, v in self.terms.items()})

    def map_keys(self, fn: Callable) -> "SparseElement":
        acc: Dict = {}
        for k, v in self.terms.items():
            accumulate(acc, fn(k), v)
        return self.from_acc(acc)

    def linear(self, image: Callable[[Hashable], "SparseElement"], target=None):
        """Extend ``image`` (defined on basis keys) linearly to ``self``."""
        acc: Dict = {}
        cls = target
        for k, c in self.terms.items():
            img = image(k)
            cls = cls or type(img)
            for k2, c2 in img.terms.items():
                accumulate(acc, k2, c * c2)
        if cls is None:
            return type(self).zero() if target is None else target.zero()
        return cls.from_acc(acc)

    # to be supplied by subclasses ----------------------------------------------
    UNIT_KEY: Tuple = ()

    @classmethod
    def one(cls):
        return cls.basis(cls.UNIT_KEY)

    @classmethod
    def scalar(cls, c):
        return cls.basis(cls.UNIT_KEY, as_scalar(c))

    def _product(self, other):
        raise TypeError(f"{type(self).__name__} has no product")

    def _key_str(self, key) -> str:
        return str(key)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for key, coeff in self:
            parts.append(term_string(coeff, self._key_str(key)))
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


def term_string(coeff: ParamScalar, basis: str) -> str:
    """Render ``coeff * basis`` in the workbench expression syntax."""
    cs = str(coeff)
    if not basis:
        return cs
    if cs == "1":
        return basis
    if cs == "-1":
        return "-" + basis
    if len(coeff.terms) > 1:
        return f"({cs})*{basis}"
    return f"{cs}*{basis}"


def product_from_table(a: SparseElement, b: SparseElement, table: Callable) -> Dict:
    """Bilinear extension of a memoized monomial product ``table(ka, kb)``.

    ``table`` returns an iterable of ``(key, ParamScalar)`` pairs.
    """
    acc: Dict = {}
    for ka, ca in a.terms.items():
        for kb, cb in b.terms.items():
            cab = ca * cb
            for k, c in table(ka, kb):
                if c is ONE:
                    accumulate(acc, k, cab)
                else:
                    accumulate(acc, k, cab * c)
    return acc


def sum_elements(cls, items: Iterable[SparseElement]):
    acc: Dict = {}
    for el in items:
        for k, v in el.terms.items():
            accumulate(acc, k, v)
    return cls.from_acc(acc)


class TensorElement(SparseElement):
    """Element of a tensor product; keys are tuples of factor keys.

    Subclasses set ``FACTOR_TABLES`` to one memoized monomial product per
    slot (a single-entry tuple means every slot uses the same algebra).
    """

    FACTOR_TABLES: Tuple = ()
    FACTOR_UNITS: Tuple = ()

    def _slot(self, i: int):
        tables = self.FACTOR_TABLES
        return tables[i] if len(tables) > 1 else tables[0]

    @classmethod
    def unit(cls, rank: int = 2) -> "TensorElement":
        units = cls.FACTOR_UNITS
        key = tuple(units[i] if len(units) > 1 else units[0] for i in range(rank))
        return cls.basis(key)

    @classmethod
    def one(cls):
        return cls.unit(len(cls.FACTOR_UNITS) if len(cls.FACTOR_UNITS) > 1 else 2)

    @classmethod
    def scalar(cls, c):
        return cls.one().scale(c)

    @classmethod
    def pure(cls, *factors: SparseElement) -> "TensorElement":
        """``f1 (x) f2 (x) ...`` for ordinary elements ``fi``."""
        combos = [((), ONE)]
        for f in factors:
            combos = [(key + (k,), c * v) for key, c in combos for k, v in f.terms.items()]
        acc: Dict = {}
        for key, c in combos:
            accumulate(acc, key, c)
        return cls.from_acc(acc)

    def _pair_table(self, ka, kb) -> Tuple:
        cache = type(self).__dict__.get("_pair_cache")
        if cache is None:
            cache = {}
            setattr(type(self), "_pair_cache", cache)
        hit = cache.get((ka, kb))
        if hit is None:
            combos = [((), ONE)]
            for i, (x, y) in enumerate(zip(ka, kb)):
                tbl = self._slot(i)
                combos = [(key + (k2,), c * c2) for key, c in combos for k2, c2 in tbl(x, y)]
            hit = cache[(ka, kb)] = tuple(combos)
        return hit

    def _product(self, other):
        return self.from_acc(product_from_table(self, other, self._pair_table))

    def apply_slot(self, i: int, fn: Callable[[Hashable], SparseElement]) -> "TensorElement":
        """Apply a linear map (given on basis keys) to slot ``i``."""
        acc: Dict = {}
        for key, c in self.terms.items():
            for k2, c2 in fn(key[i]).terms.items():
                accumulate(acc, key[:i] + (k2,) + key[i + 1:], c * c2)
        return self.from_acc(acc)

    def contract(self, fn: Callable[[Tuple], ParamScalar]) -> ParamScalar:
        """Sum of ``coeff * fn(key)`` over all terms."""
        total = ZERO
        for key, c in self.terms.items():
            v = fn(key)
            if v.terms:
                total = total + c * v
        return total

    def _key_str(self, key) -> str:
        return " (x) ".join(str(k) for k in key)
