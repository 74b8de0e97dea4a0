"""Recursive-descent parser for workbench expressions.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := primary ('^' ['-'] INT)?
    primary:= INT ['/' INT] | '(' expr ')' | atom
    atom   := NAME | ('E'|'Th') '(' ['-'] INT ')'

U atoms (P1, P2, J, E(b) and the named elements such as Hplus or Casimir)
may not share an expression with F atoms (Th(l), a1, a2) or plane atoms
(chi, chibar, x, xbar).  F and plane atoms do mix: the plane part is
embedded into F.  Negative exponents are accepted on z, i and rational
literals only.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

from ..envalg import NAMED_ELEMENTS, E, J, P1, P2, UElement
from ..funalg import FElement, a1, a2, th
from ..qplane import PlaneElement, chi, chibar, plane_to_f
from ..scalar import HM, HP, I, K, Z, GaussianRational, ParamScalar

__all__ = [
    "ExpressionSyntaxError",
    "AlphabetMixError",
    "Expression",
    "parse_expression",
    "evaluate",
    "ALPHABETS",
]


class ExpressionSyntaxError(SyntaxError):
    """Malformed input; ``position`` is the 0-based character offset."""

    def __init__(self, message: str, source: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.msg = message
        self.text = source
        self.position = position
        self.offset = position + 1


class AlphabetMixError(ValueError):
    """U atoms combined with F or plane atoms in one expression."""


_SCALAR_ATOMS = {"i": I, "z": Z, "h+": HP, "h-": HM, "k": K}
_U_ATOMS = {"P1": P1, "P2": P2, "J": J}
_F_ATOMS = {"a1": a1, "a2": a2}
_PLANE_ATOMS = {
    "chi": chi,
    "chibar": chibar,
    "x": lambda: chi().scale(Z),
    "xbar": lambda: chibar().scale(-Z),
}
_INDEXED = {"E": "U", "Th": "F"}

ALPHABETS = {
    "U": sorted(_U_ATOMS) + ["E(b)"] + sorted(NAMED_ELEMENTS),
    "F": sorted(_F_ATOMS) + ["Th(l)"],
    "plane": sorted(_PLANE_ATOMS),
    "scalar": sorted(_SCALAR_ATOMS),
}

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+)|(?P<h>h[+\-])|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*^/()]))")


def _tokenize(src: str) -> List[Tuple[str, str, int]]:
    src = src.replace("−", "-")
    out, pos = [], 0
    while pos < len(src):
        if src[pos:].strip() == "":
            break
        m = _TOKEN.match(src, pos)
        if not m:
            start = pos + len(src[pos:]) - len(src[pos:].lstrip())
            raise ExpressionSyntaxError(f"unexpected character {src[start]!r}", src, start)
        kind = m.lastgroup
        out.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


# AST nodes -----------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    num: int
    den: int = 1

    def __str__(self):
        return str(self.num) if self.den == 1 else f"({self.num}/{self.den})"


@dataclass(frozen=True)
class Atom:
    name: str
    index: Optional[int] = None

    def __str__(self):
        return self.name if self.index is None else f"{self.name}({self.index})"


@dataclass(frozen=True)
class Pow:
    base: "Node"
    exp: int

    def __str__(self):
        return f"{_wrap(self.base)}^{self.exp}"


@dataclass(frozen=True)
class Prod:
    factors: Tuple["Node", ...]

    def __str__(self):
        return "*".join(_wrap(f, sums_only=True) for f in self.factors)


@dataclass(frozen=True)
class Sum:
    terms: Tuple[Tuple[int, "Node"], ...]  # (sign, node)

    def __str__(self):
        out = ""
        for k, (sign, node) in enumerate(self.terms):
            body = _wrap(node, sums_only=True)
            if k == 0:
                out = body if sign > 0 else "-" + body
            else:
                out += (" + " if sign > 0 else " - ") + body
        return out


Node = Union[Num, Atom, Pow, Prod, Sum]


def _wrap(node, sums_only: bool = False) -> str:
    if isinstance(node, Sum) or (not sums_only and isinstance(node, (Prod, Pow))):
        return f"({node})"
    return str(node)


def _atom_alphabet(atom: Atom) -> str:
    if atom.name in _SCALAR_ATOMS:
        return "scalar"
    if atom.name in _U_ATOMS or atom.name in NAMED_ELEMENTS or atom.name == "E":
        return "U"
    if atom.name in _F_ATOMS or atom.name == "Th":
        return "F"
    return "plane"


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0
        self.atoms: List[Tuple[Atom, int]] = []

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        return ExpressionSyntaxError(message, self.src, tok[2])

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] not in ("op",):
            raise self.error(f"expected {value!r}", tok)
        return tok

    def integer(self) -> int:
        sign = 1
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            sign = -1
        tok = self.take()
        if tok[0] != "num":
            raise self.error("expected an integer", tok)
        return sign * int(tok[1])

    def expr(self) -> Node:
        terms = []
        sign = 1
        if self.peek()[0] == "op" and self.peek()[1] in "+-":
            sign = -1 if self.take()[1] == "-" else 1
        terms.append((sign, self.term()))
        while self.peek()[0] == "op" and self.peek()[1] in ("+", "-"):
            sign = -1 if self.take()[1] == "-" else 1
            terms.append((sign, self.term()))
        if len(terms) == 1 and terms[0][0] == 1:
            return terms[0][1]
        return Sum(tuple(terms))

    def term(self) -> Node:
        factors = [self.factor()]
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            factors.append(self.factor())
        return factors[0] if len(factors) == 1 else Prod(tuple(factors))

    def factor(self) -> Node:
        start = self.peek()
        base = self.primary()
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            tok = self.peek()
            exp = self.integer()
            if exp < 0 and not _invertible(base):
                raise self.error("negative exponent allowed only on z, i and rational literals", tok)
            return Pow(base, exp)
        del start
        return base

    def primary(self) -> Node:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            if self.peek()[1] == "/" and self.peek()[0] == "op":
                self.take()
                den_tok = self.take()
                if den_tok[0] != "num":
                    raise self.error("expected a denominator", den_tok)
                den = int(den_tok[1])
                if den == 0:
                    raise self.error("zero denominator", den_tok)
                return Num(int(val), den)
            return Num(int(val))
        if kind == "op" and val == "(":
            node = self.expr()
            self.expect(")")
            return node
        if kind == "h":
            atom = Atom(val)
        elif kind == "name":
            if val in _INDEXED:
                self.expect("(")
                idx = self.integer()
                self.expect(")")
                atom = Atom(val, idx)
            elif val in _SCALAR_ATOMS or val in _U_ATOMS or val in NAMED_ELEMENTS or val in _F_ATOMS or val in _PLANE_ATOMS:
                atom = Atom(val)
            else:
                raise self.error(f"unknown atom {val!r}", tok)
        elif kind == "end":
            raise self.error("unexpected end of input", tok)
        else:
            raise self.error(f"unexpected {val!r}", tok)
        self.atoms.append((atom, pos))
        return atom


def _invertible(node: Node) -> bool:
    if isinstance(node, Num):
        return node.num != 0
    if isinstance(node, Atom):
        return node.name in ("z", "i")
    return False


@dataclass(frozen=True)
class Expression:
    """Parsed expression; ``alphabet`` is "U", "F", "plane" or "scalar"."""

    source: str
    tree: Node
    alphabet: str

    def evaluate(self):
        return evaluate(self)

    def __str__(self) -> str:
        return str(self.tree)


def parse_expression(src: str) -> Expression:
    p = _Parser(src)
    tree = p.expr()
    if p.peek()[0] != "end":
        raise p.error(f"unexpected {p.peek()[1]!r}")
    kinds = {}
    for atom, pos in p.atoms:
        kinds.setdefault(_atom_alphabet(atom), (atom, pos))
    if "U" in kinds and ("F" in kinds or "plane" in kinds):
        u_atom = kinds["U"][0]
        other = kinds.get("F", kinds.get("plane"))[0]
        raise AlphabetMixError(f"cannot mix U atom {u_atom} with {other} in one expression")
    for alpha in ("U", "F", "plane"):
        if alpha in kinds:
            break
    else:
        alpha = "scalar"
    return Expression(src, tree, alpha)


# evaluation ----------------------------------------------------------------

_ELEMENT_CLS = {"U": UElement, "F": FElement, "plane": PlaneElement}


def _lift(value, alpha: str):
    if isinstance(value, ParamScalar):
        return value if alpha == "scalar" else _ELEMENT_CLS[alpha].one().scale(value)
    if alpha == "F" and isinstance(value, PlaneElement):
        return plane_to_f(value)
    return value


def _eval(node: Node, alpha: str):
    if isinstance(node, Num):
        return ParamScalar.const(GaussianRational(f"{node.num}/{node.den}"))
    if isinstance(node, Atom):
        if node.name in _SCALAR_ATOMS:
            return _SCALAR_ATOMS[node.name]
        if node.name == "E":
            return E(node.index)
        if node.name == "Th":
            return th(node.index)
        if node.name in _U_ATOMS:
            return _U_ATOMS[node.name]()
        if node.name in NAMED_ELEMENTS:
            return NAMED_ELEMENTS[node.name]
        if node.name in _F_ATOMS:
            return _F_ATOMS[node.name]()
        return _lift(_PLANE_ATOMS[node.name](), alpha)
    if isinstance(node, Pow):
        base = _eval(node.base, alpha)
        if isinstance(base, ParamScalar):
            return base ** node.exp
        out = type(base).one()
        for _ in range(node.exp):
            out = out * base
        return out
    if isinstance(node, Prod):
        vals = [_eval(f, alpha) for f in node.factors]
        if all(isinstance(v, ParamScalar) for v in vals):
            out = vals[0]
            for v in vals[1:]:
                out = out * v
            return out
        out = _lift(vals[0], alpha)
        for v in vals[1:]:
            out = out * _lift(v, alpha)
        return out
    if isinstance(node, Sum):
        vals = [(s, _eval(t, alpha)) for s, t in node.terms]
        if all(isinstance(v, ParamScalar) for _, v in vals):
            kind = "scalar"
        else:
            kind = alpha
        out = None
        for s, v in vals:
            v = _lift(v, kind)
            v = v if s > 0 else -v
            out = v if out is None else out + v
        return out
    raise TypeError(f"unknown node {node!r}")


def evaluate(expr: Union[Expression, str]):
    """Evaluate to ParamScalar, UElement, FElement or PlaneElement."""
    if isinstance(expr, str):
        expr = parse_expression(expr)
    return _eval(expr.tree, expr.alphabet)
