"""Surface syntax for algebra elements.

Grammar (``^`` binds tighter than unary minus, then ``*``, then ``+ -``)::

    expr   := term (("+" | "-") term)*
    term   := unary ("*" unary)*
    unary  := "-" unary | power
    power  := atom ("^" ["-"] INT)?
    atom   := INT | "v" | "alpha" | "[2]" | "E" INT | "u" | "(" expr ")"

The integer ``1`` doubles as the identity diagram.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .algebra import AlgebraElement, E, U, one
from .scalars import ZZ, Ring, RingMismatchError

__all__ = [
    "ExprSyntaxError", "ExprEvalError", "Expr", "Num", "Var", "Two", "Gen", "Rot",
    "Add", "Sub", "Mul", "Neg", "Pow", "parse", "to_text", "evaluate",
]


class ExprSyntaxError(ValueError):
    def __init__(self, msg: str, text: str, pos: int):
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        super().__init__(f"{msg} at line {line}, column {col}")
        self.line, self.column = line, col


class ExprEvalError(ValueError):
    pass


class Expr:
    __slots__ = ()


@dataclass(frozen=True)
class Num(Expr):
    value: int


@dataclass(frozen=True)
class Var(Expr):
    name: str  # "v" or "alpha"


@dataclass(frozen=True)
class Two(Expr):
    pass


@dataclass(frozen=True)
class Gen(Expr):
    index: int


@dataclass(frozen=True)
class Rot(Expr):
    pass


@dataclass(frozen=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True)
class Neg(Expr):
    operand: Expr


@dataclass(frozen=True)
class Pow(Expr):
    base: Expr
    exponent: int


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<int>\d+)
  | (?P<two>\[\s*2\s*\])
  | (?P<gen>E\d+)
  | (?P<name>[A-Za-z_]\w*)
  | (?P<op>[-+*^()])
""", re.VERBOSE)

_NAMES = {"v", "alpha", "u"}


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind == "name" and m.group() not in _NAMES:
            raise ExprSyntaxError(f"unknown token {m.group()!r}", text, pos)
        if kind != "ws":
            out.append((kind, m.group(), pos))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        found = "end of input" if tok[0] == "end" else repr(tok[1])
        raise ExprSyntaxError(f"{msg}, found {found}", self.text, tok[2])

    def expect_op(self, op):
        tok = self.peek()
        if tok[0] != "op" or tok[1] != op:
            self.error(f"expected {op!r}")
        self.take()

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek()[0] != "end":
            self.error("expected an operator")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            e = Add(e, rhs) if op == "+" else Sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            e = Mul(e, self.unary())
        return e

    def unary(self) -> Expr:
        if self.peek()[0] == "op" and self.peek()[1] == "-":
            self.take()
            return Neg(self.unary())
        return self.power()

    def power(self) -> Expr:
        base = self.atom()
        if self.peek()[0] == "op" and self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[0] == "op" and self.peek()[1] == "-":
                self.take()
                sign = -1
            tok = self.peek()
            if tok[0] != "int":
                self.error("expected an integer exponent")
            self.take()
            return Pow(base, sign * int(tok[1]))
        return base

    def atom(self) -> Expr:
        kind, val, _ = tok = self.peek()
        if kind == "int":
            self.take()
            return Num(int(val))
        if kind == "two":
            self.take()
            return Two()
        if kind == "gen":
            self.take()
            return Gen(int(val[1:]))
        if kind == "name":
            self.take()
            return Rot() if val == "u" else Var(val)
        if kind == "op" and val == "(":
            self.take()
            e = self.expr()
            self.expect_op(")")
            return e
        self.error("expected a term", tok)


def parse(text: str) -> Expr:
    return _Parser(text).parse()


_PREC = {Add: 1, Sub: 1, Mul: 2, Neg: 3, Pow: 4}


def _prec(e: Expr) -> int:
    return _PREC.get(type(e), 5)


def to_text(e: Expr) -> str:
    """Canonical text with minimal parentheses; ``parse(to_text(e)) == e``."""

    def wrap(x: Expr, need: int) -> str:
        s = to_text(x)
        return f"({s})" if _prec(x) < need else s

    if isinstance(e, Num):
        if e.value < 0:
            return to_text(Neg(Num(-e.value)))
        return str(e.value)
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Two):
        return "[2]"
    if isinstance(e, Gen):
        return f"E{e.index}"
    if isinstance(e, Rot):
        return "u"
    if isinstance(e, Add):
        return f"{wrap(e.left, 1)} + {wrap(e.right, 2)}"
    if isinstance(e, Sub):
        return f"{wrap(e.left, 1)} - {wrap(e.right, 2)}"
    if isinstance(e, Mul):
        return f"{wrap(e.left, 2)}*{wrap(e.right, 3)}"
    if isinstance(e, Neg):
        return f"-{wrap(e.operand, 3)}"
    if isinstance(e, Pow):
        return f"{wrap(e.base, 5)}^{e.exponent}"
    raise TypeError(f"not an expression: {e!r}")


def evaluate(e: Expr | str, n: int, ring: Ring | str = ZZ) -> AlgebraElement:
    """Normal form of an expression in the rank-``n`` diagram algebra."""
    if isinstance(e, str):
        e = parse(e)
    if isinstance(ring, str):
        ring = Ring.parse(ring)
    if n < 3:
        raise ExprEvalError("rank must be at least 3")
    ident = one(n, ring)

    def ev(x: Expr) -> AlgebraElement:
        if isinstance(x, Num):
            return ident.scale(x.value)
        if isinstance(x, Var):
            if x.name == "v":
                return ident.scale(ring.v())
            if not ring.alpha:
                raise ExprEvalError(f"'alpha' needs a ring with alpha, not {ring}")
            return ident.scale(ring.alpha_power(1))
        if isinstance(x, Two):
            return ident.scale(ring.two())
        if isinstance(x, Gen):
            if not 1 <= x.index <= n:
                raise ExprEvalError(f"E{x.index} out of range for n={n}")
            return E(n, x.index, ring)
        if isinstance(x, Rot):
            return U(n, 1, ring)
        if isinstance(x, Add):
            return ev(x.left) + ev(x.right)
        if isinstance(x, Sub):
            return ev(x.left) - ev(x.right)
        if isinstance(x, Mul):
            return ev(x.left) * ev(x.right)
        if isinstance(x, Neg):
            return -ev(x.operand)
        if isinstance(x, Pow):
            try:
                return ev(x.base) ** x.exponent
            except ZeroDivisionError as err:
                raise ExprEvalError(f"negative power of a non-invertible word: "
                                    f"{to_text(x)}") from err
        raise TypeError(f"not an expression: {x!r}")

    try:
        return ev(e)
    except RingMismatchError as err:
        raise ExprEvalError(str(err)) from err
