"""Expression trees for real functions of one variable.

Nodes cover the elementary functions used throughout the library.  Each
tree knows how to evaluate itself at a real point and how to produce its
symbolic derivative (with constant folding so repeated differentiation
does not blow up).  There is deliberately no simplification beyond that.
"""

from __future__ import annotations

import dataclasses
import math
import re
from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import DomainError, OutOfDomain

if TYPE_CHECKING:
    from .sets import RealSet


class Expr:
    """Base class; concrete nodes are frozen dataclasses below."""

    def eval_real(self, xi: float) -> float:
        raise NotImplementedError

    def deriv(self) -> "Expr":
        raise NotImplementedError

    # operator sugar, mirroring how the trees are written in tests
    def __add__(self, other):
        return add(self, _coerce(other))

    def __radd__(self, other):
        return add(_coerce(other), self)

    def __sub__(self, other):
        return sub(self, _coerce(other))

    def __rsub__(self, other):
        return sub(_coerce(other), self)

    def __mul__(self, other):
        return mul(self, _coerce(other))

    def __rmul__(self, other):
        return mul(_coerce(other), self)

    def __truediv__(self, other):
        return Div(self, _coerce(other))

    def __rtruediv__(self, other):
        return Div(_coerce(other), self)

    def __neg__(self):
        return neg(self)

    def __pow__(self, m):
        if isinstance(m, int):
            return pow_int(self, m)
        if isinstance(m, float):
            return PowReal(self, m)
        return NotImplemented


def _coerce(value) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, float)):
        return Const(float(value))
    raise TypeError(f"cannot interpret {value!r} as an expression")


@dataclass(frozen=True)
class Const(Expr):
    value: float

    def eval_real(self, xi):
        return self.value

    def deriv(self):
        return Const(0.0)

    def __str__(self):
        return repr(self.value)


@dataclass(frozen=True)
class Var(Expr):
    def eval_real(self, xi):
        return xi

    def deriv(self):
        return Const(1.0)

    def __str__(self):
        return "x"


@dataclass(frozen=True)
class Add(Expr):
    lhs: Expr
    rhs: Expr

    def eval_real(self, xi):
        return self.lhs.eval_real(xi) + self.rhs.eval_real(xi)

    def deriv(self):
        return add(self.lhs.deriv(), self.rhs.deriv())

    def __str__(self):
        return f"({self.lhs} + {self.rhs})"


@dataclass(frozen=True)
class Sub(Expr):
    lhs: Expr
    rhs: Expr

    def eval_real(self, xi):
        return self.lhs.eval_real(xi) - self.rhs.eval_real(xi)

    def deriv(self):
        return sub(self.lhs.deriv(), self.rhs.deriv())

    def __str__(self):
        return f"({self.lhs} - {self.rhs})"


@dataclass(frozen=True)
class Mul(Expr):
    lhs: Expr
    rhs: Expr

    def eval_real(self, xi):
        return self.lhs.eval_real(xi) * self.rhs.eval_real(xi)

    def deriv(self):
        return add(
            mul(self.lhs.deriv(), self.rhs), mul(self.lhs, self.rhs.deriv())
        )

    def __str__(self):
        return f"({self.lhs} * {self.rhs})"


@dataclass(frozen=True)
class Div(Expr):
    """Quotient; valid where the denominator does not vanish.  A declared
    validity domain (in terms of the variable) can be attached for
    structural domain checks."""

    lhs: Expr
    rhs: Expr
    domain: "RealSet | None" = None

    def eval_real(self, xi):
        d = self.rhs.eval_real(xi)
        if d == 0.0:
            raise OutOfDomain(f"division by zero at {xi!r}")
        return self.lhs.eval_real(xi) / d

    def deriv(self):
        num = sub(mul(self.lhs.deriv(), self.rhs), mul(self.lhs, self.rhs.deriv()))
        return Div(num, pow_int(self.rhs, 2), self.domain)

    def __str__(self):
        return f"({self.lhs} / {self.rhs})"


@dataclass(frozen=True)
class Neg(Expr):
    arg: Expr

    def eval_real(self, xi):
        return -self.arg.eval_real(xi)

    def deriv(self):
        return neg(self.arg.deriv())

    def __str__(self):
        return f"(-{self.arg})"


@dataclass(frozen=True)
class PowInt(Expr):
    base: Expr
    exponent: int

    def eval_real(self, xi):
        b = self.base.eval_real(xi)
        if self.exponent < 0 and b == 0.0:
            raise OutOfDomain(f"zero base with negative exponent at {xi!r}")
        return b**self.exponent

    def deriv(self):
        m = self.exponent
        if m == 0:
            return Const(0.0)
        return mul(mul(Const(float(m)), pow_int(self.base, m - 1)), self.base.deriv())

    def __str__(self):
        return f"({self.base})^{self.exponent}"


@dataclass(frozen=True)
class PowReal(Expr):
    """base**alpha for a fixed real alpha; valid on positive bases."""

    base: Expr
    exponent: float
    domain: "RealSet | None" = None

    def eval_real(self, xi):
        b = self.base.eval_real(xi)
        if b <= 0.0:
            raise OutOfDomain(f"real power needs a positive base, got {b!r}")
        return b**self.exponent

    def deriv(self):
        a = self.exponent
        lowered = PowReal(self.base, a - 1.0, self.domain)
        return mul(mul(Const(a), lowered), self.base.deriv())

    def __str__(self):
        return f"({self.base})^{self.exponent!r}"


@dataclass(frozen=True)
class Root(Expr):
    """Positive m-th root (m > 1); valid on positive arguments."""

    base: Expr
    degree: int
    domain: "RealSet | None" = None

    def eval_real(self, xi):
        b = self.base.eval_real(xi)
        if b <= 0.0:
            raise OutOfDomain(f"root needs a positive argument, got {b!r}")
        if self.degree == 2:
            return math.sqrt(b)
        return b ** (1.0 / self.degree)

    def deriv(self):
        m = self.degree
        denom = mul(Const(float(m)), pow_int(Root(self.base, m, self.domain), m - 1))
        return Div(self.base.deriv(), denom, self.domain)

    def __str__(self):
        return f"root({self.degree}, {self.base})"


@dataclass(frozen=True)
class Exp(Expr):
    arg: Expr

    def eval_real(self, xi):
        return math.exp(self.arg.eval_real(xi))

    def deriv(self):
        return mul(Exp(self.arg), self.arg.deriv())

    def __str__(self):
        return f"exp({self.arg})"


@dataclass(frozen=True)
class Log(Expr):
    """Natural logarithm; valid on positive arguments."""

    arg: Expr
    domain: "RealSet | None" = None

    def eval_real(self, xi):
        a = self.arg.eval_real(xi)
        if a <= 0.0:
            raise OutOfDomain(f"log needs a positive argument, got {a!r}")
        return math.log(a)

    def deriv(self):
        return Div(self.arg.deriv(), self.arg, self.domain)

    def __str__(self):
        return f"log({self.arg})"


@dataclass(frozen=True)
class Sin(Expr):
    arg: Expr

    def eval_real(self, xi):
        return math.sin(self.arg.eval_real(xi))

    def deriv(self):
        return mul(Cos(self.arg), self.arg.deriv())

    def __str__(self):
        return f"sin({self.arg})"


@dataclass(frozen=True)
class Cos(Expr):
    arg: Expr

    def eval_real(self, xi):
        return math.cos(self.arg.eval_real(xi))

    def deriv(self):
        return mul(neg(Sin(self.arg)), self.arg.deriv())

    def __str__(self):
        return f"cos({self.arg})"


@dataclass(frozen=True)
class Compose(Expr):
    """outer applied to the value of inner."""

    outer: Expr
    inner: Expr

    def eval_real(self, xi):
        return self.outer.eval_real(self.inner.eval_real(xi))

    def deriv(self):
        return mul(Compose(self.outer.deriv(), self.inner), self.inner.deriv())

    def __str__(self):
        return f"({self.outer})∘({self.inner})"


# -- folding constructors ------------------------------------------------------


def _const_value(e: Expr) -> float | None:
    return e.value if isinstance(e, Const) else None


def add(a: Expr, b: Expr) -> Expr:
    ca, cb = _const_value(a), _const_value(b)
    if ca is not None and cb is not None:
        return Const(ca + cb)
    if ca == 0.0:
        return b
    if cb == 0.0:
        return a
    return Add(a, b)


def sub(a: Expr, b: Expr) -> Expr:
    ca, cb = _const_value(a), _const_value(b)
    if ca is not None and cb is not None:
        return Const(ca - cb)
    if cb == 0.0:
        return a
    if ca == 0.0:
        return neg(b)
    return Sub(a, b)


def mul(a: Expr, b: Expr) -> Expr:
    ca, cb = _const_value(a), _const_value(b)
    if ca is not None and cb is not None:
        return Const(ca * cb)
    if ca == 0.0 or cb == 0.0:
        return Const(0.0)
    if ca == 1.0:
        return b
    if cb == 1.0:
        return a
    return Mul(a, b)


def neg(a: Expr) -> Expr:
    ca = _const_value(a)
    if ca is not None:
        return Const(-ca)
    if isinstance(a, Neg):
        return a.arg
    return Neg(a)


def pow_int(base: Expr, m: int) -> Expr:
    if m == 0:
        return Const(1.0)
    if m == 1:
        return base
    return PowInt(base, m)


def iter_nodes(e: Expr):
    """The node and all its expression descendants."""
    yield e
    for f in dataclasses.fields(e):
        child = getattr(e, f.name)
        if isinstance(child, Expr):
            yield from iter_nodes(child)


def differentiate(e: Expr, order: int = 1) -> Expr:
    """Symbolic derivative of the given order (order 0 returns e itself)."""
    if order < 0:
        raise DomainError("derivative order must be nonnegative")
    out = e
    for _ in range(order):
        out = out.deriv()
    return out


# -- text syntax -----------------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+\.\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?"
    r"|\d+(?:[eE][+-]?\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<op>\*\*|[()+\-*/^,]))"
)

_FUNCTIONS = ("exp", "log", "sin", "cos", "sqrt", "root", "pow")


class _Parser:
    def __init__(self, text: str):
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list[tuple[str, str]]:
        tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN_RE.match(text, pos)
            if m is None:
                if text[pos:].strip() == "":
                    break
                raise DomainError(f"bad expression syntax near {text[pos:]!r}")
            pos = m.end()
            for kind in ("num", "name", "op"):
                if m.group(kind) is not None:
                    tokens.append((kind, m.group(kind)))
                    break
        return tokens

    def peek(self) -> tuple[str, str] | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def next(self) -> tuple[str, str]:
        tok = self.peek()
        if tok is None:
            raise DomainError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, op: str) -> None:
        tok = self.next()
        if tok != ("op", op):
            raise DomainError(f"expected {op!r}, got {tok[1]!r}")

    def parse(self) -> Expr:
        e = self.expr()
        if self.peek() is not None:
            raise DomainError(f"trailing input at {self.peek()[1]!r}")
        return e

    def expr(self) -> Expr:
        e = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.next()[1]
            rhs = self.term()
            e = add(e, rhs) if op == "+" else sub(e, rhs)
        return e

    def term(self) -> Expr:
        e = self.factor()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.next()[1]
            rhs = self.factor()
            e = mul(e, rhs) if op == "*" else Div(e, rhs)
        return e

    def factor(self) -> Expr:
        # unary minus binds looser than the power: -x^2 is -(x^2)
        if self.peek() == ("op", "-"):
            self.next()
            return neg(self.factor())
        if self.peek() == ("op", "+"):
            self.next()
            return self.factor()
        e = self.primary()
        if self.peek() in (("op", "^"), ("op", "**")):
            self.next()
            exponent = self.factor()  # right-associative
            c = _const_value(exponent)
            if c is None:
                raise DomainError("exponents must be constants")
            if c == int(c):
                return pow_int(e, int(c))
            return PowReal(e, c)
        return e

    def primary(self) -> Expr:
        kind, text = self.next()
        if kind == "num":
            return Const(float(text))
        if kind == "name":
            if text == "x":
                return Var()
            if text == "pi":
                return Const(math.pi)
            if text in _FUNCTIONS:
                self.expect("(")
                if text in ("root", "pow"):
                    first = self.expr()
                    c = _const_value(first)
                    if c is None:
                        raise DomainError(f"first argument of {text} must be constant")
                    self.expect(",")
                    arg = self.expr()
                    self.expect(")")
                    if text == "root":
                        if c != int(c) or int(c) < 2:
                            raise DomainError("root degree must be an integer > 1")
                        return Root(arg, int(c))
                    return PowReal(arg, c)
                arg = self.expr()
                self.expect(")")
                return {
                    "exp": Exp,
                    "log": Log,
                    "sin": Sin,
                    "cos": Cos,
                    "sqrt": lambda a: Root(a, 2),
                }[text](arg)
            raise DomainError(f"unknown name {text!r} (the variable is 'x')")
        if text == "(":
            e = self.expr()
            self.expect(")")
            return e
        raise DomainError(f"unexpected token {text!r}")


def parse(text: str) -> Expr:
    """Parse infix syntax: x, numbers, pi, + - * / ^, exp/log/sin/cos/sqrt,
    root(m, e), pow(alpha, e)."""
    return _Parser(text).parse()
