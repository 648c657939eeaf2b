"""Text syntax for scalars, polynomials and multivector fields.

Grammar (whitespace insignificant)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' INT)?
    atom   := NUMBER | 'x1' | 'x2' | 'x3' | blade | 'sqrt' '(' INT ')' | '(' expr ')'
    blade  := 'e0' | ('e' [123]+)+          e.g. e2, e13, e31, e3e1

Decimal literals are converted exactly (``0.1`` is 1/10).  Non-canonical
blades such as ``e31`` or ``e3e1`` are normalised on input (to ``-e13``).
Division is only allowed by nonzero constants.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import algebra
from .algebra import NAMES, Multivector
from .errors import ExprSyntaxError, UnknownSymbol
from .fields import CONST, MVField, Polynomial, ZERO_POLY
from .scalars import QuadScalar, as_scalar, format_scalar

_TOKEN = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<num>\d+(?:\.\d*)?|\.\d+)
  | (?P<name>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<op>[-+*/^()])
    """,
    re.VERBOSE,
)
_BLADE = re.compile(r"(?:e[123]+)+|e0")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ExprSyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        kind = m.lastgroup
        if kind != "ws":
            tokens.append((kind, m.group(), pos))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


def _blade_field(name: str) -> MVField:
    if name == "e0":
        return MVField.constant(Multivector.scalar(1))
    sign, mask = 1, 0
    for ch in name.replace("e", ""):
        s, mask = algebra.blade_product(mask, 1 << (int(ch) - 1))
        sign *= s
    return MVField.constant(Multivector.blade(mask, sign))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def advance(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.advance()
        if val != value:
            raise ExprSyntaxError(f"unexpected {val or 'end of input'!r}", self.text, pos, repr(value))

    def parse(self) -> MVField:
        value = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ExprSyntaxError(f"unexpected {val!r}", self.text, pos, "operator or end of input")
        return value

    def expr(self) -> MVField:
        value = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.advance()[1]
            rhs = self.term()
            value = value + rhs if op == "+" else value - rhs
        return value

    def term(self) -> MVField:
        value = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op, pos = self.advance()
            rhs = self.unary()
            if op == "*":
                value = value * rhs
            else:
                c = _as_constant(rhs)
                if c is None:
                    raise ExprSyntaxError("can only divide by a constant scalar", self.text, pos)
                if not c:
                    raise ExprSyntaxError("division by zero", self.text, pos)
                value = value / c
        return value

    def unary(self) -> MVField:
        tok = self.peek()
        if tok[1] == "-":
            self.advance()
            return -self.unary()
        if tok[1] == "+":
            self.advance()
            return self.unary()
        return self.power()

    def power(self) -> MVField:
        base = self.atom()
        if self.peek()[1] == "^":
            self.advance()
            kind, val, pos = self.advance()
            if kind != "num" or not val.isdigit():
                raise ExprSyntaxError("exponent must be a non-negative integer", self.text, pos, "integer")
            result = MVField.constant(Multivector.scalar(1))
            for _ in range(int(val)):
                result = result * base
            return result
        return base

    def atom(self) -> MVField:
        kind, val, pos = self.advance()
        if kind == "num":
            return MVField.scalar(Polynomial.const(Fraction(val)))
        if kind == "name":
            if val in ("x1", "x2", "x3"):
                return MVField.scalar(Polynomial.var(int(val[1])))
            if _BLADE.fullmatch(val):
                return _blade_field(val)
            if val == "sqrt":
                self.expect("(")
                k, kval, kpos = self.advance()
                if k != "num" or not kval.isdigit():
                    raise ExprSyntaxError("sqrt takes an integer literal", self.text, kpos, "integer")
                try:
                    root = QuadScalar.sqrt(int(kval))
                except ValueError as exc:
                    raise UnknownSymbol(str(exc), self.text, kpos) from None
                self.expect(")")
                return MVField.scalar(Polynomial.const(root))
            raise UnknownSymbol(f"unknown symbol {val!r}", self.text, pos, "x1, x2, x3, a blade or sqrt")
        if val == "(":
            value = self.expr()
            self.expect(")")
            return value
        raise ExprSyntaxError(
            f"unexpected {val or 'end of input'!r}", self.text, pos, "number, variable, blade or '('"
        )


def _as_constant(f: MVField) -> QuadScalar | None:
    if not f.is_scalar_valued():
        return None
    p = f.comps[0]
    if any(m != CONST for m in p.terms):
        return None
    return p.terms.get(CONST, as_scalar(0))


def parse_field(text: str) -> MVField:
    return _Parser(text).parse()


def parse_polynomial(text: str) -> Polynomial:
    f = parse_field(text)
    if not f.is_scalar_valued():
        raise ExprSyntaxError("expected a scalar polynomial", text, 0)
    return f.comps[0]


def parse_scalar(text: str) -> QuadScalar:
    c = _as_constant(parse_field(text))
    if c is None:
        raise ExprSyntaxError("expected a constant scalar", text, 0)
    return c


def parse_multivector(text: str) -> Multivector:
    f = parse_field(text)
    for p in f.comps:
        if any(m != CONST for m in p.terms):
            raise ExprSyntaxError("expected a constant multivector", text, 0)
    return Multivector._raw([p.terms.get(CONST, as_scalar(0)) for p in f.comps])


# printing


def _format_monomial(m) -> str:
    parts = []
    for i, a in enumerate(m, start=1):
        if a == 1:
            parts.append(f"x{i}")
        elif a > 1:
            parts.append(f"x{i}^{a}")
    return "*".join(parts)


def _two_part(c: QuadScalar) -> bool:
    return bool(c.rat) and bool(c.irr)


def _format_term(c: QuadScalar, m) -> str:
    if m == CONST:
        return format_scalar(c)
    mono = _format_monomial(m)
    if c == 1:
        return mono
    if c == -1:
        return "-" + mono
    if _two_part(c):
        return f"({format_scalar(c)})*{mono}"
    return f"{format_scalar(c)}*{mono}"


def _join(pieces: list[str]) -> str:
    if not pieces:
        return "0"
    out = pieces[0]
    for piece in pieces[1:]:
        if piece.startswith("-"):
            out += " - " + piece[1:]
        else:
            out += " + " + piece
    return out


def format_polynomial(p: Polynomial) -> str:
    return _join([_format_term(c, m) for m, c in p.sorted_terms()])


def format_field(f: MVField) -> str:
    pieces = []
    for k, p in enumerate(f.comps):
        if not p.terms:
            continue
        if k == 0:
            pieces.append(format_polynomial(p))
            continue
        name = NAMES[k]
        if len(p.terms) == 1:
            ((m, c),) = p.terms.items()
            if m == CONST and c == 1:
                pieces.append(name)
            elif m == CONST and c == -1:
                pieces.append("-" + name)
            elif m == CONST and _two_part(c):
                pieces.append(f"({format_scalar(c)})*{name}")
            else:
                pieces.append(f"{_format_term(c, m)}*{name}")
        else:
            pieces.append(f"({format_polynomial(p)})*{name}")
    return _join(pieces)


def format_multivector(a: Multivector) -> str:
    return format_field(MVField.constant(a))
