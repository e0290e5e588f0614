"""Recursive-descent parser for the polynomial expression grammar.

Grammar (whitespace insignificant):

    expr    := ['+'|'-'] term (('+'|'-') term)*
    term    := factor ('*' factor)*
    factor  := atom ('^' nonneg-integer)?
    atom    := rational | identifier | '(' expr ')'
    rational:= integer ('/' positive-integer)?

Implicit multiplication is not allowed.  '/' only forms rational literals;
`x1/0` and `x1/2` are both rejected.  Identifiers must be declared variables.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import MultiPoly

_TOKEN = re.compile(
    r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^/()]))"
)


class ParseError(ValueError):
    """Syntax or semantic error, with the offending position."""

    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            bad_at = len(text) - len(stripped)
            raise ParseError(f"unexpected character {text[bad_at]!r}", bad_at)
        if m.lastgroup == "int":
            tokens.append(("int", int(m.group("int")), m.start("int")))
        elif m.lastgroup == "name":
            tokens.append(("name", m.group("name"), m.start("name")))
        else:
            tokens.append(("op", m.group("op"), m.start("op")))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, variables):
        self.text = text
        self.vars = tuple(variables)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def pop(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_op(self, op: str):
        kind, val, pos = self.pop()
        if kind != "op" or val != op:
            raise ParseError(f"expected {op!r}", pos)

    def parse(self) -> MultiPoly:
        poly = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected trailing token {val!r}", pos)
        return poly

    def expr(self) -> MultiPoly:
        kind, val, _ = self.peek()
        sign = 1
        if kind == "op" and val in "+-":
            self.pop()
            sign = -1 if val == "-" else 1
        poly = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.pop()
                nxt = self.term()
                poly = poly + nxt if val == "+" else poly - nxt
            else:
                return poly

    def term(self) -> MultiPoly:
        poly = self.factor()
        while True:
            kind, val, pos = self.peek()
            if kind == "op" and val == "*":
                self.pop()
                poly = poly * self.factor()
            elif kind == "op" and val == "/":
                raise ParseError(
                    "division is only allowed inside rational literals p/q", pos
                )
            elif kind in ("int", "name") or (kind == "op" and val == "("):
                raise ParseError("implicit multiplication is not allowed", pos)
            else:
                return poly

    def factor(self) -> MultiPoly:
        poly = self.atom()
        kind, val, _ = self.peek()
        if kind == "op" and val == "^":
            self.pop()
            kind, val, pos = self.pop()
            if kind != "int":
                raise ParseError("exponent must be a non-negative integer", pos)
            poly = poly**val
        return poly

    def atom(self) -> MultiPoly:
        kind, val, pos = self.pop()
        if kind == "int":
            num = val
            kind2, val2, _ = self.peek()
            if kind2 == "op" and val2 == "/":
                self.pop()
                kind3, den, pos3 = self.pop()
                if kind3 != "int":
                    raise ParseError("non-rational literal: denominator missing", pos3)
                if den == 0:
                    raise ParseError("non-rational literal: zero denominator", pos3)
                return MultiPoly.const(self.vars, Fraction(num, den))
            return MultiPoly.const(self.vars, num)
        if kind == "name":
            if val not in self.vars:
                raise ParseError(f"unknown variable {val!r}", pos)
            return MultiPoly.variable(self.vars, val)
        if kind == "op" and val == "(":
            poly = self.expr()
            self.expect_op(")")
            return poly
        if kind == "op" and val == "-":
            return -self.factor()
        raise ParseError(f"unexpected token {val!r}", pos)


def parse_poly(text: str, variables) -> MultiPoly:
    """Parse `text` into an exact expanded polynomial over `variables`."""
    return _Parser(text, variables).parse()
