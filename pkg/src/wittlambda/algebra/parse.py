"""Polynomial expression parser.

Accepts integers (arbitrary size), identifiers, ``+ - * ^``, parentheses and
``/`` by an integer literal.  Multiplication must be written with ``*``:
juxtaposition such as ``2x`` or ``x y`` is rejected with the column of the
offending token.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import ParseError
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def _tokenize(text, line, source):
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        col = m.start(m.lastindex) + 1
        if m.group(1):
            tokens.append(("int", int(m.group(1)), col))
        elif m.group(2):
            tokens.append(("id", m.group(2), col))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/":
                raise ParseError(f"unexpected character {ch!r}", line, col, source)
            tokens.append((ch, ch, col))
        pos = m.end()
    if text[pos:].strip():
        raise ParseError("trailing input", line, pos + 1, source)
    tokens.append(("end", None, len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text, variables, laurent, line, source, column_offset):
        self.tokens = _tokenize(text, line, source)
        self.i = 0
        self.variables = tuple(variables) if variables is not None else None
        self.laurent = laurent
        self.seen = []
        self.line = line
        self.source = source
        self.offset = column_offset

    def error(self, msg, tok=None):
        tok = tok or self.tokens[self.i]
        raise ParseError(msg, self.line, tok[2] + self.offset, self.source)

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.error(f"expected {kind!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            tok = self.peek()
            if tok[0] in ("int", "id", "("):
                self.error("implicit multiplication is not allowed; use '*'")
            self.error(f"unexpected {tok[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[0] in "+-" and self.peek()[0] != "end":
            op = self.take()[0]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self):
        p = self.unary()
        while True:
            kind = self.peek()[0]
            if kind == "*":
                self.take()
                p = p * self.unary()
            elif kind == "/":
                self.take()
                tok = self.take("int")
                if tok[1] == 0:
                    self.error("division by zero", tok)
                p = p * Fraction(1, tok[1])
            elif kind in ("int", "id", "("):
                self.error("implicit multiplication is not allowed; use '*'")
            else:
                return p

    def unary(self):
        kind = self.peek()[0]
        if kind == "-":
            self.take()
            return -self.unary()
        if kind == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        start = self.peek()
        base = self.atom()
        if self.peek()[0] == "^":
            self.take()
            sign = 1
            paren = False
            if self.peek()[0] == "(":
                self.take()
                paren = True
            if self.peek()[0] == "-":
                self.take()
                sign = -1
            tok = self.take("int")
            if paren:
                self.take(")")
            e = sign * tok[1]
            if e < 0:
                try:
                    return base.monomial_inverse() ** (-e)
                except ValueError as exc:
                    self.error(str(exc), start)
            return base**e
        return base

    def atom(self):
        tok = self.take()
        if tok[0] == "int":
            return Poly.const(tok[1])
        if tok[0] == "id":
            name = tok[1]
            if self.variables is not None and name not in self.variables:
                self.error(f"unknown variable {name!r}", tok)
            if name not in self.seen:
                self.seen.append(name)
            lau = self.laurent is None or name in self.laurent
            return Poly.var(name, laurent=lau)
        if tok[0] == "(":
            p = self.expr()
            self.take(")")
            return p
        self.error(f"unexpected {tok[1]!r}", tok)


def parse_poly(text, variables=None, laurent=None, line=None, source=None, column_offset=0):
    """Parse ``text`` into a :class:`Poly`.

    ``variables`` restricts (and orders) the allowed identifiers; otherwise
    they are ordered by first appearance.  ``laurent`` names the variables
    that may carry negative exponents (``None`` allows any).
    """
    p = _Parser(text, variables, None if laurent is None else frozenset(laurent), line, source, column_offset)
    poly = p.parse()
    order = p.variables if p.variables is not None else tuple(p.seen)
    lau = frozenset(order) if laurent is None else frozenset(laurent) & frozenset(order)
    poly = poly.with_variables(order)
    for exps in poly.terms:
        for v, e in zip(order, exps):
            if e < 0 and v not in lau:
                raise ParseError(f"negative exponent on non-Laurent variable {v!r}", line, None, source)
    return Poly(poly.terms, order, lau)
