"""Reading and writing polynomials.

Grammar (whitespace is ignored)::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ['-'] base ('^' uint)?
    base   := int | var | '(' expr ')'
    var    := 'x' | 'y' | 'z'        ('t', the field generator, over GF(p^k))

Output is in descending graded-lex order with explicit ``*`` and ``^``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .poly import VARIABLES, Poly
from .rings import ZZ, ExtensionField, Ring, RingError


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__("%s at position %d: %r" % (message, pos, text))


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")


def _tokenize(text: str):
    tokens = []
    for m in _TOKEN.finditer(text):
        if m.lastindex is None:
            break
        start = m.start(m.lastindex)
        if m.group(1):
            tokens.append(("int", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("name", m.group(2), start))
        else:
            tokens.append(("op", m.group(3), start))
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring, nvars: int):
        self.text = text
        self.ring = ring
        self.nvars = nvars
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, self.text, tok[2])

    def expect(self, op):
        tok = self.take()
        if tok[0] != "op" or tok[1] != op:
            self.error("expected %r" % op, tok)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        result = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected token %r" % (self.peek()[1],))
        return result

    def expr(self) -> Poly:
        sign = 1
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in "+-":
                self.take()
                rhs = self.term()
                result = result + rhs if tok[1] == "+" else result - rhs
            else:
                return result

    def term(self) -> Poly:
        result = self.factor()
        while self.peek()[0] == "op" and self.peek()[1] == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Poly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "-":
            self.take()
            return -self.factor()
        base = self.base()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "int":
                self.error("expected a non-negative integer exponent", exp)
            return base ** exp[1]
        return base

    def base(self) -> Poly:
        tok = self.take()
        kind, value, pos = tok
        if kind == "int":
            nxt = self.peek()
            if nxt[0] == "op" and nxt[1] == "/":
                # rational literal a/b; division is not a general operator
                self.take()
                den = self.take()
                if den[0] != "int" or den[1] == 0:
                    self.error("expected a nonzero integer denominator", den)
                try:
                    return Poly.constant(self.ring(Fraction(value, den[1])), self.ring, self.nvars)
                except (RingError, ZeroDivisionError, ValueError):
                    self.error("%d/%d is not an element of %s" % (value, den[1], self.ring), den)
            return Poly.constant(self.ring(value), self.ring, self.nvars)
        if kind == "name":
            if value in VARIABLES[: self.nvars]:
                return Poly.gen(VARIABLES.index(value), self.ring, self.nvars)
            if value == "t" and isinstance(self.ring, ExtensionField):
                return Poly.constant(self.ring.generator, self.ring, self.nvars)
            if value in VARIABLES:
                self.error("variable %r needs arity > %d" % (value, self.nvars), tok)
            self.error("unknown symbol %r" % value, tok)
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error("unexpected token %r" % value, tok)


def parse_poly(text: str, ring: Ring = ZZ, nvars: int | None = None) -> Poly:
    """Parse ``text`` into a canonical :class:`Poly` over ``ring``.

    Arity defaults to 2 (``x, y``), or 3 when ``z`` occurs.
    """
    if nvars is None:
        names = {tok[1] for tok in _tokenize(text) if tok[0] == "name"}
        nvars = 3 if "z" in names else 2
    return _Parser(text, ring, nvars).parse()


def _format_monomial(exp) -> str:
    parts = []
    for name, k in zip(VARIABLES, exp):
        if k == 1:
            parts.append(name)
        elif k > 1:
            parts.append("%s^%d" % (name, k))
    return "*".join(parts)


def print_poly(f: Poly) -> str:
    if f.is_zero():
        return "0"
    ring = f.ring
    out = []
    for exp, c in f.sorted_terms():
        mono = _format_monomial(exp)
        negative = ring.is_negative(c)
        if negative:
            c = ring.neg(c)
        coeff = ring.format(c)
        if " " in coeff:
            coeff = "(%s)" % coeff
        if not mono:
            body = coeff
        elif c == ring.one:
            body = mono
        else:
            body = "%s*%s" % (coeff, mono)
        if not out:
            out.append("-" + body if negative else body)
        else:
            out.append(("- " if negative else "+ ") + body)
    return " ".join(out)
