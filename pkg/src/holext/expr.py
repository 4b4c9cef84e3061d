"""Text syntax for boundary polynomials.

Grammar (whitespace ignored)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := atom ['^' INT]
    atom   := RATIONAL ['i'] | 'i' | VAR | '(' expr ')'
    VAR    := 'z' INT | '~z' INT          (~ marks the conjugate)

Coefficients are exact: ``3/2``, ``(1/2+2/3i)``, ``(0+1i)``.  Decimal
literals are rejected.  ``BPoly2.to_text`` / ``BPolyN.to_text`` print in a
canonical term order that this parser reads back unchanged.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .boundary import BPoly2, BPolyN
from .exact import GComplex

__all__ = ["ParseError", "parse_poly"]


class ParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}: {text!r}")


_TOKEN = re.compile(
    r"""\s*(?:
        (?P<decimal>\d+\.\d*|\.\d+)
      | (?P<rat>\d+(?:/\d+)?)
      | (?P<var>~?z\d+)
      | (?P<imag>i(?![A-Za-z0-9_]))
      | (?P<op>[-+*^()])
    )""",
    re.VERBOSE,
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        mt = _TOKEN.match(text, pos)
        if mt is None or mt.end() == pos:
            start = pos + (len(text[pos:]) - len(text[pos:].lstrip()))
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        kind = mt.lastgroup
        start = mt.start(kind)
        if kind == "decimal":
            raise ParseError("non-rational literal (use p/q)", text, start)
        tokens.append((kind, mt.group(kind), start))
        pos = mt.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, dim: int):
        self.text = text
        self.dim = dim
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind not in ("op",):
            raise ParseError(f"expected {value!r}", self.text, pos)

    def error(self, msg: str):
        raise ParseError(msg, self.text, self.peek()[2])

    def const(self, c) -> BPolyN:
        return BPolyN.const(self.dim, c)

    def expr(self) -> BPolyN:
        sign = 1
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            sign = -1 if val == "-" else 1
        out = self.term() * sign
        while True:
            kind, val, _ = self.peek()
            if kind == "op" and val in "+-":
                self.take()
                t = self.term()
                out = out + t if val == "+" else out - t
            else:
                return out

    def term(self) -> BPolyN:
        out = self.factor()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            out = out * self.factor()
        return out

    def factor(self) -> BPolyN:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind != "rat" or "/" in val:
                raise ParseError("exponent must be a nonnegative integer", self.text, pos)
            return base ** int(val)
        return base

    def atom(self) -> BPolyN:
        kind, val, pos = self.take()
        if kind == "rat":
            q = Fraction(val)
            if self.peek()[0] == "imag":
                self.take()
                return self.const(GComplex(0, q))
            return self.const(q)
        if kind == "imag":
            return self.const(GComplex(0, 1))
        if kind == "var":
            conj = val.startswith("~")
            idx = int(val.lstrip("~z"))
            if not 1 <= idx <= self.dim:
                raise ParseError(f"unknown variable {val} for dimension {self.dim}", self.text, pos)
            return BPolyN.var(self.dim, idx, conj)
        if (kind, val) == ("op", "("):
            inner = self.expr()
            self.expect(")")
            return inner
        raise ParseError(f"unexpected {val or 'end of input'!r}", self.text, pos)


def parse_poly(text: str, dim: int = 2) -> BPoly2 | BPolyN:
    """Parse ``text``; dimension 2 gives a ``BPoly2``, higher dimensions a ``BPolyN``."""
    if dim < 2:
        raise ValueError("dimension must be at least 2")
    parser = _Parser(text, dim)
    if parser.peek()[0] == "end":
        parser.error("empty expression")
    out = parser.expr()
    if parser.peek()[0] != "end":
        parser.error(f"unexpected {parser.peek()[1]!r}")
    return out.to_bpoly2() if dim == 2 else out
