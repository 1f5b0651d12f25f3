"""Exact parser for rational-function expressions in ``t``.

Grammar::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' ['-'] INT)?
    atom   := INT | 't' | '(' expr ')'
"""

from __future__ import annotations

import re

from .poly import RatFunc, UniPoly


class ParseError(ValueError):
    def __init__(self, message: str, text: str = "", pos: int | None = None):
        self.text = text
        self.pos = pos
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}" + (f" in {text!r}" if text else ""))


_TOKEN = re.compile(r"\s*(?:(\d+)|(t)|([-+*/^()]))")


def _tokenize(text: str):
    pos, out = 0, []
    while text[pos:].strip():
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError("unexpected character", text, len(text) - len(text[pos:].lstrip()))
        start = m.start(m.lastindex)
        out.append((m.lastindex, m.group(m.lastindex), start))
        pos = m.end()
    out.append((0, "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self, sym=None):
        kind, val, pos = self.toks[self.i]
        if sym is not None and val != sym:
            raise ParseError(f"expected {sym!r}", self.text, pos)
        self.i += 1
        return kind, val, pos

    def parse(self) -> RatFunc:
        if self.peek()[0] == 0:
            raise ParseError("empty expression", self.text, 0)
        v = self.expr()
        kind, val, pos = self.peek()
        if kind != 0:
            raise ParseError(f"unexpected token {val!r}", self.text, pos)
        return v

    def expr(self):
        v = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            w = self.term()
            v = v + w if op == "+" else v - w
        return v

    def term(self):
        v = self.unary()
        while self.peek()[1] in ("*", "/"):
            _, op, pos = self.take()
            w = self.unary()
            if op == "*":
                v = v * w
            else:
                if w.is_zero():
                    raise ParseError("division by zero", self.text, pos)
                v = v / w
        return v

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        v = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, val, pos = self.take()
            if kind != 1:
                raise ParseError("exponent must be an integer", self.text, pos)
            e = sign * int(val)
            if e < 0 and v.is_zero():
                raise ParseError("negative power of zero", self.text, pos)
            v = v ** e
        return v

    def atom(self):
        kind, val, pos = self.peek()
        if kind == 1:
            self.take()
            return RatFunc(int(val))
        if kind == 2:
            self.take()
            return RatFunc(UniPoly.t())
        if val == "(":
            self.take()
            v = self.expr()
            self.take(")")
            return v
        raise ParseError("expected a number, 't' or '('" if kind else "unexpected end of input",
                         self.text, pos)


def parse_ratfunc(text: str) -> RatFunc:
    """Parse ``text`` exactly, e.g. ``"t^2 - 2*t/3"`` or ``"1/(1+t)"``."""
    if not isinstance(text, str):
        if isinstance(text, int):
            return RatFunc(text)
        raise ParseError(f"expected a string, got {type(text).__name__}")
    return _Parser(text).parse()
