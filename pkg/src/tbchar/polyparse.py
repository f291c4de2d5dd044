"""Parser for the ASCII polynomial grammar::

    poly   := ['-'] term (('+'|'-') term)*
    term   := integer ('*' factor)* | factor ('*' factor)*
    factor := var ('^' positive-integer)?

Whitespace separates tokens and is otherwise ignored.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from .polyring import BARRED, Polynomial, VariableSet

__all__ = ["parse", "PolySyntaxError", "UnknownVariable"]


class PolySyntaxError(ValueError):
    """Malformed polynomial text.  ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")

    def caret(self) -> str:
        return f"{self.text}\n{' ' * self.position}^"


class UnknownVariable(PolySyntaxError):
    pass


class _Tok(NamedTuple):
    kind: str
    value: str
    pos: int


_TOKEN_RE = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))")


def _tokenize(text: str) -> Iterator[_Tok]:
    pos = 0
    n = len(text)
    while pos < n:
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            stripped = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise PolySyntaxError(f"unexpected character {text[stripped]!r}", stripped, text)
        kind = m.lastgroup
        yield _Tok(kind, m.group(kind), m.start(kind))
        pos = m.end()
    yield _Tok("end", "", len(text))


class _Parser:
    def __init__(self, text: str, variables: VariableSet):
        self.text = text
        self.vars = variables
        self.toks = list(_tokenize(text))
        self.i = 0

    def peek(self) -> _Tok:
        return self.toks[self.i]

    def take(self) -> _Tok:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def fail(self, msg: str, tok: _Tok):
        raise PolySyntaxError(msg, tok.pos, self.text)

    def poly(self) -> Polynomial:
        sign = 1
        if self.peek().value == "-":
            self.take()
            sign = -1
        result = self.term().scale(sign)
        while self.peek().kind == "op" and self.peek().value in "+-":
            sign = 1 if self.take().value == "+" else -1
            result = result + self.term().scale(sign)
        tok = self.peek()
        if tok.kind != "end":
            self.fail(f"unexpected {tok.value!r}", tok)
        return result

    def term(self) -> Polynomial:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            result = Polynomial.constant(int(tok.value), self.vars)
        elif tok.kind == "name":
            result = self.factor()
        else:
            what = "end of input" if tok.kind == "end" else repr(tok.value)
            self.fail(f"expected a number or variable, got {what}", tok)
        while self.peek().value == "*":
            self.take()
            result = result * self.factor()
        return result

    def factor(self) -> Polynomial:
        tok = self.take()
        if tok.kind != "name":
            what = "end of input" if tok.kind == "end" else repr(tok.value)
            self.fail(f"expected a variable, got {what}", tok)
        if tok.value not in self.vars.names:
            raise UnknownVariable(
                f"unknown variable {tok.value!r} (expected one of {', '.join(self.vars.names)})",
                tok.pos,
                self.text,
            )
        base = Polynomial.var(tok.value, self.vars)
        if self.peek().value != "^":
            return base
        self.take()
        exp = self.take()
        if exp.kind != "int" or int(exp.value) < 1:
            self.fail("expected a positive integer exponent", exp)
        return base ** int(exp.value)


def parse(text: str, variables: VariableSet = BARRED) -> Polynomial:
    """Parse ``text`` into a :class:`Polynomial` over ``variables``."""
    return _Parser(text, variables).poly()
