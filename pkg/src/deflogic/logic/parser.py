"""Recursive-descent parser for the ASCII formula grammar.

Precedence, tightest first: ``!``, ``&``, ``|``, ``->`` (right assoc),
``<->`` (left assoc). ``&`` and ``|`` associate to the left.
"""
from __future__ import annotations

import re
from typing import NamedTuple

from .formula import BOTTOM, TOP, And, Formula, Iff, Implies, Not, Or, Var


class ParseError(ValueError):
    """Syntax error; ``offset`` is a byte offset into the UTF-8 input."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte {offset}")
        self.message = message
        self.offset = offset


class Token(NamedTuple):
    kind: str
    text: str
    pos: int  # character index


_TOKEN = re.compile(
    r"\s*(?:(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op><->|->|[!&|()]))"
)


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None:
            rest = text[pos:]
            stripped = rest.lstrip()
            if not stripped:
                break
            bad = pos + len(rest) - len(stripped)
            raise ParseError(f"unexpected character {text[bad]!r}", _byte_offset(text, bad))
        kind = "ident" if m.group("ident") else "op"
        tokens.append(Token(kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(Token("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = tokenize(text)
        self.i = 0

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Token) -> ParseError:
        return ParseError(message, _byte_offset(self.text, tok.pos))

    def accept(self, op: str) -> bool:
        tok = self.peek()
        if tok.kind == "op" and tok.text == op:
            self.i += 1
            return True
        return False

    def parse(self) -> Formula:
        if self.peek().kind == "eof":
            raise self.error("empty formula", self.peek())
        f = self.iff()
        tok = self.peek()
        if tok.kind != "eof":
            raise self.error(f"unexpected {tok.text!r}", tok)
        return f

    def iff(self) -> Formula:
        f = self.implication()
        while self.accept("<->"):
            f = Iff(f, self.implication())
        return f

    def implication(self) -> Formula:
        f = self.disjunction()
        if self.accept("->"):
            return Implies(f, self.implication())
        return f

    def disjunction(self) -> Formula:
        f = self.conjunction()
        while self.accept("|"):
            f = Or(f, self.conjunction())
        return f

    def conjunction(self) -> Formula:
        f = self.unary()
        while self.accept("&"):
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.take()
        if tok.kind == "ident":
            if tok.text == "true":
                return TOP
            if tok.text == "false":
                return BOTTOM
            return Var(tok.text)
        if tok.kind == "op" and tok.text == "!":
            return Not(self.unary())
        if tok.kind == "op" and tok.text == "(":
            f = self.iff()
            if not self.accept(")"):
                raise self.error("expected ')'", self.peek())
            return f
        what = "end of input" if tok.kind == "eof" else repr(tok.text)
        raise self.error(f"unexpected {what}", tok)


def parse_formula(text: str) -> Formula:
    return _Parser(text).parse()
