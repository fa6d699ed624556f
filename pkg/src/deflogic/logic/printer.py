"""Canonical ASCII rendering of formulas.

Parentheses are emitted only where the precedence/associativity rules of
the parser would otherwise read the text differently, so
``parse_formula(to_text(f)) == f`` holds structurally.
"""
from __future__ import annotations

from .formula import And, Bottom, Formula, Iff, Implies, Not, Or, Top, Var

# binding strength, higher binds tighter
PREC = {Iff: 1, Implies: 2, Or: 3, And: 4, Not: 5}
SYMBOL = {Iff: "<->", Implies: "->", Or: "|", And: "&"}
RIGHT_ASSOC = {Implies}


def _prec(f: Formula) -> int:
    return PREC.get(type(f), 6)


def to_text(f: Formula) -> str:
    if isinstance(f, Var):
        return f.name
    if isinstance(f, Top):
        return "true"
    if isinstance(f, Bottom):
        return "false"
    if isinstance(f, Not):
        inner = to_text(f.arg)
        return "!" + (inner if _prec(f.arg) >= PREC[Not] else f"({inner})")
    op = type(f)
    p = PREC[op]
    left, right = to_text(f.left), to_text(f.right)
    if op in RIGHT_ASSOC:
        wrap_left, wrap_right = _prec(f.left) <= p, _prec(f.right) < p
    else:
        wrap_left, wrap_right = _prec(f.left) < p, _prec(f.right) <= p
    if wrap_left:
        left = f"({left})"
    if wrap_right:
        right = f"({right})"
    return f"{left} {SYMBOL[op]} {right}"
