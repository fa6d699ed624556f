"""Propositional formula trees and structural helpers."""
from __future__ import annotations

import re
from typing import Callable, Iterable, Mapping

IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
RESERVED_PREFIX = "_j_"
KEYWORDS = frozenset({"true", "false"})


class Formula:
    """Base class of all formula nodes.

    Nodes are immutable. Equality is structural; the hash is computed once
    at construction since formulas are used heavily as cache keys.
    """

    __slots__ = ("_h",)
    children: tuple[str, ...] = ()

    def _init(self, *values) -> None:
        for name, value in zip(self.children, values):
            object.__setattr__(self, name, value)
        object.__setattr__(self, "_h", hash((type(self).__name__,) + values))

    def _values(self) -> tuple:
        return tuple(getattr(self, name) for name in self.children)

    def __setattr__(self, name, value):
        raise AttributeError(f"{type(self).__name__} is immutable")

    def __eq__(self, other) -> bool:
        if self is other:
            return True
        if type(self) is not type(other) or self._h != other._h:
            return False
        return self._values() == other._values()

    def __hash__(self) -> int:
        return self._h

    def __reduce__(self):
        return type(self), self._values()

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(map(repr, self._values()))})"

    def __str__(self) -> str:
        from .printer import to_text

        return to_text(self)

    def __and__(self, other: Formula) -> Formula:
        return And(self, other)

    def __or__(self, other: Formula) -> Formula:
        return Or(self, other)

    def __invert__(self) -> Formula:
        return Not(self)

    def implies(self, other: Formula) -> Formula:
        return Implies(self, other)

    def iff(self, other: Formula) -> Formula:
        return Iff(self, other)


class Top(Formula):
    __slots__ = ()

    def __init__(self):
        self._init()


class Bottom(Formula):
    __slots__ = ()

    def __init__(self):
        self._init()


class Var(Formula):
    __slots__ = ("name",)
    children = ("name",)

    def __init__(self, name: str):
        self._init(name)


class Not(Formula):
    __slots__ = ("arg",)
    children = ("arg",)

    def __init__(self, arg: Formula):
        self._init(arg)


class _Binary(Formula):
    __slots__ = ("left", "right")
    children = ("left", "right")

    def __init__(self, left: Formula, right: Formula):
        self._init(left, right)


class And(_Binary):
    __slots__ = ()


class Or(_Binary):
    __slots__ = ()


class Implies(_Binary):
    __slots__ = ()


class Iff(_Binary):
    __slots__ = ()


TOP = Top()
BOTTOM = Bottom()
BINARY = (And, Or, Implies, Iff)


def atom(name: str) -> Var:
    if not IDENT.match(name) or name in KEYWORDS:
        raise ValueError(f"invalid atom name {name!r}")
    return Var(name)


def atoms(names: str) -> tuple[Var, ...]:
    """``atoms("p q r")`` -> three atoms."""
    return tuple(atom(n) for n in names.split())


def conj(fs: Iterable[Formula]) -> Formula:
    """Left-nested conjunction; the empty conjunction is ``true``."""
    result = None
    for f in fs:
        result = f if result is None else And(result, f)
    return TOP if result is None else result


def disj(fs: Iterable[Formula]) -> Formula:
    """Left-nested disjunction; the empty disjunction is ``false``."""
    result = None
    for f in fs:
        result = f if result is None else Or(result, f)
    return BOTTOM if result is None else result


def atoms_of(f: Formula | Iterable[Formula]) -> frozenset[str]:
    if not isinstance(f, Formula):
        out: set[str] = set()
        for g in f:
            out |= atoms_of(g)
        return frozenset(out)
    out = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, Var):
            out.add(g.name)
        elif isinstance(g, Not):
            stack.append(g.arg)
        elif isinstance(g, BINARY):
            stack.append(g.left)
            stack.append(g.right)
    return frozenset(out)


def evaluate(f: Formula, valuation: Mapping[str, bool]) -> bool:
    """Truth value of ``f`` under ``valuation`` (missing atoms are an error)."""
    if isinstance(f, Var):
        return valuation[f.name]
    if isinstance(f, Top):
        return True
    if isinstance(f, Bottom):
        return False
    if isinstance(f, Not):
        return not evaluate(f.arg, valuation)
    a = evaluate(f.left, valuation)
    b = evaluate(f.right, valuation)
    if isinstance(f, And):
        return a and b
    if isinstance(f, Or):
        return a or b
    if isinstance(f, Implies):
        return (not a) or b
    if isinstance(f, Iff):
        return a == b
    raise TypeError(f)


def transform(f: Formula, leaf: Callable[[Formula], Formula]) -> Formula:
    """Rebuild ``f`` bottom-up, replacing every leaf by ``leaf(leaf_node)``."""
    if isinstance(f, Not):
        return Not(transform(f.arg, leaf))
    if isinstance(f, BINARY):
        return type(f)(transform(f.left, leaf), transform(f.right, leaf))
    return leaf(f)


def substitute(f: Formula, name: str, value: Formula) -> Formula:
    return transform(f, lambda g: value if isinstance(g, Var) and g.name == name else g)


def simplify(f: Formula) -> Formula:
    """Fold away ``true``/``false`` constants and double negations."""
    if isinstance(f, Not):
        a = simplify(f.arg)
        if isinstance(a, Top):
            return BOTTOM
        if isinstance(a, Bottom):
            return TOP
        if isinstance(a, Not):
            return a.arg
        return Not(a)
    if not isinstance(f, BINARY):
        return f
    a, b = simplify(f.left), simplify(f.right)
    if isinstance(f, And):
        if isinstance(a, Bottom) or isinstance(b, Bottom):
            return BOTTOM
        if isinstance(a, Top):
            return b
        if isinstance(b, Top):
            return a
        return And(a, b)
    if isinstance(f, Or):
        if isinstance(a, Top) or isinstance(b, Top):
            return TOP
        if isinstance(a, Bottom):
            return b
        if isinstance(b, Bottom):
            return a
        return Or(a, b)
    if isinstance(f, Implies):
        if isinstance(a, Bottom) or isinstance(b, Top):
            return TOP
        if isinstance(a, Top):
            return b
        if isinstance(b, Bottom):
            return simplify(Not(a))
        return Implies(a, b)
    # Iff
    if isinstance(a, Top):
        return b
    if isinstance(b, Top):
        return a
    if isinstance(a, Bottom):
        return simplify(Not(b))
    if isinstance(b, Bottom):
        return simplify(Not(a))
    return Iff(a, b)


def formula_set(fs: Iterable[Formula]) -> tuple[Formula, ...]:
    """Structurally deduplicated tuple, first occurrence wins."""
    return tuple(dict.fromkeys(fs))
