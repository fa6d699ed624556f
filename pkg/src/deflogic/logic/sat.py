"""Satisfiability and entailment by DPLL over a Tseitin clausal form.

Each compound subformula gets its own auxiliary variable, keyed by the
subformula itself, so clause sets of different formulas can be unioned
without renaming: equal subformulas share one definition.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterable

from .formula import BOTTOM, TOP, And, Bottom, Formula, Iff, Implies, Not, Or, Top, Var, simplify

Lit = tuple[Formula, bool]
Clause = frozenset[Lit]


def _neg(lit: Lit) -> Lit:
    return lit[0], not lit[1]


def _define(f: Formula, out: set[Clause]) -> Lit:
    """Literal equivalent to ``f``; adds defining clauses to ``out``."""
    if isinstance(f, Var):
        return f, True
    if isinstance(f, Not):
        return _neg(_define(f.arg, out))
    a = _define(f.left, out)
    b = _define(f.right, out)
    x = (f, True)
    nx, na, nb = _neg(x), _neg(a), _neg(b)
    if isinstance(f, And):
        out.update((frozenset((nx, a)), frozenset((nx, b)), frozenset((x, na, nb))))
    elif isinstance(f, Or):
        out.update((frozenset((nx, a, b)), frozenset((x, na)), frozenset((x, nb))))
    elif isinstance(f, Implies):
        out.update((frozenset((nx, na, b)), frozenset((x, a)), frozenset((x, nb))))
    elif isinstance(f, Iff):
        out.update(
            (
                frozenset((nx, na, b)),
                frozenset((nx, a, nb)),
                frozenset((x, a, b)),
                frozenset((x, na, nb)),
            )
        )
    else:
        raise TypeError(f"unexpected node {f!r}")
    return x


def _assert(f: Formula, out: set[Clause]) -> None:
    if isinstance(f, And):
        _assert(f.left, out)
        _assert(f.right, out)
    elif isinstance(f, Not) and isinstance(f.arg, Or):
        _assert(Not(f.arg.left), out)
        _assert(Not(f.arg.right), out)
    elif isinstance(f, Or):
        out.add(frozenset((_define(f.left, out), _define(f.right, out))))
    else:
        out.add(frozenset((_define(f, out),)))


@lru_cache(maxsize=1 << 16)
def clauses_of(f: Formula) -> frozenset[Clause]:
    """Clausal form of ``f``; the empty clause marks an unsatisfiable formula."""
    g = simplify(f)
    if isinstance(g, Top):
        return frozenset()
    if isinstance(g, Bottom):
        return frozenset((frozenset(),))
    out: set[Clause] = set()
    _assert(g, out)
    return frozenset(out)


def _reduce(clauses: list[frozenset[int]], lit: int) -> list[frozenset[int]] | None:
    out = []
    for c in clauses:
        if lit in c:
            continue
        if -lit in c:
            c = c - {-lit}
            if not c:
                return None
        out.append(c)
    return out


def dpll(clauses: list[frozenset[int]], trail: list[int]) -> bool:
    """Backtracking search with unit propagation.

    On success ``trail`` holds the literals set along the successful branch.
    """
    mark = len(trail)
    while True:
        if not clauses:
            return True
        unit = next((c for c in clauses if len(c) == 1), None)
        if unit is None:
            break
        (lit,) = unit
        trail.append(lit)
        clauses = _reduce(clauses, lit)
        if clauses is None:
            del trail[mark:]
            return False
    shortest = min(clauses, key=len)
    lit = next(iter(shortest))
    for choice in (lit, -lit):
        reduced = _reduce(clauses, choice)
        if reduced is not None:
            trail.append(choice)
            if dpll(reduced, trail):
                return True
            trail.pop()
    del trail[mark:]
    return False


def _solve(fs: frozenset[Formula]) -> dict[Formula, bool] | None:
    clause_set: set[Clause] = set()
    for f in fs:
        clause_set |= clauses_of(f)
    if frozenset() in clause_set:
        return None
    index: dict[Formula, int] = {}
    numbered = []
    for c in clause_set:
        numbered.append(
            frozenset(
                index.setdefault(k, len(index) + 1) * (1 if sign else -1) for k, sign in c
            )
        )
    trail: list[int] = []
    if not dpll(numbered, trail):
        return None
    keys = {v: k for k, v in index.items()}
    return {keys[abs(lit)]: lit > 0 for lit in trail}


@lru_cache(maxsize=1 << 18)
def _satisfiable(fs: frozenset[Formula]) -> bool:
    return _solve(fs) is not None


def satisfiable(fs: Iterable[Formula]) -> bool:
    return _satisfiable(frozenset(fs))


def find_model(fs: Iterable[Formula]) -> dict[str, bool] | None:
    """A satisfying valuation of the atoms of ``fs``, or ``None``.

    Atoms left unconstrained by the search are set to ``False``.
    """
    from .formula import atoms_of

    fs = frozenset(fs)
    assignment = _solve(fs)
    if assignment is None:
        return None
    model = {name: False for name in atoms_of(fs)}
    for key, value in assignment.items():
        if isinstance(key, Var):
            model[key.name] = value
    return model


def entails(fs: Iterable[Formula], f: Formula) -> bool:
    """``fs |- f``, decided as unsatisfiability of ``fs + {!f}``."""
    fs = frozenset(fs)
    if f in fs or f == TOP or BOTTOM in fs:
        return True
    return not _satisfiable(fs | {Not(f)})


def equivalent_formulas(f: Formula, g: Formula) -> bool:
    return entails((f,), g) and entails((g,), f)


def clear_caches() -> None:
    clauses_of.cache_clear()
    _satisfiable.cache_clear()
