"""Closed-world translation of normal default theories.

A normal theory is rewritten over a larger language as ``(CWA_P, W + V)``:
one fresh atom ``p_psi`` per consequent ``psi``, bridge axioms
``V = {!p_psi <-> psi}``, and the closed-world defaults ``:!p/!p`` for the
fresh atoms. Cutting its extensions back to the original atoms gives the
extensions of the source theory.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from .defaults import Default, DefaultTheory, normal_default, semi_equivalent
from .logic import RESERVED_PREFIX, Formula, Iff, Not, Var, satisfiable
from .transform import normal_prereq_free


@dataclass(frozen=True)
class CwaTranslation:
    fresh_atoms: dict[Formula, str]
    bridge: tuple[Formula, ...]
    result: DefaultTheory
    base_atoms: frozenset[str]

    @property
    def consequents(self) -> tuple[Formula, ...]:
        return tuple(self.fresh_atoms)


def cwa_defaults(p: Iterable[str | Var]) -> list[Default]:
    names = [a.name if isinstance(a, Var) else a for a in p]
    if isinstance(p, (set, frozenset)):
        names.sort()
    return [normal_default(Not(Var(n))) for n in dict.fromkeys(names)]


def _fresh_names(taken: frozenset[str]):
    counter = 0
    while True:
        name = f"{RESERVED_PREFIX}{counter}"
        counter += 1
        if name not in taken:
            yield name


def cwa_translate(dt: DefaultTheory) -> CwaTranslation:
    pf = normal_prereq_free(dt)
    base = dt.atoms()
    names = _fresh_names(base | pf.atoms())
    fresh: dict[Formula, str] = {}
    for d in pf.defaults:
        if d.consequent not in fresh:
            fresh[d.consequent] = next(names)
    bridge = tuple(Iff(Not(Var(p)), psi) for psi, p in fresh.items())
    result = DefaultTheory(tuple(cwa_defaults(list(fresh.values()))), dt.world + bridge)
    return CwaTranslation(fresh, bridge, result, base)


def f1_failures(dt: DefaultTheory, tr: CwaTranslation) -> list[tuple[Formula, ...]]:
    """Subsets ``Phi`` of the consequents where ``W + Phi`` and
    ``W + V + {!p_psi : psi in Phi}`` disagree on satisfiability."""
    psis = tr.consequents
    bad = []
    for size in range(len(psis) + 1):
        for phi in combinations(psis, size):
            left = satisfiable(dt.world + phi)
            marks = tuple(Not(Var(tr.fresh_atoms[psi])) for psi in phi)
            right = satisfiable(dt.world + tr.bridge + marks)
            if left != right:
                bad.append(phi)
    return bad


def verify_cwa(dt: DefaultTheory, tr: CwaTranslation) -> bool:
    if not set(tr.fresh_atoms.values()).isdisjoint(dt.atoms()):
        return False
    if f1_failures(dt, tr):
        return False
    return semi_equivalent(dt, tr.result, tr.base_atoms)
