"""Finitely generated, deductively closed theories."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .formula import BOTTOM, TOP, Formula, Or, atoms_of, conj, formula_set, simplify, substitute
from .printer import to_text
from .sat import entails, satisfiable


@dataclass(frozen=True)
class FinTheory:
    """``Cn(generators)``.

    Dataclass equality is structural on the generator tuple; use
    :func:`theory_equal` for equality of the denoted theories.
    """

    generators: tuple[Formula, ...]
    inconsistent: bool = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "generators", formula_set(self.generators))
        object.__setattr__(self, "inconsistent", not satisfiable(self.generators))

    def entails(self, f: Formula) -> bool:
        return self.inconsistent or entails(self.generators, f)

    def conjunction(self) -> Formula:
        return conj(self.generators)

    def key(self) -> str:
        """Canonical sort key: the printed generator conjunction."""
        return to_text(self.conjunction())

    def atoms(self) -> frozenset[str]:
        return atoms_of(self.generators)

    def __str__(self) -> str:
        return "{" + ", ".join(to_text(g) for g in self.generators) + "}"


def Cn(*generators: Formula) -> FinTheory:
    return FinTheory(tuple(generators))


INCONSISTENT = FinTheory((BOTTOM,))


def contains(big: FinTheory, small: FinTheory) -> bool:
    """``small`` is a subset of ``big`` as deductively closed theories."""
    if big.inconsistent:
        return True
    return all(entails(big.generators, g) for g in small.generators)


def theory_equal(t1: FinTheory, t2: FinTheory) -> bool:
    if t1.inconsistent or t2.inconsistent:
        return t1.inconsistent == t2.inconsistent
    return contains(t1, t2) and contains(t2, t1)


def same_theories(a: Iterable[FinTheory], b: Iterable[FinTheory]) -> bool:
    """Set equality of two theory collections under :func:`theory_equal`."""
    a, b = list(a), list(b)
    return all(any(theory_equal(x, y) for y in b) for x in a) and all(
        any(theory_equal(x, y) for x in a) for y in b
    )


def dedup_theories(theories: Iterable[FinTheory]) -> list[FinTheory]:
    """Merge equal theories, keeping the one with the smallest canonical key."""
    kept: list[FinTheory] = []
    for t in sorted(theories, key=lambda t: (len(t.key()), t.key())):
        if not any(theory_equal(t, k) for k in kept):
            kept.append(t)
    return sorted(kept, key=FinTheory.key)


def forget(fs: Iterable[Formula], name: str) -> Formula:
    """Strongest consequence of ``fs`` not mentioning the atom ``name``."""
    body = conj(fs)
    return simplify(Or(substitute(body, name, TOP), substitute(body, name, BOTTOM)))


def project(t: FinTheory, keep: Iterable[str]) -> FinTheory:
    """``t`` intersected with the sublanguage over the atoms ``keep``."""
    if t.inconsistent:
        return INCONSISTENT
    keep = frozenset(keep)
    gens: Sequence[Formula] = t.generators
    for name in sorted(t.atoms() - keep):
        # generators without the atom pass through the existential unchanged
        touched = [g for g in gens if name in atoms_of(g)]
        gens = [g for g in gens if name not in atoms_of(g)] + [forget(touched, name)]
    return FinTheory(tuple(g for g in gens if g != TOP))
