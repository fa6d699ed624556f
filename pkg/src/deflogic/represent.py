"""Constructions of default theories whose extensions are a given family."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Iterator, Optional, Sequence

from .defaults import Default, DefaultTheory, normal_default
from .errors import InclusionError, UnlistedAtomsError, UnsatisfiableWorldError
from .logic import (
    TOP,
    FinTheory,
    Formula,
    Not,
    Var,
    atoms_of,
    conj,
    contains,
    disj,
    formula_set,
    satisfiable,
    theory_equal,
)


@dataclass(frozen=True)
class TheoryFamily:
    members: tuple[FinTheory, ...]

    def __post_init__(self):
        members = tuple(self.members)
        object.__setattr__(self, "members", members)
        for i, j in combinations(range(len(members)), 2):
            if theory_equal(members[i], members[j]):
                raise ValueError(f"family members {i} and {j} denote the same theory")

    @classmethod
    def of(cls, generator_sets: Iterable[Iterable[Formula]]) -> TheoryFamily:
        return cls(tuple(FinTheory(tuple(g)) for g in generator_sets))

    def __iter__(self) -> Iterator[FinTheory]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> FinTheory:
        return self.members[i]


@dataclass(frozen=True)
class FamilyDiagnosis:
    non_including: bool
    intersection: FinTheory
    witnesses: tuple[Formula, ...]
    # (i, j) with member i contained in member j, when not non-including
    inclusion: Optional[tuple[int, int]] = None


def intersect_theories(fam: Sequence[FinTheory]) -> FinTheory:
    """Generator set of the intersection: one disjunction of member conjunctions."""
    members = list(fam)
    if not members:
        raise ValueError("cannot intersect an empty family")
    if len(members) == 1:
        return members[0]
    return FinTheory((disj(t.conjunction() for t in members),))


def diagnose_family(fam: Sequence[FinTheory]) -> FamilyDiagnosis:
    members = list(fam)
    u = intersect_theories(members)
    inclusion = None
    for i, j in product(range(len(members)), repeat=2):
        if i != j and contains(members[j], members[i]):
            inclusion = (i, j)
            break
    # each member is Cn(U + {AND(G_i)}) because U is already inside Cn(G_i)
    witnesses = tuple(t.conjunction() for t in members)
    return FamilyDiagnosis(inclusion is None, u, witnesses, inclusion)


def construct_representing(fam: Sequence[FinTheory]) -> DefaultTheory:
    """A finite default theory whose extensions are exactly ``fam``.

    For ``k >= 2`` members with witnesses ``phi_i`` the defaults are
    ``: {!phi_j : j != i} / phi_i`` over the world ``U`` (the intersection).
    """
    members = list(fam)
    diag = diagnose_family(members)
    if not diag.non_including:
        raise InclusionError(diag.inclusion)
    if len(members) == 1:
        return DefaultTheory((), members[0].generators)
    phis = diag.witnesses
    defaults = tuple(
        Default(TOP, tuple(Not(phi) for j, phi in enumerate(phis) if j != i), phis[i])
        for i in range(len(phis))
    )
    return DefaultTheory(defaults, diag.intersection.generators)


def maximal_consistent_subsets(
    w: Iterable[Formula], psi: Iterable[Formula]
) -> list[tuple[Formula, ...]]:
    w, psi = formula_set(w), formula_set(psi)
    if not satisfiable(w):
        raise UnsatisfiableWorldError("W is unsatisfiable")
    kept: list[frozenset[Formula]] = []
    out = []
    for size in range(len(psi), -1, -1):
        for phi in combinations(psi, size):
            if any(kept_set.issuperset(phi) for kept_set in kept):
                continue
            if satisfiable(w + phi):
                kept.append(frozenset(phi))
                out.append(phi)
    return out


def construct_normal_representing(w: Iterable[Formula], psi: Iterable[Formula]) -> DefaultTheory:
    """``({:phi/phi : phi in psi}, w)``."""
    return DefaultTheory(tuple(normal_default(phi) for phi in formula_set(psi)), tuple(w))


def _atom_names(p: Iterable[str | Var]) -> list[str]:
    names = [a.name if isinstance(a, Var) else a for a in p]
    if isinstance(p, (set, frozenset)):
        names.sort()
    return list(dict.fromkeys(names))


def comp_defaults(p: Iterable[str | Var]) -> list[Default]:
    """``:q/q`` for every literal ``q`` over the atoms ``p``."""
    names = _atom_names(p)
    if not names:
        raise ValueError("the atom set must be nonempty")
    out = []
    for name in names:
        out.append(normal_default(Var(name)))
        out.append(normal_default(Not(Var(name))))
    return out


def _signed(names: Sequence[str], signs: Sequence[bool]) -> tuple[Formula, ...]:
    return tuple(Var(n) if s else Not(Var(n)) for n, s in zip(names, signs))


def minimal_p_complete(w: Iterable[Formula], p: Iterable[str | Var]) -> TheoryFamily:
    """Inclusion-minimal theories containing ``w`` and deciding every atom of ``p``.

    Brute force over all sign assignments to ``p``.
    """
    w = formula_set(w)
    if not satisfiable(w):
        raise UnsatisfiableWorldError("W is unsatisfiable")
    names = _atom_names(p)
    candidates = []
    for signs in product((True, False), repeat=len(names)):
        lits = _signed(names, signs)
        if satisfiable(w + lits):
            candidates.append(FinTheory(w + lits))
    minimal: list[FinTheory] = []
    for c in candidates:
        strictly_above = any(
            contains(c, o) and not theory_equal(c, o) for o in candidates if o is not c
        )
        if not strictly_above and not any(theory_equal(c, m) for m in minimal):
            minimal.append(c)
    return TheoryFamily(tuple(minimal))


def tree_defaults(w: Iterable[Formula], atom_order: Sequence[str | Var]) -> DefaultTheory:
    """Normal defaults ``:l_0 & ... & l_n / l_0 & ... & l_n`` for every sign
    prefix along ``atom_order`` that is consistent with ``w``; empty world.

    ``w`` must only mention listed atoms, otherwise the full branches would
    not contain it.
    """
    w = formula_set(w)
    names = _atom_names(atom_order)
    if not satisfiable(w):
        raise UnsatisfiableWorldError("W is unsatisfiable")
    stray = atoms_of(w) - set(names)
    if stray:
        raise UnlistedAtomsError(f"W mentions unlisted atoms: {', '.join(sorted(stray))}")
    defaults = []
    level: list[tuple[Formula, ...]] = [()]
    for name in names:
        nxt = []
        for prefix in level:
            for lit in (Var(name), Not(Var(name))):
                branch = prefix + (lit,)
                if satisfiable(w + branch):
                    nxt.append(branch)
                    defaults.append(normal_default(conj(branch)))
        level = nxt
    return DefaultTheory(tuple(defaults), ())


def full_branches(w: Iterable[Formula], atom_order: Sequence[str | Var]) -> list[FinTheory]:
    """``Cn`` of every complete sign assignment to ``atom_order`` consistent with ``w``."""
    w = formula_set(w)
    names = _atom_names(atom_order)
    return [
        FinTheory(lits)
        for signs in product((True, False), repeat=len(names))
        if satisfiable(w + (lits := _signed(names, signs)))
    ]
