"""Default theories and their extensions.

A theory ``S`` is an extension of ``(D, W)`` when ``S`` equals the closure
of ``W`` under classical consequence plus the monotone rules ``p(d)/c(d)``
of the defaults ``d`` whose justifications are all consistent with ``S``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Literal, NamedTuple, Sequence

from .errors import TooManyCandidatesError
from .logic import (
    INCONSISTENT,
    TOP,
    FinTheory,
    Formula,
    Not,
    Top,
    atoms_of,
    dedup_theories,
    entails,
    equivalent_formulas,
    formula_set,
    project,
    same_theories,
    satisfiable,
    theory_equal,
    to_text,
)


@dataclass(frozen=True)
class Default:
    prereq: Formula
    justifications: tuple[Formula, ...]
    consequent: Formula

    def __post_init__(self):
        object.__setattr__(self, "justifications", formula_set(self.justifications))

    @property
    def prerequisite_free(self) -> bool:
        return isinstance(self.prereq, Top) or entails((), self.prereq)

    @property
    def normal(self) -> bool:
        return len(self.justifications) == 1 and equivalent_formulas(
            self.justifications[0], self.consequent
        )

    def atoms(self) -> frozenset[str]:
        return atoms_of((self.prereq, *self.justifications, self.consequent))

    def __str__(self) -> str:
        pre = "" if self.prereq == TOP else to_text(self.prereq) + " "
        just = "".join(" " + to_text(j) + "," for j in self.justifications).rstrip(",")
        return f"{pre}:{just} / {to_text(self.consequent)}"


def normal_default(f: Formula, prereq: Formula = TOP) -> Default:
    """``prereq : f / f``."""
    return Default(prereq, (f,), f)


@dataclass(frozen=True)
class DefaultTheory:
    defaults: tuple[Default, ...] = ()
    world: tuple[Formula, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "defaults", tuple(self.defaults))
        object.__setattr__(self, "world", formula_set(self.world))

    @property
    def normal(self) -> bool:
        return all(d.normal for d in self.defaults)

    @property
    def prerequisite_free(self) -> bool:
        return all(d.prerequisite_free for d in self.defaults)

    def atoms(self) -> frozenset[str]:
        out = atoms_of(self.world)
        for d in self.defaults:
            out |= d.atoms()
        return out


class MonotoneRule(NamedTuple):
    premise: Formula
    conclusion: Formula


@dataclass(frozen=True)
class ExtensionSet:
    """Extensions of a theory, sorted by canonical key, pairwise distinct."""

    members: tuple[FinTheory, ...] = field(default=())

    def __iter__(self) -> Iterator[FinTheory]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __getitem__(self, i: int) -> FinTheory:
        return self.members[i]

    def same_as(self, other: Iterable[FinTheory]) -> bool:
        return same_theories(self.members, other)


def is_applicable(d: Default, s: FinTheory) -> bool:
    if not d.justifications:
        return True
    if s.inconsistent:
        return False
    return not any(entails(s.generators, Not(g)) for g in d.justifications)


def reduct(dt: DefaultTheory, s: FinTheory) -> list[MonotoneRule]:
    return [MonotoneRule(d.prereq, d.consequent) for d in dt.defaults if is_applicable(d, s)]


def _saturate(world: Sequence[Formula], rules: Sequence[MonotoneRule]) -> tuple[list[Formula], list[int]]:
    gens = list(world)
    fired: list[int] = []
    pending = list(range(len(rules)))
    progress = True
    while progress and pending:
        progress = False
        for i in list(pending):
            premise = rules[i].premise
            if isinstance(premise, Top) or entails(gens, premise):
                gens.append(rules[i].conclusion)
                fired.append(i)
                pending.remove(i)
                progress = True
    return gens, fired


def monotone_closure(w: Iterable[Formula], rules: Sequence[MonotoneRule]) -> FinTheory:
    """Least theory containing ``w`` and closed under ``rules``."""
    gens, _ = _saturate(tuple(w), rules)
    return FinTheory(tuple(gens))


def is_extension(dt: DefaultTheory, s: FinTheory) -> bool:
    return theory_equal(monotone_closure(dt.world, reduct(dt, s)), s)


def generating_defaults(dt: DefaultTheory, s: FinTheory) -> list[Default]:
    return [d for d in dt.defaults if is_applicable(d, s) and s.entails(d.prereq)]


def p1_form(dt: DefaultTheory, s: FinTheory) -> FinTheory:
    """``Cn(W + c(GD(D, S)))`` written out as a generator set."""
    if s.inconsistent:
        return INCONSISTENT
    return FinTheory(dt.world + tuple(d.consequent for d in generating_defaults(dt, s)))


def _justification_pool(dt: DefaultTheory) -> tuple[Formula, ...]:
    return formula_set(j for d in dt.defaults for j in d.justifications)


def search_exponent(dt: DefaultTheory) -> int:
    """log2 of the number of candidates :func:`enumerate_extensions` examines."""
    return min(len(dt.defaults), len(_justification_pool(dt)))


def _by_subsets(dt: DefaultTheory) -> list[FinTheory]:
    # every extension is Cn(W + c(D')) for some D' subset of D
    found = []
    seen: set[frozenset[Formula]] = set()
    conseqs = [d.consequent for d in dt.defaults]
    for size in range(len(conseqs) + 1):
        for idx in combinations(range(len(conseqs)), size):
            key = frozenset(conseqs[i] for i in idx)
            if key in seen:
                continue
            seen.add(key)
            cand = FinTheory(dt.world + tuple(conseqs[i] for i in idx))
            if is_extension(dt, cand):
                found.append(cand)
    return found


def _by_justifications(dt: DefaultTheory) -> list[FinTheory]:
    # Guess which justification formulas are consistent with S; that fixes
    # the applicable defaults and hence S. Keep S if the guess reproduces.
    pool = _justification_pool(dt)
    found = []
    seen: dict[frozenset[int], tuple[FinTheory, frozenset[Formula]]] = {}
    for size in range(len(pool) + 1):
        for chosen in combinations(pool, size):
            consistent = frozenset(chosen)
            applicable = frozenset(
                i for i, d in enumerate(dt.defaults) if consistent.issuperset(d.justifications)
            )
            if applicable not in seen:
                rules = [
                    MonotoneRule(dt.defaults[i].prereq, dt.defaults[i].consequent)
                    for i in sorted(applicable)
                ]
                s = monotone_closure(dt.world, rules)
                if s.inconsistent:
                    actual: frozenset[Formula] = frozenset()
                else:
                    actual = frozenset(g for g in pool if satisfiable(s.generators + (g,)))
                seen[applicable] = s, actual
            s, actual = seen[applicable]
            if actual == consistent:
                found.append(s)
    return found


def _by_branching(dt: DefaultTheory) -> list[FinTheory]:
    # Same guess as above, made one justification at a time. Defaults whose
    # justifications are all guessed consistent must apply, so their closure
    # bounds S from below; those with no justification guessed inconsistent
    # may apply, bounding S from above. A guess refuted by a bound is cut.
    pool = _justification_pool(dt)
    index = {g: i for i, g in enumerate(pool)}
    needs = [frozenset(index[j] for j in d.justifications) for d in dt.defaults]
    closures: dict[frozenset[int], FinTheory] = {}

    def close(applicable: frozenset[int]) -> FinTheory:
        if applicable not in closures:
            rules = [
                MonotoneRule(dt.defaults[i].prereq, dt.defaults[i].consequent)
                for i in sorted(applicable)
            ]
            closures[applicable] = monotone_closure(dt.world, rules)
        return closures[applicable]

    found: list[FinTheory] = []

    def walk(k: int, yes: frozenset[int], no: frozenset[int]) -> None:
        low = close(frozenset(i for i, n in enumerate(needs) if n <= yes))
        if any(low.entails(Not(pool[g])) for g in yes):
            return
        high = close(frozenset(i for i, n in enumerate(needs) if not n & no))
        if any(satisfiable(high.generators + (pool[g],)) for g in no):
            return
        if k == len(pool):
            found.append(low)  # low is high here: every justification is decided
            return
        walk(k + 1, yes | {k}, no)
        walk(k + 1, yes, no | {k})

    walk(0, frozenset(), frozenset())
    return found


Method = Literal["auto", "subsets", "justifications", "branching"]


def enumerate_extensions(
    dt: DefaultTheory, method: Method = "auto", max_exponent: int | None = None
) -> ExtensionSet:
    """All extensions of a finite default theory.

    ``subsets`` tests ``Cn(W + c(D'))`` for every ``D'`` of ``D``;
    ``justifications`` guesses the set of consistent justifications instead,
    and ``branching`` makes that guess incrementally with pruning. All are
    exhaustive. ``auto`` branches unless there are fewer defaults than
    distinct justifications, so at most ``2**search_exponent(dt)``
    candidates are ever examined.
    """
    if method == "auto":
        n_sub, n_just = len(dt.defaults), len(_justification_pool(dt))
        method = "subsets" if n_sub < n_just else "branching"
    if max_exponent is not None and search_exponent(dt) > max_exponent:
        raise TooManyCandidatesError(
            f"extension search needs 2^{search_exponent(dt)} candidates "
            f"(limit 2^{max_exponent})"
        )
    search = {"subsets": _by_subsets, "justifications": _by_justifications, "branching": _by_branching}
    raw = search[method](dt)
    return ExtensionSet(tuple(dedup_theories(p1_form(dt, s) for s in raw)))


def equivalent(dt1: DefaultTheory, dt2: DefaultTheory) -> bool:
    return enumerate_extensions(dt1).same_as(enumerate_extensions(dt2))


def semi_equivalent(dt: DefaultTheory, dt_prime: DefaultTheory, base_atoms: Iterable[str]) -> bool:
    """ext(dt) equals the extensions of ``dt_prime`` cut down to ``base_atoms``."""
    base = frozenset(base_atoms)
    projected = [project(t, base) for t in enumerate_extensions(dt_prime)]
    return enumerate_extensions(dt).same_as(projected)
