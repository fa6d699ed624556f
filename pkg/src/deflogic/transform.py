"""Extension-preserving rewrites of default theories, and extension elimination."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .defaults import Default, DefaultTheory, enumerate_extensions, normal_default
from .errors import (
    InconsistentMemberError,
    NoSSDRError,
    NotNormalError,
    NotNormalizableError,
    NotRepresentingError,
    UnsatisfiableWorldError,
)
from .logic import (
    BOTTOM,
    TOP,
    FinTheory,
    Formula,
    conj,
    entails,
    equivalent_formulas,
    formula_set,
    satisfiable,
)
from .represent import TheoryFamily

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class RealizableSubset:
    """Defaults that can all fire in some derivation from W, with a firing order."""

    subset: tuple[Default, ...]
    order: tuple[Default, ...]


def realizable_subsets(dt: DefaultTheory) -> list[RealizableSubset]:
    """Every subset of ``dt.defaults`` whose prerequisites can be derived in turn.

    Subsets are listed in bitmask order over the default list. Greedy
    admission is complete: admitting a default only adds consequents, which
    can never un-derive another prerequisite.
    """
    defaults = dt.defaults
    out = []
    for mask in range(1 << len(defaults)):
        members = [defaults[i] for i in range(len(defaults)) if mask >> i & 1]
        gens = list(dt.world)
        order: list[Default] = []
        pending = list(members)
        progress = True
        while pending and progress:
            progress = False
            for d in list(pending):
                if d.prereq == TOP or entails(gens, d.prereq):
                    order.append(d)
                    gens.append(d.consequent)
                    pending.remove(d)
                    progress = True
        if not pending:
            out.append(RealizableSubset(tuple(members), tuple(order)))
    return out


def prune_blocked(dt: DefaultTheory) -> DefaultTheory:
    """Drop defaults with an unsatisfiable justification; they never apply."""
    kept = []
    for d in dt.defaults:
        if all(satisfiable((j,)) for j in d.justifications):
            kept.append(d)
        else:
            log.info("pruned default with unsatisfiable justification: %s", d)
    return DefaultTheory(tuple(kept), dt.world)


def prereq_free(dt: DefaultTheory) -> DefaultTheory:
    """Equivalent theory whose defaults all have prerequisite ``true``.

    One default ``: j(D') / AND c(D')`` per nonempty realizable subset ``D'``.
    """
    dt = prune_blocked(dt)
    out: list[Default] = []
    for rs in realizable_subsets(dt):
        if not rs.subset:
            continue
        justs = formula_set(j for d in rs.subset for j in d.justifications)
        out.append(Default(TOP, justs, conj(d.consequent for d in rs.subset)))
    return DefaultTheory(tuple(dict.fromkeys(out)), dt.world)


def normalize_hat(dt: DefaultTheory) -> DefaultTheory:
    """Replace every ``:G / AND(G)`` by the normal ``:AND(G) / AND(G)``."""
    offenders = [
        (i, d)
        for i, d in enumerate(dt.defaults)
        if not (d.prerequisite_free and equivalent_formulas(d.consequent, conj(d.justifications)))
    ]
    if offenders:
        raise NotNormalizableError(offenders)
    out = [normal_default(conj(d.justifications)) for d in dt.defaults]
    return DefaultTheory(tuple(dict.fromkeys(out)), dt.world)


def blocker(f: Formula) -> Default:
    """``f : / false``: kills every consistent extension containing ``f``."""
    return Default(f, (), BOTTOM)


def eliminate_formula(dt: DefaultTheory, f: Formula) -> DefaultTheory:
    return DefaultTheory(dt.defaults + (blocker(f),), dt.world)


def find_ssdr(fam: Sequence[FinTheory]) -> Optional[dict[int, Formula]]:
    """A formula per member that no other member contains, if one is found.

    Candidates for a member are its generators and their conjunction; a
    ``None`` result means nothing was found there, not that none exists.
    """
    members = list(fam)
    reps: dict[int, Formula] = {}
    for i, t in enumerate(members):
        candidates = formula_set(t.generators + (t.conjunction(),))
        for phi in candidates:
            if all(not other.entails(phi) for j, other in enumerate(members) if j != i):
                reps[i] = phi
                break
        else:
            return None
    return reps


def represent_subfamily(
    dt: DefaultTheory, fam: Sequence[FinTheory], keep: Iterable[int]
) -> DefaultTheory:
    """Theory whose extensions are the members of ``fam`` indexed by ``keep``."""
    members = list(fam.members if isinstance(fam, TheoryFamily) else fam)
    keep = set(keep)
    bad = [i for i in keep if not 0 <= i < len(members)]
    if bad:
        raise IndexError(f"keep indices out of range: {sorted(bad)}")
    if not enumerate_extensions(dt).same_as(members):
        raise NotRepresentingError("the family is not the extension set of the theory")
    if any(t.inconsistent for t in members):
        if keep != set(range(len(members))):
            raise InconsistentMemberError(
                "the family is {L}; the only representable subfamily is itself"
            )
        return dt
    reps = find_ssdr(members)
    if reps is None:
        raise NoSSDRError("no distinct representatives found for the family")
    extra = tuple(blocker(reps[i]) for i in range(len(members)) if i not in keep)
    return DefaultTheory(dt.defaults + extra, dt.world)


def _require_normal(dt: DefaultTheory) -> None:
    offenders = [(i, d) for i, d in enumerate(dt.defaults) if not d.normal]
    if offenders:
        raise NotNormalError(offenders)


def normal_prereq_free(dt: DefaultTheory) -> DefaultTheory:
    """Normal, prerequisite-free equivalent of a normal theory."""
    _require_normal(dt)
    # conjoining justifications can make them unsatisfiable
    return prune_blocked(normalize_hat(prereq_free(dt)))


def to_empty_w(dt: DefaultTheory) -> DefaultTheory:
    """Equivalent normal prerequisite-free theory with an empty world.

    Needs a normal theory with a satisfiable (finite) world.
    """
    _require_normal(dt)
    if not satisfiable(dt.world):
        raise UnsatisfiableWorldError("W is unsatisfiable; no theory with empty W is equivalent")
    pf = normal_prereq_free(dt)
    omega = conj(dt.world)
    if not any(satisfiable((omega, j)) for d in pf.defaults for j in d.justifications):
        return DefaultTheory((normal_default(omega),), ())
    if omega == TOP:
        return DefaultTheory(pf.defaults, ())
    out = [normal_default(conj((d.consequent, omega))) for d in pf.defaults]
    return prune_blocked(DefaultTheory(tuple(dict.fromkeys(out)), ()))
