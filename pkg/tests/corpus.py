"""Seeded random default theories and families."""
from __future__ import annotations

import random

from deflogic.defaults import Default, DefaultTheory, normal_default
from deflogic.logic import BOTTOM, TOP, And, Iff, Implies, Not, Or, Var

ATOMS = ("p", "q", "r", "s", "t")


def formula(rng: random.Random, atoms, depth: int = 2):
    if depth == 0 or rng.random() < 0.3:
        roll = rng.random()
        if roll < 0.03:
            return TOP
        if roll < 0.06:
            return BOTTOM
        return Var(rng.choice(atoms))
    kind = rng.choice(("not", "and", "or", "and", "or", "implies", "iff"))
    if kind == "not":
        return Not(formula(rng, atoms, depth - 1))
    cls = {"and": And, "or": Or, "implies": Implies, "iff": Iff}[kind]
    return cls(formula(rng, atoms, depth - 1), formula(rng, atoms, depth - 1))


def literal(rng: random.Random, atoms):
    a = Var(rng.choice(atoms))
    return a if rng.random() < 0.5 else Not(a)


def small_formula(rng, atoms):
    return literal(rng, atoms) if rng.random() < 0.5 else formula(rng, atoms, 2)


def default(rng: random.Random, atoms):
    prereq = TOP if rng.random() < 0.4 else small_formula(rng, atoms)
    justs = tuple(small_formula(rng, atoms) for _ in range(rng.randint(0, 2)))
    return Default(prereq, justs, small_formula(rng, atoms))


def theory(rng: random.Random, max_atoms: int = 5, max_defaults: int = 4) -> DefaultTheory:
    atoms = ATOMS[: rng.randint(1, max_atoms)]
    ds = tuple(default(rng, atoms) for _ in range(rng.randint(0, max_defaults)))
    world = tuple(small_formula(rng, atoms) for _ in range(rng.randint(0, 2)))
    return DefaultTheory(ds, world)


def normal_theory(
    rng: random.Random, max_atoms: int = 5, max_defaults: int = 4, satisfiable_world=False
) -> DefaultTheory:
    from deflogic.logic import satisfiable

    atoms = ATOMS[: rng.randint(1, max_atoms)]
    while True:
        ds = []
        for _ in range(rng.randint(0, max_defaults)):
            prereq = TOP if rng.random() < 0.5 else small_formula(rng, atoms)
            ds.append(normal_default(small_formula(rng, atoms), prereq))
        world = tuple(small_formula(rng, atoms) for _ in range(rng.randint(0, 2)))
        if not satisfiable_world or satisfiable(world):
            return DefaultTheory(tuple(ds), world)


def corpus(n: int, seed: int = 0, **kw) -> list[DefaultTheory]:
    rng = random.Random(seed)
    return [theory(rng, **kw) for _ in range(n)]


def normal_corpus(n: int, seed: int = 0, **kw) -> list[DefaultTheory]:
    rng = random.Random(seed)
    return [normal_theory(rng, **kw) for _ in range(n)]
