"""Propositional formulas and the theories they generate."""
from .formula import (
    BOTTOM,
    RESERVED_PREFIX,
    TOP,
    And,
    Bottom,
    Formula,
    Iff,
    Implies,
    Not,
    Or,
    Top,
    Var,
    atom,
    atoms,
    atoms_of,
    conj,
    disj,
    evaluate,
    formula_set,
    simplify,
    substitute,
)
from .parser import ParseError, parse_formula
from .printer import to_text
from .sat import entails, equivalent_formulas, find_model, satisfiable
from .theory import (
    INCONSISTENT,
    Cn,
    FinTheory,
    contains,
    dedup_theories,
    forget,
    project,
    same_theories,
    theory_equal,
)

__all__ = [
    "BOTTOM",
    "INCONSISTENT",
    "RESERVED_PREFIX",
    "TOP",
    "And",
    "Bottom",
    "Cn",
    "FinTheory",
    "Formula",
    "Iff",
    "Implies",
    "Not",
    "Or",
    "ParseError",
    "Top",
    "Var",
    "atom",
    "atoms",
    "atoms_of",
    "conj",
    "contains",
    "dedup_theories",
    "disj",
    "entails",
    "equivalent_formulas",
    "evaluate",
    "find_model",
    "forget",
    "formula_set",
    "parse_formula",
    "project",
    "same_theories",
    "satisfiable",
    "simplify",
    "substitute",
    "theory_equal",
    "to_text",
]
