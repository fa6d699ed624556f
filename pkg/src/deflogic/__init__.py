"""Propositional default logic over finitely generated theories.

Extensions are computed exactly; the submodules add rewrites that keep
them and constructions that realize a given family of theories."""
from .defaults import (
    Default,
    DefaultTheory,
    ExtensionSet,
    MonotoneRule,
    enumerate_extensions,
    equivalent,
    generating_defaults,
    is_applicable,
    is_extension,
    monotone_closure,
    normal_default,
    reduct,
    semi_equivalent,
)
from .logic import Cn, FinTheory, parse_formula, theory_equal, to_text

__version__ = "0.1.0"
