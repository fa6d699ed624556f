"""Command line interface and file formats."""
from .files import (
    FileFormatError,
    TheoryDocument,
    dump_family,
    dump_theory,
    load_family,
    load_theory,
    parse_family,
    parse_theory,
    parse_theory_document,
)
from .main import main
