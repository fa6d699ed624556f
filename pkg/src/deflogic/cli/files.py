"""Reading and writing theory (``.dlt``) and family (``.dlf``) files.

Theory files hold one statement per line, each ending in ``.``::

    w p | q .              # world formula
    d a : b, c / e .       # default a:{b,c}/e
    d : !p / q .           # prerequisite-free
    d a : / e .            # no justifications

Family files hold ``theory { f . g . }`` blocks, one per member.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path

from ..defaults import Default, DefaultTheory
from ..logic import TOP, FinTheory, Formula, ParseError, parse_formula, theory_equal, to_text


class FileFormatError(ValueError):
    def __init__(self, source: str, line: int, col: int, message: str):
        super().__init__(f"{source}:{line}:{col}: {message}")
        self.source, self.line, self.col, self.message = source, line, col, message


Location = tuple[int, int]


@dataclass(frozen=True)
class TheoryDocument:
    world_lines: tuple[tuple[Formula, Location], ...]
    default_lines: tuple[tuple[Default, Location], ...]

    def theory(self) -> DefaultTheory:
        return DefaultTheory(
            tuple(d for d, _ in self.default_lines), tuple(f for f, _ in self.world_lines)
        )


def _formula_at(text: str, start: int, source: str, lineno: int, what: str) -> Formula:
    """Parse ``text`` located at 0-based column ``start`` of line ``lineno``."""
    if not text.strip():
        raise FileFormatError(source, lineno, start + 1, f"missing {what}")
    try:
        return parse_formula(text)
    except ParseError as e:
        chars = len(text.encode("utf-8")[: e.offset].decode("utf-8", errors="ignore"))
        raise FileFormatError(source, lineno, start + chars + 1, e.message) from None


_STATEMENT = re.compile(r"\s*([wd])(?=[\s:])")


def parse_theory_document(text: str, source: str = "<string>") -> TheoryDocument:
    world, defaults = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        m = _STATEMENT.match(line)
        if m is None:
            col = len(line) - len(line.lstrip()) + 1
            raise FileFormatError(source, lineno, col, "expected 'w' or 'd' statement")
        if not line.endswith("."):
            raise FileFormatError(source, lineno, len(line) + 1, "statement must end with '.'")
        body_start, body_end = m.end(), len(line) - 1
        body = line[body_start:body_end]
        loc = (lineno, m.start(1) + 1)
        if m.group(1) == "w":
            world.append((_formula_at(body, body_start, source, lineno, "formula"), loc))
            continue
        colon = body.find(":")
        slash = body.find("/", colon + 1)
        if colon < 0:
            lead = len(body) - len(body.lstrip())
            raise FileFormatError(source, lineno, body_start + lead + 1, "default needs ':'")
        if slash < 0:
            raise FileFormatError(source, lineno, body_start + colon + 2, "default needs '/'")
        pre_text = body[:colon]
        prereq = (
            TOP
            if not pre_text.strip()
            else _formula_at(pre_text, body_start, source, lineno, "prerequisite")
        )
        justs = []
        just_text = body[colon + 1 : slash]
        if just_text.strip():
            pos = colon + 1
            for piece in just_text.split(","):
                justs.append(_formula_at(piece, body_start + pos, source, lineno, "justification"))
                pos += len(piece) + 1
        consequent = _formula_at(
            body[slash + 1 :], body_start + slash + 1, source, lineno, "consequent"
        )
        defaults.append((Default(prereq, tuple(justs), consequent), loc))
    return TheoryDocument(tuple(world), tuple(defaults))


def parse_theory(text: str, source: str = "<string>") -> DefaultTheory:
    return parse_theory_document(text, source).theory()


def load_theory(path: str | Path) -> DefaultTheory:
    path = Path(path)
    return parse_theory(path.read_text(encoding="utf-8"), str(path))


def dump_theory(dt: DefaultTheory) -> str:
    lines = [f"w {to_text(f)} ." for f in dt.world]
    lines += [f"d {d} ." for d in dt.defaults]
    return "".join(line + "\n" for line in lines)


def _strip_comments(text: str) -> str:
    # keep offsets intact so line/column reporting stays exact
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group()), text)


def _line_col(text: str, pos: int) -> Location:
    line = text.count("\n", 0, pos) + 1
    return line, pos - (text.rfind("\n", 0, pos) + 1) + 1


def parse_family(text: str, source: str = "<string>") -> list[FinTheory]:
    clean = _strip_comments(text)
    pos, blocks, starts = 0, [], []

    def fail(at: int, message: str):
        line, col = _line_col(clean, at)
        raise FileFormatError(source, line, col, message)

    def skip_ws(at: int) -> int:
        while at < len(clean) and clean[at].isspace():
            at += 1
        return at

    while True:
        pos = skip_ws(pos)
        if pos >= len(clean):
            break
        if not re.match(r"theory\b", clean[pos:]):
            fail(pos, "expected 'theory'")
        starts.append(pos)
        pos = skip_ws(pos + len("theory"))
        if not clean.startswith("{", pos):
            fail(pos, "expected '{'")
        pos += 1
        gens = []
        while True:
            pos = skip_ws(pos)
            if pos >= len(clean):
                fail(pos, "unterminated theory block")
            if clean[pos] == "}":
                pos += 1
                break
            ends = [i for i in (clean.find(".", pos), clean.find("}", pos)) if i >= 0]
            end = min(ends) if ends else len(clean)
            if end >= len(clean) or clean[end] != ".":
                fail(end, "expected '.' after formula")
            chunk = clean[pos:end]
            if not chunk.strip():
                fail(pos, "missing formula")
            try:
                gens.append(parse_formula(chunk))
            except ParseError as e:
                fail(pos + len(chunk.encode()[: e.offset].decode(errors="ignore")), e.message)
            pos = end + 1
        blocks.append(FinTheory(tuple(gens)))
    if not blocks:
        raise FileFormatError(source, 1, 1, "a family needs at least one theory block")
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            if theory_equal(blocks[i], blocks[j]):
                fail(starts[j], f"theory blocks {i + 1} and {j + 1} denote the same theory")
    return blocks


def load_family(path: str | Path) -> list[FinTheory]:
    path = Path(path)
    return parse_family(path.read_text(encoding="utf-8"), str(path))


def dump_family(members) -> str:
    out = []
    for t in members:
        body = " ".join(f"{to_text(g)} ." for g in t.generators)
        out.append(f"theory {{ {body} }}".replace("{  }", "{ }"))
    return "".join(line + "\n" for line in out)
