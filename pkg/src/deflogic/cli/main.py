"""``deflogic`` command line.

Exit codes: 0 success, 1 semantic negative (no extensions, not
equivalent, not an extension, family not representable, precondition of a
construction not met, a verification failed), 2 usage, parse or I/O error
or a search over the --max-defaults limit.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Callable, Sequence

from .. import cwa, represent, transform
from ..defaults import (
    DefaultTheory,
    ExtensionSet,
    enumerate_extensions,
    equivalent,
    generating_defaults,
    is_extension,
    search_exponent,
)
from ..errors import DefaultLogicError, NotNormalizableError, TooManyCandidatesError
from ..logic import FinTheory, ParseError, Var, contains, parse_formula, satisfiable, theory_equal, to_text
from .files import FileFormatError, dump_theory, load_family, load_theory

OK, NEGATIVE, ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def theory_json(dt: DefaultTheory) -> dict:
    return {
        "world": [to_text(f) for f in dt.world],
        "defaults": [
            {
                "prereq": to_text(d.prereq),
                "justifications": [to_text(j) for j in d.justifications],
                "consequent": to_text(d.consequent),
            }
            for d in dt.defaults
        ],
    }


def theories_json(ts) -> list[dict]:
    return [
        {"generators": [to_text(g) for g in t.generators], "consistent": not t.inconsistent}
        for t in ts
    ]


def format_theories(ts, label: str) -> str:
    ts = list(ts)
    noun = label if len(ts) == 1 else label + "s"
    lines = [f"{len(ts)} {noun}"]
    lines += [f"{label} {i}: {t}" for i, t in enumerate(ts, 1)]
    return "\n".join(lines) + "\n"


class Runner:
    def __init__(self, args: argparse.Namespace, out, err):
        self.args, self.out, self.err = args, out, err

    # helpers

    def emit(self, text: str, payload: dict) -> None:
        if self.args.json:
            self.out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
        else:
            self.out.write(text)

    def guard(self, dt: DefaultTheory, subsets: bool = False) -> None:
        limit = self.args.max_defaults
        need = len(dt.defaults) if subsets else search_exponent(dt)
        if need > limit:
            raise TooManyCandidatesError(
                f"{need} defaults would need 2^{need} candidates; raise --max-defaults (now {limit})"
            )

    def extensions(self, dt: DefaultTheory) -> ExtensionSet:
        self.guard(dt)
        return enumerate_extensions(dt)

    def write_theory(self, dt: DefaultTheory, command: str, header: str = "") -> int:
        text = header + dump_theory(dt)
        target = getattr(self.args, "output", None)
        if target:
            Path(target).write_text(text, encoding="utf-8")
            if self.args.json:
                self.emit("", {"command": command, "theory": theory_json(dt), "output": target})
        else:
            self.emit(text, {"command": command, "theory": theory_json(dt)})
        return OK

    # commands

    def cmd_extensions(self) -> int:
        exts = self.extensions(load_theory(self.args.file))
        self.emit(
            format_theories(exts, "extension"),
            {"command": "extensions", "extensions": theories_json(exts)},
        )
        return OK if len(exts) else NEGATIVE

    def cmd_check(self) -> int:
        dt = load_theory(self.args.file)
        gens = tuple(parse_formula(p) for p in self.args.theory.split(";") if p.strip())
        s = FinTheory(gens)
        ok = is_extension(dt, s)
        self.emit(
            ("extension" if ok else "not an extension") + "\n",
            {"command": "check", "theory": [to_text(g) for g in s.generators], "extension": ok},
        )
        return OK if ok else NEGATIVE

    def cmd_equiv(self) -> int:
        a, b = load_theory(self.args.file), load_theory(self.args.other)
        self.guard(a)
        self.guard(b)
        ok = equivalent(a, b)
        self.emit(
            ("equivalent" if ok else "not equivalent") + "\n",
            {"command": "equiv", "equivalent": ok},
        )
        return OK if ok else NEGATIVE

    def cmd_prereq_free(self) -> int:
        dt = load_theory(self.args.file)
        self.guard(dt, subsets=True)
        return self.write_theory(transform.prereq_free(dt), "prereq-free")

    def cmd_normalize(self) -> int:
        dt = load_theory(self.args.file)
        try:
            result = transform.normalize_hat(dt)
        except NotNormalizableError:
            if not dt.normal:
                raise
            self.guard(dt, subsets=True)
            result = transform.normal_prereq_free(dt)
        return self.write_theory(result, "normalize")

    def cmd_eliminate(self) -> int:
        dt = load_theory(self.args.file)
        return self.write_theory(
            transform.eliminate_formula(dt, parse_formula(self.args.formula)), "eliminate"
        )

    def cmd_subfamily(self) -> int:
        dt = load_theory(self.args.file)
        fam = load_family(self.args.family)
        keep = parse_indices(self.args.keep, len(fam))
        self.guard(dt)
        return self.write_theory(transform.represent_subfamily(dt, fam, keep), "subfamily")

    def cmd_represent(self) -> int:
        fam = load_family(self.args.family)
        return self.write_theory(represent.construct_representing(fam), "represent")

    def cmd_represent_normal(self) -> int:
        w = formulas_only(self.args.w)
        psi = formulas_only(self.args.psi)
        return self.write_theory(
            represent.construct_normal_representing(w, psi), "represent-normal"
        )

    def cmd_to_empty_w(self) -> int:
        dt = load_theory(self.args.file)
        self.guard(dt, subsets=True)
        return self.write_theory(transform.to_empty_w(dt), "to-empty-w")

    def cmd_cwa(self) -> int:
        dt = load_theory(self.args.file)
        self.guard(dt, subsets=True)
        tr = cwa.cwa_translate(dt)
        header = "".join(
            f"# {name} stands for !({to_text(psi)})\n" for psi, name in tr.fresh_atoms.items()
        )
        return self.write_theory(tr.result, "cwa", header)

    def cmd_comp(self) -> int:
        dt = load_theory(self.args.file)
        atoms = parse_atoms(self.args.atoms)
        built = DefaultTheory(tuple(represent.comp_defaults(atoms)), dt.world)
        return self._construction(
            "comp", built, lambda: list(represent.minimal_p_complete(dt.world, atoms))
        )

    def cmd_tree(self) -> int:
        dt = load_theory(self.args.file)
        atoms = parse_atoms(self.args.atoms)
        built = represent.tree_defaults(dt.world, atoms)
        return self._construction(
            "tree", built, lambda: represent.full_branches(dt.world, atoms)
        )

    def _construction(self, command: str, built: DefaultTheory, expected: Callable) -> int:
        exts = self.extensions(built)
        ok = exts.same_as(expected())
        if self.args.output:
            Path(self.args.output).write_text(dump_theory(built), encoding="utf-8")
        text = format_theories(exts, "extension")
        text += ("matches" if ok else "DOES NOT match") + " the brute-force family\n"
        self.emit(
            text,
            {
                "command": command,
                "theory": theory_json(built),
                "extensions": theories_json(exts),
                "matches": ok,
            },
        )
        return OK if ok else NEGATIVE

    def cmd_verify(self) -> int:
        dt = load_theory(self.args.file)
        self.guard(dt, subsets=True)
        results = verify_theory(dt)
        lines = []
        for name, status, detail in results:
            lines.append(f"{status} {name}" + (f" ({detail})" if detail else "") + "\n")
        self.emit(
            "".join(lines),
            {
                "command": "verify",
                "checks": [{"name": n, "status": s, "detail": d} for n, s, d in results],
            },
        )
        return NEGATIVE if any(s == "FAIL" for _, s, _ in results) else OK


def parse_indices(text: str, size: int) -> list[int]:
    """1-based comma list -> 0-based indices."""
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if not piece.isdigit() or not 1 <= int(piece) <= size:
            raise UsageError(f"--keep: {piece!r} is not a member number between 1 and {size}")
        out.append(int(piece) - 1)
    return out


def parse_atoms(text: str) -> list[str]:
    names = [a.strip() for a in text.split(",") if a.strip()]
    if not names:
        raise UsageError("--atoms: at least one atom is required")
    for n in names:
        try:
            parsed = parse_formula(n)
        except ParseError:
            parsed = None
        if not isinstance(parsed, Var):
            raise UsageError(f"--atoms: {n!r} is not an atom name")
    return names


def formulas_only(path: str) -> tuple:
    dt = load_theory(path)
    if dt.defaults:
        raise UsageError(f"{path}: expected only 'w' statements")
    return dt.world


def verify_theory(dt: DefaultTheory) -> list[tuple[str, str, str]]:
    """Run every property that applies to ``dt``; (name, PASS/FAIL/SKIP, detail)."""
    results = []

    def record(name: str, ok: bool, detail: str = "") -> None:
        results.append((name, "PASS" if ok else "FAIL", detail))

    def skip(name: str, why: str) -> None:
        results.append((name, "SKIP", why))

    exts = list(enumerate_extensions(dt))
    record("extensions-are-fixpoints", all(is_extension(dt, e) for e in exts))
    record(
        "antichain",
        all(not contains(b, a) for a in exts for b in exts if a is not b),
    )
    record(
        "generated-by-consequents",
        all(
            theory_equal(
                e, FinTheory(dt.world + tuple(d.consequent for d in generating_defaults(dt, e)))
            )
            or e.inconsistent
            for e in exts
        ),
    )
    record("prereq-free-equivalent", equivalent(dt, transform.prereq_free(dt)))

    atoms = sorted(dt.atoms())
    elim_ok = True
    for name in atoms:
        f = Var(name)
        got = [e for e in enumerate_extensions(transform.eliminate_formula(dt, f)) if not e.inconsistent]
        want = [e for e in exts if not e.inconsistent and not e.entails(f)]
        elim_ok &= ExtensionSet(tuple(got)).same_as(want)
    record("eliminate-atoms", elim_ok, f"{len(atoms)} atom" + ("" if len(atoms) == 1 else "s"))

    consistent = [e for e in exts if not e.inconsistent]
    if len(exts) >= 2 and len(consistent) == len(exts):
        reps = transform.find_ssdr(exts)
        if reps is None:
            skip("subfamily", "no distinct representatives found")
        else:
            ok = True
            for i in range(len(exts)):
                sub = transform.represent_subfamily(dt, exts, [i])
                ok &= enumerate_extensions(sub).same_as([exts[i]])
            record("subfamily", ok, f"{len(exts)} singletons")
    else:
        skip("subfamily", "needs at least two consistent extensions")

    if not dt.normal:
        for name in ("normal-prereq-free", "normal-pairwise-inconsistent", "empty-world", "cwa"):
            skip(name, "theory is not normal")
        return results
    npf = transform.normal_prereq_free(dt)
    record("normal-prereq-free", npf.normal and equivalent(dt, npf))
    record(
        "normal-pairwise-inconsistent",
        all(
            not satisfiable(a.generators + b.generators)
            for i, a in enumerate(exts)
            for b in exts[i + 1 :]
        ),
    )
    if satisfiable(dt.world):
        out = transform.to_empty_w(dt)
        record("empty-world", not out.world and equivalent(dt, out))
    else:
        skip("empty-world", "W is unsatisfiable")
    tr = cwa.cwa_translate(dt)
    record("cwa", cwa.verify_cwa(dt, tr), f"{len(tr.fresh_atoms)} fresh atoms")
    return results


def build_parser() -> argparse.ArgumentParser:
    def add_globals(p, default):
        # accepted before or after the subcommand
        p.add_argument(
            "--json", action="store_true", default=default(False), help="machine-readable output"
        )
        p.add_argument(
            "--max-defaults",
            type=int,
            default=default(16),
            metavar="N",
            help="refuse searches over more than 2^N candidates (default 16)",
        )

    parser = argparse.ArgumentParser(
        prog="deflogic", description="Propositional default logic toolkit."
    )
    add_globals(parser, lambda v: v)
    common = argparse.ArgumentParser(add_help=False)
    add_globals(common, lambda v: argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, help: str, *, output=False):
        p = sub.add_parser(name, help=help, parents=[common])
        if output:
            p.add_argument("-o", "--output", metavar="OUT", help="write the theory here")
        return p

    p = add("extensions", "list the extensions of a theory")
    p.add_argument("file")
    p = add("check", "test whether Cn(formulas) is an extension")
    p.add_argument("file")
    p.add_argument("--theory", required=True, help="generators separated by ';'")
    p = add("equiv", "compare the extension sets of two theories")
    p.add_argument("file")
    p.add_argument("other")
    p = add("prereq-free", "equivalent prerequisite-free theory", output=True)
    p.add_argument("file")
    p = add("normalize", "turn :G/AND(G) defaults into normal ones", output=True)
    p.add_argument("file")
    p = add("eliminate", "drop the extensions containing a formula", output=True)
    p.add_argument("file")
    p.add_argument("--formula", required=True)
    p = add("subfamily", "keep only some extensions of a theory", output=True)
    p.add_argument("file")
    p.add_argument("--family", required=True, help="family file listing the extensions")
    p.add_argument("--keep", required=True, help="1-based member numbers, e.g. 1,3")
    p = add("represent", "theory whose extensions are a given family", output=True)
    p.add_argument("family")
    p = add("represent-normal", "normal theory with maximal consistent subsets", output=True)
    p.add_argument("--w", required=True, metavar="FILE", help="file of 'w' statements")
    p.add_argument("--psi", required=True, metavar="FILE", help="file of 'w' statements")
    p = add("to-empty-w", "equivalent normal theory with empty world", output=True)
    p.add_argument("file")
    p = add("cwa", "closed-world translation of a normal theory", output=True)
    p.add_argument("file")
    p = add("comp", "extensions of the P-completing defaults over W", output=True)
    p.add_argument("file")
    p.add_argument("--atoms", required=True)
    p = add("tree", "extensions of the sign-prefix tree defaults over W", output=True)
    p.add_argument("file")
    p.add_argument("--atoms", required=True)
    p = add("verify", "run every applicable property check on a theory")
    p.add_argument("file")
    return parser


def main(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    runner = Runner(args, out, err)
    handler = getattr(runner, "cmd_" + args.command.replace("-", "_"))
    try:
        return handler()
    except (FileFormatError, ParseError, UsageError, TooManyCandidatesError) as e:
        err.write(f"deflogic: error: {e}\n")
        return ERROR
    except OSError as e:
        err.write(f"deflogic: error: {e.filename or ''}: {e.strerror}\n")
        return ERROR
    except DefaultLogicError as e:
        err.write(f"deflogic: {e}\n")
        return NEGATIVE
    except ValueError as e:
        err.write(f"deflogic: error: {e}\n")
        return ERROR
