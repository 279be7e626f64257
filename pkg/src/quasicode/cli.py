"""Command-line front end.

Every subcommand builds an algebra (preset name or spec file), usually a code
on top of it, runs one query or certificate, and prints a line-oriented
report.  Reports are deterministic for a fixed command line: seeds default to
0, iteration orders are fixed, and no timestamps or paths appear, so reruns
are byte-identical and diffs are meaningful.

Exit codes: 0 when the verdict matches the claim, 1 when a counterexample or
violation was found, 2 on usage errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .algebra import axiom_audit, resolve_algebra, solve_right
from .equivalence import (
    BasisChange,
    ChoiceFunction,
    basis_change_isomorphism,
    choice_isomorphism,
    conjugate_code_check,
    distinguish_invariant,
    nonassoc_witness,
    right_linearity_witness,
    support_witness,
)
from .errors import (
    DomainError,
    InconsistencyError,
    InvalidIsometryError,
    InvalidParameterError,
    SpecFormatError,
    UnsupportedError,
)
from .finvec import Column, FinVec
from .hamming import HammingCode
from .reconstruct import membership_by_reduction, module_axiom_check

USAGE_ERRORS = (
    SpecFormatError,
    InvalidParameterError,
    InvalidIsometryError,
    UnsupportedError,
    DomainError,
    OSError,
)


def _build_algebra(args):
    return resolve_algebra(args.algebra)


def _build_code(args, algebra) -> HammingCode:
    if args.m is None:
        raise InvalidParameterError("this command needs --m")
    pivots = None
    if getattr(args, "pivots", None):
        pivots = [algebra.parse(p.strip()) for p in args.pivots.split(",")]
    return HammingCode(algebra, args.m, pivots)


def _read_vector(args, code) -> FinVec:
    if not args.infile:
        raise InvalidParameterError("this command needs --in with a vector file")
    text = Path(args.infile).read_text()
    return FinVec.parse(text, code.algebra, code.m)


def _preamble(args) -> list[str]:
    return [f"command: {args.command}", f"seed: {args.seed}", f"budget: {args.budget}"]


def _algebra_line(algebra) -> str:
    return f"algebra: {algebra.label} (digest {algebra.digest()})"


def _bool(b: bool) -> str:
    return "true" if b else "false"


def _parse_choice(text: str | None, algebra) -> ChoiceFunction:
    mapping = {}
    if text:
        for part in text.split(";"):
            part = part.strip()
            if not part:
                continue
            if "=" not in part:
                raise SpecFormatError(
                    f"choice entry {part!r}: expected '<column>=<scalar>'"
                )
            col_text, val_text = part.split("=", 1)
            col = Column.parse(col_text.strip(), algebra)
            mapping[col] = algebra.parse(val_text.strip())
    return ChoiceFunction(algebra, mapping)


def _parse_ops(text: str | None, algebra) -> list[tuple]:
    if not text:
        raise InvalidParameterError("this command needs --ops, e.g. 'swap:0,1;shear:0,1,1'")
    ops = []
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        if ":" not in part:
            raise SpecFormatError(f"basis op {part!r}: expected 'name:args'")
        name, argstr = part.split(":", 1)
        name = name.strip()
        raw = [a.strip() for a in argstr.split(",")]
        try:
            if name == "swap":
                ops.append(("swap", int(raw[0]), int(raw[1])))
            elif name == "scale":
                ops.append(("scale", int(raw[0]), algebra.parse(raw[1])))
            elif name == "shear":
                ops.append(("shear", int(raw[0]), int(raw[1]), algebra.parse(raw[2])))
            else:
                raise SpecFormatError(f"unknown basis op {name!r}")
        except (IndexError, ValueError) as exc:
            raise SpecFormatError(f"basis op {part!r}: {exc}") from exc
    return ops


# -- subcommands -----------------------------------------------------------------


def cmd_audit(args):
    algebra = _build_algebra(args)
    mode = args.mode or ("exhaustive" if algebra.is_finite else "sampled")
    if mode not in ("exhaustive", "sampled"):
        raise InvalidParameterError(f"audit mode must be exhaustive or sampled, got {mode!r}")
    report = axiom_audit(algebra, mode=mode, trials=args.trials or 2000, seed=args.seed)
    return _preamble(args) + report.lines(), 0


def cmd_columns(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    cols = code.enumerate_columns()
    lines = _preamble(args) + [_algebra_line(algebra), f"m: {code.m}", f"columns: {len(cols)}"]
    lines += [str(c) for c in cols]
    return lines, 0


def cmd_syndrome(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    x = _read_vector(args, code)
    s = code.syndrome(x)
    lines = _preamble(args) + [
        _algebra_line(algebra),
        f"m: {code.m}",
        f"weight: {x.norm()}",
        f"syndrome: {s}",
        f"in code: {_bool(s.is_zero())}",
    ]
    return lines, 0


def cmd_decode(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    y = _read_vector(args, code)
    c = code.decode(y)
    lines = ["# " + t for t in _preamble(args)]
    lines.append("# " + _algebra_line(algebra))
    lines.append(f"# changed: {_bool(c != y)}")
    lines.append(f"# codeword weight: {c.norm()}")
    if c.is_zero():
        lines.append("# zero vector")
    else:
        lines += c.format().splitlines()
    return lines, 0


def cmd_verify_perfect(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    report = code.verify_perfect(
        mode=args.mode or "auto",
        budget=args.budget,
        trials=args.trials or 10000,
        seed=args.seed,
    )
    return _preamble(args) + report.lines(), 0 if report.verdict else 1


def cmd_generators(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    gens = code.weight3_generators()
    lines = _preamble(args) + [_algebra_line(algebra), f"m: {code.m}", f"generators: {len(gens)}"]
    lines += [repr(g) for g in gens]
    return lines, 0


def cmd_reconstruct_check(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    report = module_axiom_check(
        code,
        mode=args.mode or "auto",
        trials=args.trials or 1000,
        seed=args.seed,
        budget=args.budget,
    )
    return _preamble(args) + report.lines(), 0 if report.verdict else 1


def cmd_membership_reduce(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    x = _read_vector(args, code)
    reduced = membership_by_reduction(code, x)
    direct = code.contains(x)
    lines = _preamble(args) + [
        _algebra_line(algebra),
        f"m: {code.m}",
        f"weight: {x.norm()}",
        f"membership by reduction: {_bool(reduced)}",
        f"membership by syndrome: {_bool(direct)}",
        f"agreement: {_bool(reduced == direct)}",
    ]
    return lines, 0 if reduced == direct else 1


def cmd_choice_iso(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    e1 = _parse_choice(args.e1, algebra)
    e2 = _parse_choice(args.e2, algebra)
    iso = choice_isomorphism(code, e1, e2)
    lines = _preamble(args) + [_algebra_line(algebra), f"m: {code.m}", "pi: identity"]
    lines.append(f"default multiplier: {solve_right(e2.default, e1.default)}")
    for col in sorted(iso.alpha, key=Column.sort_key):
        lines.append(f"alpha {col}: {iso.alpha[col]}")
    lines.append("verdict: generators map into the target code")
    return lines, 0


def cmd_basis_iso(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    ops = _parse_ops(args.ops, algebra)
    change = BasisChange.from_ops(algebra, code.m, ops)
    iso = basis_change_isomorphism(code, change)
    lines = _preamble(args) + [
        _algebra_line(algebra),
        f"m: {code.m}",
        f"matrix: {change}",
        f"built from: {', '.join(change.provenance)}",
    ]
    failures = []
    if algebra.is_finite:
        for col in code.enumerate_columns():
            lines.append(f"pi {col} -> {iso.pi[col]}  alpha: {iso.alpha[col]}")
        gens = code.weight3_generators()
        for g in gens:
            if not code.contains(iso.apply(g)):
                failures.append(f"image of {g!r} leaves the code")
        lines.append(f"generator images checked: {len(gens)}")
    else:
        import random

        rng = random.Random(args.seed)
        trials = args.trials or 50
        for _ in range(trials):
            g = code.random_codeword(rng)
            if not code.contains(iso.apply(g)):
                failures.append(f"image of {g!r} leaves the code")
        lines.append(f"sampled codeword images checked: {trials}")
    for f in failures[:5]:
        lines.append(f"failure: {f}")
    lines.append(
        "verdict: " + ("code mapped onto itself" if not failures else "IMAGE ESCAPES THE CODE")
    )
    return lines, 0 if not failures else 1


def cmd_support_witness(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    if not args.columns_file:
        raise InvalidParameterError("this command needs --columns-file with one column per line")
    cols = []
    for raw in Path(args.columns_file).read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        cols.append(Column.parse(line, algebra))
    witness = support_witness(code, cols, budget=args.budget)
    lines = _preamble(args) + [_algebra_line(algebra), f"m: {code.m}", f"columns: {len(cols)}"]
    lines += [str(c) for c in sorted(cols)]
    if witness is None:
        lines.append("witness: none (columns are independent)")
    else:
        lines.append(f"witness: {witness!r}")
        lines.append(f"witness weight: {witness.norm()}")
    return lines, 0


def cmd_distinguish(args):
    algebra = _build_algebra(args)
    code_a = _build_code(args, algebra)
    if args.m2 is None:
        raise InvalidParameterError("this command needs --m2 for the larger code")
    code_b = HammingCode(algebra, args.m2, None)
    report = distinguish_invariant(
        code_a, code_b, samples=args.samples or 100, seed=args.seed, budget=args.budget
    )
    return _preamble(args) + report.lines(), 0 if report.verdict else 1


def cmd_nonassoc_witness(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    report = nonassoc_witness(code)
    return _preamble(args) + report.lines(), 0 if report.verdict else 1


def cmd_right_linearity(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    report = right_linearity_witness(code, trials=args.trials or 200, seed=args.seed)
    return _preamble(args) + report.lines(), 0 if report.verdict else 1


def cmd_conjugate_check(args):
    algebra = _build_algebra(args)
    code = _build_code(args, algebra)
    report = conjugate_code_check(code, samples=args.samples or 1000, seed=args.seed)
    return _preamble(args) + report.lines(), 0 if report.verdict else 1


_COMMANDS = {
    "audit": cmd_audit,
    "columns": cmd_columns,
    "syndrome": cmd_syndrome,
    "decode": cmd_decode,
    "verify-perfect": cmd_verify_perfect,
    "generators": cmd_generators,
    "reconstruct-check": cmd_reconstruct_check,
    "membership-reduce": cmd_membership_reduce,
    "choice-iso": cmd_choice_iso,
    "basis-iso": cmd_basis_iso,
    "support-witness": cmd_support_witness,
    "distinguish": cmd_distinguish,
    "nonassoc-witness": cmd_nonassoc_witness,
    "right-linearity": cmd_right_linearity,
    "conjugate-check": cmd_conjugate_check,
}


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasicode",
        description="Perfect single-error-correcting codes over exact algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in _COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--algebra", required=True, help="preset name or spec file path")
        p.add_argument("--m", type=int, default=None, help="number of check coordinates")
        p.add_argument("--m2", type=int, default=None, help="check coordinates of the larger code")
        p.add_argument("--pivots", default=None, help="comma-separated pivot scalars, one per coordinate")
        p.add_argument("--mode", default=None, help="exhaustive / structural / sampled / auto")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--budget", type=int, default=2**20)
        p.add_argument("--trials", type=int, default=None)
        p.add_argument("--samples", type=int, default=None)
        p.add_argument("--in", dest="infile", default=None, help="input vector file")
        p.add_argument("--out", default=None, help="write the report here instead of stdout")
        p.add_argument("--jobs", type=int, default=1, help="accepted for interface stability; runs sequentially")
        p.add_argument("--e1", default=None, help="choice function, e.g. '(0,1)=2;(1,1)=2'")
        p.add_argument("--e2", default=None, help="choice function, e.g. '(0,1)=2'")
        p.add_argument("--ops", default=None, help="basis operations, e.g. 'swap:0,1;scale:1,2;shear:0,1,1'")
        p.add_argument("--columns-file", dest="columns_file", default=None, help="file with one column per line")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = _COMMANDS[args.command]
    try:
        lines, status = handler(args)
    except InconsistencyError as exc:
        print(f"inconsistency: {exc}", file=sys.stderr)
        return 1
    except USAGE_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
