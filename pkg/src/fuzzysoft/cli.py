"""Command-line interface.

Subcommands:

    check        verify connective axioms (grid + seeded samples)
    classify     idempotent / nilpotent / zero-divisor scan of a t-norm
    equilibrium  fixed points of a negation, per parameter label
    apply        combine two .fss files under union/intersect/a connective
    dual         print an evaluation table of the order-dual
    eval         run a set-composition script against bound .fss files

Exit codes: 0 success (all axioms pass), 1 axiom violation or a
classification hit forbidden by --expect-none, 2 usage or expression
parse error, 3 I/O or validation error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .analysis import (
    AxiomReport,
    CheckConfig,
    ClassificationReport,
    EquilibriumResult,
    check_implication_axioms,
    check_negation_axioms,
    check_tconorm_axioms,
    check_tnorm_axioms,
    classify_elements,
    find_equilibria,
)
from .connectives import (
    ScalarConnective,
    builtin,
    resolve_connective,
    dual_of,
    lift_negation,
    scalar_from_expression,
)
from .errors import (
    ArityError,
    CandidateEvaluationError,
    CodomainError,
    DocumentError,
    EvalError,
    FuzzySoftError,
    ParseError,
    TagCollisionError,
    UniverseMismatchError,
    UnknownBuiltinError,
    ValidationError,
)
from .fileio import load_fss, save_fss
from .script import eval_script, parse_script
from .sets import apply_connective, intersect_fss, union_fss

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2
EXIT_DATA = 3

_CHECKERS = {
    "tnorm": check_tnorm_axioms,
    "tconorm": check_tconorm_axioms,
    "negation": check_negation_axioms,
    "implication": check_implication_axioms,
}


def _sig(value: float | None) -> str:
    """17 significant digits: witness values re-evaluate exactly."""
    if value is None:
        return "-"
    return f"{value:.17g}"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzysoft",
        description="Parameter-tagged fuzzy connectives: verification, "
                    "classification and set algebra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_candidate(p: argparse.ArgumentParser) -> None:
        group = p.add_mutually_exclusive_group(required=True)
        group.add_argument("--expr", help="candidate as an expression in x and y")
        group.add_argument("--builtin", help="candidate as a builtin name")

    check = sub.add_parser("check", help="verify connective axioms")
    check.add_argument("--kind", required=True,
                       choices=("tnorm", "tconorm", "negation", "implication"))
    add_candidate(check)
    check.add_argument("--grid", type=int, default=64, metavar="N",
                       help="grid steps (default 64)")
    check.add_argument("--samples", type=int, default=10000, metavar="N",
                       help="random samples per axiom (default 10000)")
    check.add_argument("--tol", type=float, default=1e-9, metavar="T",
                       help="absolute tolerance (default 1e-9)")
    check.add_argument("--seed", type=int, default=0, metavar="S",
                       help="sampler seed (default 0)")
    check.add_argument("--format", choices=("text", "json"), default="text")

    classify = sub.add_parser("classify",
                              help="scan for idempotents, nilpotents, zero divisors")
    add_candidate(classify)
    classify.add_argument("--grid", type=int, default=64, metavar="N")
    classify.add_argument("--tol", type=float, default=1e-9, metavar="T")
    classify.add_argument("--expect-none", action="append", default=[],
                          choices=("zero-divisors", "nonzero-nilpotents"),
                          help="exit 1 if the named class is non-empty (repeatable)")
    classify.add_argument("--format", choices=("text", "json"), default="text")

    equilibrium = sub.add_parser("equilibrium",
                                 help="fixed points of a negation per parameter")
    group = equilibrium.add_mutually_exclusive_group(required=True)
    group.add_argument("--expr", help="negation as an expression in x")
    group.add_argument("--builtin", help="negation as a builtin name")
    group.add_argument("--family", action="append",
                       help="per-label negations LABEL=EXPR[,LABEL=EXPR...] (repeatable)")
    equilibrium.add_argument("--params", required=True,
                             help="comma-separated parameter labels")
    equilibrium.add_argument("--tol", type=float, default=1e-9, metavar="T")

    apply_cmd = sub.add_parser("apply", help="combine two fuzzy soft set files")
    apply_cmd.add_argument("--op", required=True,
                           choices=("union", "intersect", "connective"),
                           help="set operation; 'connective' applies --conn pointwise")
    apply_cmd.add_argument("--conn", metavar="NAME-or-EXPR",
                           help="binary connective for --op connective")
    apply_cmd.add_argument("left", metavar="A.fss")
    apply_cmd.add_argument("right", metavar="B.fss")
    apply_cmd.add_argument("-o", "--output", required=True, metavar="OUT.fss")

    dual = sub.add_parser("dual", help="order-dual of a binary connective")
    add_candidate(dual)
    dual.add_argument("--table", type=int, default=5, metavar="N",
                      help="print an NxN evaluation table (default 5)")

    eval_cmd = sub.add_parser("eval", help="run a set-composition script")
    eval_cmd.add_argument("script", metavar="SCRIPT.fss")
    eval_cmd.add_argument("--bind", action="append", default=[], metavar="NAME=FILE.fss",
                          help="bind a free script identifier to a file (repeatable)")
    return parser


def _resolve_candidate(args, arity: int) -> ScalarConnective:
    if args.builtin is not None:
        scalar = builtin(args.builtin)
        if scalar.arity != arity:
            raise ArityError(
                f"builtin {scalar.name!r} has arity {scalar.arity}, "
                f"but this use needs arity {arity}"
            )
        return scalar
    return scalar_from_expression(args.expr, arity=arity)


def _split_family_items(entries: Sequence[str]) -> list[tuple[str, str]]:
    """Split LABEL=EXPR items, honoring commas inside parentheses."""
    items: list[tuple[str, str]] = []
    for entry in entries:
        depth = 0
        current = ""
        parts = []
        for ch in entry:
            if ch == "," and depth == 0:
                parts.append(current)
                current = ""
                continue
            if ch == "(":
                depth += 1
            elif ch == ")":
                depth -= 1
            current += ch
        parts.append(current)
        for part in parts:
            part = part.strip()
            if not part:
                continue
            label, sep, text = part.partition("=")
            if not sep or not label.strip() or not text.strip():
                raise ValueError(f"bad --family item {part!r}, expected LABEL=EXPR")
            items.append((label.strip(), text.strip()))
    return items


# --- report rendering -------------------------------------------------------

def _print_axiom_report(report: AxiomReport) -> None:
    cfg = report.config
    print(f"check: {report.kind} axioms")
    print(f"candidate: {report.candidate}")
    print(
        f"grid steps: {cfg.grid_steps}   samples: {cfg.random_samples}   "
        f"tolerance: {cfg.tolerance:g}   seed: {cfg.seed}"
    )
    for check in report.checks:
        label = f"({check.label})" if check.label != "codomain" else check.label
        where = f" [{check.param}]" if check.param is not None else ""
        head = f"  {label}{where} {check.description}"
        if check.passed:
            print(f"{head}: pass ({check.points} points)")
        else:
            w = check.witness
            args = ", ".join(_sig(a) for a in w.args)
            want = "" if w.want is None else f", want {w.relation} {_sig(w.want)}"
            print(f"{head}: FAIL at ({args}): got {_sig(w.got)}{want}")
    print(f"verdict: {'PASS' if report.passed else 'FAIL'}")


def _print_classification(report: ClassificationReport) -> None:
    print(f"classify: {report.candidate}")
    print(f"grid steps: {report.grid_steps}   tolerance: {report.tolerance:g}")
    print(f"idempotents ({len(report.idempotents)}): "
          f"{' '.join(_sig(v) for v in report.idempotents)}")
    print(f"nilpotents ({len(report.nilpotents)}): "
          f"{' '.join(_sig(v) for v in report.nilpotents)}")
    print(f"zero divisors ({len(report.zero_divisors)}):")
    for z in report.zero_divisors:
        print(f"  {_sig(z.value)} (witness {_sig(z.witness)})")
    confirmed = report.confirmed_nilpotent_zero_divisors
    print(f"non-zero nilpotents confirmed as zero divisors: "
          f"{' '.join(_sig(v) for v in confirmed) if confirmed else 'none'}")


def _print_equilibria(result: EquilibriumResult) -> None:
    print(f"equilibrium search (tolerance {result.tolerance:g})")
    for entry in result.entries:
        if entry.value is None:
            print(f"  {entry.label}: none ({entry.note})")
        elif entry.is_equilibrium:
            print(f"  {entry.label}: {_sig(entry.value)} "
                  f"(residual {_sig(entry.residual)})")
        else:
            print(f"  {entry.label}: no equilibrium; best candidate {_sig(entry.value)} "
                  f"(residual {_sig(entry.residual)})")
    print(f"equilibria found: {result.count} of {len(result.entries)} labels")


# --- subcommand handlers -----------------------------------------------------

def _cmd_check(args) -> int:
    cfg = CheckConfig(grid_steps=args.grid, random_samples=args.samples,
                      tolerance=args.tol, seed=args.seed)
    candidate = _resolve_candidate(args, arity=1 if args.kind == "negation" else 2)
    checker = _CHECKERS[args.kind]
    report = checker(candidate, cfg=cfg) if args.kind != "negation" else checker(
        candidate, labels=None, cfg=cfg)
    if args.format == "json":
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        _print_axiom_report(report)
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_classify(args) -> int:
    cfg = CheckConfig(grid_steps=args.grid, tolerance=args.tol)
    candidate = _resolve_candidate(args, arity=2)
    report = classify_elements(candidate, cfg=cfg)
    if args.format == "json":
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        _print_classification(report)
    found_forbidden = False
    for forbidden in args.expect_none:
        if forbidden == "zero-divisors" and report.zero_divisors:
            found_forbidden = True
        if forbidden == "nonzero-nilpotents" and report.nonzero_nilpotents:
            found_forbidden = True
    return EXIT_VIOLATION if found_forbidden else EXIT_OK


def _cmd_equilibrium(args) -> int:
    labels = tuple(p.strip() for p in args.params.split(",") if p.strip())
    if not labels:
        raise ValueError("--params needs at least one label")
    cfg = CheckConfig(tolerance=args.tol)
    if args.family:
        family = {
            label: resolve_connective(text, arity=1)
            for label, text in _split_family_items(args.family)
        }
        negation = lift_negation(family)
    else:
        negation = lift_negation(resolve_connective(args.builtin or args.expr, arity=1))
    result = find_equilibria(negation, labels, cfg=cfg)
    _print_equilibria(result)
    return EXIT_OK


def _cmd_apply(args) -> int:
    if args.op == "connective" and not args.conn:
        raise ValueError("--op connective needs --conn NAME-or-EXPR")
    if args.op != "connective" and args.conn:
        raise ValueError(f"--conn only applies with --op connective, not --op {args.op}")
    left = load_fss(args.left)
    right = load_fss(args.right)
    if args.op == "union":
        result = union_fss(left, right)
    elif args.op == "intersect":
        result = intersect_fss(left, right)
    else:
        result = apply_connective(resolve_connective(args.conn, arity=2), left, right)
    save_fss(result, args.output)
    print(f"wrote {args.output} ({len(result)} tags)")
    return EXIT_OK


def _cmd_dual(args) -> int:
    scalar = _resolve_candidate(args, arity=2)
    dual = dual_of(scalar)
    n = args.table
    if n < 2:
        raise ValueError(f"--table needs at least 2 points, got {n}")
    grid = [k / (n - 1) for k in range(n)]
    print(f"dual of {scalar.name}: {dual.name} (kind: {dual.kind})")
    header = "        " + "".join(f"y={g:<8.4g}" for g in grid)
    print(header)
    for gx in grid:
        cells = "".join(f"{float(dual(gx, gy)):<10.6g}" for gy in grid)
        print(f"x={gx:<6.4g}{cells}")
    return EXIT_OK


def _cmd_eval(args) -> int:
    binds = {}
    for item in args.bind:
        name, sep, path = item.partition("=")
        if not sep or not name.strip():
            raise ValueError(f"bad --bind item {item!r}, expected NAME=FILE.fss")
        binds[name.strip()] = path.strip()
    try:
        with open(args.script, encoding="utf-8") as handle:
            source = handle.read()
    except OSError as err:
        raise DocumentError(f"cannot read script {args.script}: {err}") from None
    script = parse_script(source, externals=binds.keys())
    env = {name: load_fss(path) for name, path in binds.items()}
    result = eval_script(script, env)
    for text in result.printed:
        print(text)
    for path in result.saved:
        print(f"saved {path}")
    return EXIT_OK


_HANDLERS = {
    "check": _cmd_check,
    "classify": _cmd_classify,
    "equilibrium": _cmd_equilibrium,
    "apply": _cmd_apply,
    "dual": _cmd_dual,
    "eval": _cmd_eval,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    """Run one invocation; returns the exit code, never raises."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE
    try:
        return _HANDLERS[args.command](args)
    except (ParseError, UnknownBuiltinError, ArityError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as err:
        # CheckConfig and table/flag validation.
        print(f"error: {err}", file=sys.stderr)
        return EXIT_USAGE
    except (DocumentError, ValidationError, UniverseMismatchError, TagCollisionError,
            CodomainError, CandidateEvaluationError, EvalError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA
    except FuzzySoftError as err:
        print(f"error: {err}", file=sys.stderr)
        return EXIT_DATA


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
