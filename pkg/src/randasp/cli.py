"""Command-line surface: gen, solve, theory, translate, experiment."""

from __future__ import annotations

import argparse
import sys

from . import csvout
from .experiments import (
    ExperimentConfig,
    run_avg_experiment,
    run_consistency_experiment,
    run_dist_experiment,
)
from .generate import LinearModelParams, expected_rule_count, generate
from .progio import ParseError, format_program, parse_program
from .programs import AtomSet, is_answer_set_general
from .solver import count_answer_sets, enumerate_answer_sets, is_answer_set_n2
from .theory import expected_total, theory_params
from .translate import to_two_literal, verify_translation


def _u64(text: str) -> int:
    value = int(text, 0)
    if not 0 <= value < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list: {text!r}") from exc


def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="randasp",
        description="Random negative two-literal logic programs: generation, solving, theory, experiments.",
    )
    sub = top.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a random program")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--c1", type=float, required=True)
    gen.add_argument("--c2", type=float, required=True)
    gen.add_argument("--seed", type=_u64, required=True)
    gen.add_argument("--out", default=None, help="output file (default: stdout)")

    solve = sub.add_parser("solve", help="enumerate, count or check answer sets")
    solve.add_argument("--in", dest="infile", required=True)
    mode = solve.add_mutually_exclusive_group()
    mode.add_argument("--enumerate", action="store_true")
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--check", metavar="ATOMS", default=None, help='candidate set, e.g. "a,b,c" (empty string for {})')
    solve.add_argument("--limit", type=int, default=None)

    theory = sub.add_parser("theory", help="print distribution parameters and expectations")
    theory.add_argument("--n", type=int, required=True)
    theory.add_argument("--c1", type=float, required=True)
    theory.add_argument("--c2", type=float, required=True)
    theory.add_argument("--curve", default=None, help="write per-size curve CSV to this file")

    translate = sub.add_parser("translate", help="negative normal -> negative two-literal")
    translate.add_argument("--in", dest="infile", required=True)
    translate.add_argument("--out", required=True)
    translate.add_argument("--verify", action="store_true")

    exp = sub.add_parser("experiment", help="batch experiment runs writing CSV")
    exp.add_argument("kind", choices=("avg", "dist", "consistency"))
    exp.add_argument("--n", type=_int_list, required=True, help="comma-separated universe sizes")
    exp.add_argument("--c1", type=float, required=True)
    exp.add_argument("--c2", type=float, required=True)
    exp.add_argument("--trials", type=int, required=True)
    exp.add_argument("--seed", type=_u64, required=True)
    exp.add_argument("--gamma", type=float, default=0.5)
    exp.add_argument("--limit", type=int, default=None, help="per-program solver limit (avg/dist)")
    exp.add_argument("--workers", type=int, default=1)
    exp.add_argument("--out", required=True)
    return top


def _cmd_gen(args) -> int:
    params = LinearModelParams(args.n, args.c1, args.c2)
    text = format_program(generate(params, args.seed))
    if args.out:
        with open(args.out, "w", newline="", encoding="ascii") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _parse_check_atoms(text: str, program) -> AtomSet:
    by_name = {}
    for i in range(program.n):
        by_name[program.atom_name(i)] = i
    atoms = []
    for raw in text.split(","):
        name = raw.strip()
        if not name:
            continue
        if name not in by_name:
            raise ValueError(f"unknown atom {name!r} (universe: {', '.join(sorted(by_name))})")
        atoms.append(by_name[name])
    return AtomSet.from_atoms(program.n, atoms)


def _cmd_solve(args) -> int:
    with open(args.infile, encoding="ascii") as fh:
        program = parse_program(fh.read())
    if args.check is not None:
        s = _parse_check_atoms(args.check, program)
        if program.rules and program.is_n2:
            print(f"n2: {'true' if is_answer_set_n2(program, s) else 'false'}")
        else:
            print("n2: not-applicable")
        print(f"general: {'true' if is_answer_set_general(program, s) else 'false'}")
        return 0
    if args.count:
        print(count_answer_sets(program))
        return 0
    col = enumerate_answer_sets(program, limit=args.limit)
    for s in col.sets:
        print(",".join(program.atom_name(i) for i in s.members))
    if col.truncated:
        print(f"enumeration truncated at {args.limit} answer sets", file=sys.stderr)
    return 0


def _cmd_theory(args) -> int:
    tp = theory_params(args.n, args.c1, args.c2)
    params = LinearModelParams(args.n, args.c1, args.c2)
    report = [
        ("alpha", tp.alpha),
        ("x0", tp.x0),
        ("sigma", tp.sigma),
        ("c0", tp.c0),
        ("delta", tp.delta),
        ("phi_x0_direct", tp.phi_x0_direct),
        ("phi_x0_asymptotic", tp.phi_x0_asymptotic),
        ("expected_total", expected_total(args.n, args.c1, args.c2)),
        ("limit_expected_total", tp.limit_expected_total),
        ("expected_rule_count", expected_rule_count(params)),
    ]
    for key, value in report:
        print(f"{key}={value!r}")
    if args.curve:
        csvout.write_theory_curve_csv(args.curve, args.n, args.c1, args.c2)
    return 0


def _cmd_translate(args) -> int:
    with open(args.infile, encoding="ascii") as fh:
        program = parse_program(fh.read())
    result = to_two_literal(program)
    symbols = list(program.symbols or (f"a{i}" for i in range(program.n)))
    used = set(symbols)
    for j in range(len(program.rules)):
        name = f"_e{j}"
        while name in used:
            name = "_" + name
        used.add(name)
        symbols.append(name)
    out_program = type(result.output)(result.output.n, result.output.rules, symbols=symbols)
    with open(args.out, "w", newline="", encoding="ascii") as fh:
        fh.write(format_program(out_program))
    if args.verify:
        ok = verify_translation(program, result)
        print(f"verified: {'true' if ok else 'false'}")
        if not ok:
            return 1
    return 0


def _cmd_experiment(args) -> int:
    cfg = ExperimentConfig(
        n=args.n,
        c1=args.c1,
        c2=args.c2,
        trials=args.trials,
        seed=args.seed,
        gamma=args.gamma,
        solver_limit=args.limit,
    )
    if args.kind == "avg":
        results = run_avg_experiment(cfg, workers=args.workers, progress=True)
        csvout.write_avg_csv(args.out, results, cfg.seed)
    elif args.kind == "dist":
        result = run_dist_experiment(cfg, workers=args.workers, progress=True)
        csvout.write_dist_csv(args.out, result, cfg.seed)
    else:
        result = run_consistency_experiment(cfg, workers=args.workers, progress=True)
        csvout.write_consistency_csv(args.out, result, cfg.seed)
    return 0


_HANDLERS = {
    "gen": _cmd_gen,
    "solve": _cmd_solve,
    "theory": _cmd_theory,
    "translate": _cmd_translate,
    "experiment": _cmd_experiment,
}


def cli_dispatch(argv) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse: 2 on usage error, 0 on --help
        return int(exc.code or 0)
    try:
        return _HANDLERS[args.command](args)
    except (ValueError, ParseError, RuntimeError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
