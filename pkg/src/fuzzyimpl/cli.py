"""Command-line front end.

Exit codes: 0 on success, 1 on bad input, 2 when an enumeration exceeds its
cap, 3 when a verification fails (invalid algebra, non-equivalent transform,
unwitnessed theory, failed spot check).
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from .algebra import Chain, validate
from .basebuild import base_from_context, witness_check, witness_transform
from .context import DEFAULT_CAP
from .errors import CapacityError, FuzzyImplError
from .experiments import BUCKETS, ExperimentConfig, VerificationError, run_fig1, run_fig2, run_fig34
from .fuzzyset import format_set, parse_set
from .graphmethod import build_graph, enumerate_systems
from .implications import close, entail_degree, equivalent, parse_implication
from .textio import read_context, read_theory

EXIT_OK, EXIT_INPUT, EXIT_CAPACITY, EXIT_VERIFY = 0, 1, 2, 3

# per-experiment defaults; command-line flags override them
_EXPERIMENT_DEFAULTS = {
    "fig1": dict(scale=10, attributes=6, formulas=10, hedge="identity", logic="bl", instances=200),
    "fig2": dict(scale=2, objects=50, attributes=4, hedge="globalization", logic="lukasiewicz", instances=5,
                 densities=tuple(d for d in BUCKETS if d < 30)),
    "fig34": dict(scale=4, objects=10, attributes=10, hedge="globalization", logic="lukasiewicz", instances=10),
}


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in text.split(",") if v.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzyimpl", description="Bases of graded attribute implications.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("close", help="least model of a theory containing a set")
    p.add_argument("theory", type=Path)
    p.add_argument("set", help="fuzzy set, e.g. '{p, 0.5/q}'")

    p = sub.add_parser("entail", help="degree to which a theory entails an implication")
    p.add_argument("theory", type=Path)
    p.add_argument("implication", help="e.g. '{p} => {q}'")

    p = sub.add_parser("equiv", help="whether two theories are equivalent")
    p.add_argument("first", type=Path)
    p.add_argument("second", type=Path)

    p = sub.add_parser("base", help="base given by pseudo-intents of a context")
    p.add_argument("context", type=Path)
    p.add_argument("--strategy", choices=("auto", "universe", "intents"), default="auto")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)

    p = sub.add_parser("transform", help="close every antecedent under the other rules")
    p.add_argument("theory", type=Path)

    p = sub.add_parser("witness", help="check that antecedents witness non-redundancy")
    p.add_argument("theory", type=Path)

    p = sub.add_parser("graph-base", help="all systems of pseudo-intents via the graph method")
    p.add_argument("context", type=Path)
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--dump-graph", action="store_true", help="print vertices and edges")

    p = sub.add_parser("experiment", help="run an experiment and write CSV")
    p.add_argument("which", choices=("fig1", "fig2", "fig34"))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--instances", type=int)
    p.add_argument("--objects", type=int)
    p.add_argument("--attributes", type=int)
    p.add_argument("--scale", type=int)
    p.add_argument("--logic", choices=("goedel", "lukasiewicz", "bl"))
    p.add_argument("--hedge", choices=("identity", "globalization"))
    p.add_argument("--idempotents", type=_int_list, help="idempotent counts for fig1, e.g. 2,3,6,11")
    p.add_argument("--formulas", type=int)
    p.add_argument("--densities", type=_int_list, help="density bucket centres")
    p.add_argument("--repeats", type=int)
    p.add_argument("--graph-repeats", type=int)
    p.add_argument("--spot-check", type=int, help="verify every k-th successful instance")
    p.add_argument("--cap", type=int)
    p.add_argument("--out", type=Path, help="CSV path (default: stdout)")

    p = sub.add_parser("validate-algebra", help="check the residuated-lattice and hedge axioms")
    p.add_argument("--scale", type=int, default=2)
    p.add_argument("--logic", choices=("goedel", "lukasiewicz", "bl"), default="lukasiewicz")
    p.add_argument("--hedge", choices=("identity", "globalization", "table"), default="identity")
    p.add_argument("--idempotents", help="idempotent degrees for bl, e.g. 0,0.5,1")
    p.add_argument("--table", help="hedge table values for degrees 0..1, e.g. 0,0,1")
    return parser


def _cmd_close(args) -> int:
    theory = read_theory(args.theory)
    m = parse_set(args.set, theory.universe, theory.chain)
    print(format_set(close(m, theory)))
    return EXIT_OK


def _cmd_entail(args) -> int:
    theory = read_theory(args.theory)
    imp = parse_implication(args.implication, theory.universe, theory.chain)
    print(entail_degree(theory, imp))
    return EXIT_OK


def _cmd_equiv(args) -> int:
    same = equivalent(read_theory(args.first), read_theory(args.second))
    print("equivalent" if same else "not equivalent")
    return EXIT_OK if same else EXIT_VERIFY


def _cmd_base(args) -> int:
    ctx = read_context(args.context)
    result = base_from_context(ctx, args.strategy, args.cap)
    print(f"# start set: {result.start_size} implications ({result.strategy})")
    print(f"# equivalent: {'yes' if result.equivalent else 'no'}")
    print(f"# witnessed: {'yes' if result.witnessed else 'no'}")
    print(f"# base size: {len(result.theory)}")
    for imp in result.theory:
        print(imp)
    return EXIT_OK if result.success else EXIT_VERIFY


def _cmd_transform(args) -> int:
    result = witness_transform(read_theory(args.theory))
    for imp in result.theory:
        print(imp)
    print(f"# equivalent: {'yes' if result.equivalent else 'no'}")
    return EXIT_OK if result.equivalent else EXIT_VERIFY


def _cmd_witness(args) -> int:
    report = witness_check(read_theory(args.theory))
    print(report)
    return EXIT_OK if report.witnessed else EXIT_VERIFY


def _cmd_graph_base(args) -> int:
    ctx = read_context(args.context)
    t0 = time.perf_counter()
    graph = build_graph(ctx, args.cap)
    systems = enumerate_systems(graph)
    elapsed = time.perf_counter() - t0
    if args.dump_graph:
        print(graph.dump())
    print(f"# vertices: {graph.size}, edges: {len(graph.edges)}")
    print(f"# systems: {len(systems)}")
    for k, system in enumerate(systems, 1):
        print(f"# system {k}: {len(system)} pseudo-intents")
        for imp in system.base:
            print(imp)
    print(f"# time: {elapsed:.6f} s")
    return EXIT_OK


def _cmd_experiment(args) -> int:
    settings = dict(_EXPERIMENT_DEFAULTS[args.which])
    overrides = {
        "seed": args.seed,
        "instances": args.instances,
        "objects": args.objects,
        "attributes": args.attributes,
        "scale": args.scale,
        "logic": args.logic,
        "hedge": args.hedge,
        "idempotent_counts": args.idempotents,
        "formulas": args.formulas,
        "densities": args.densities,
        "repeats": args.repeats,
        "graph_repeats": args.graph_repeats,
        "spot_check": args.spot_check,
        "cap": args.cap,
    }
    settings.update({k: v for k, v in overrides.items() if v is not None})
    cfg = ExperimentConfig(**settings)
    run = {"fig1": run_fig1, "fig2": run_fig2, "fig34": run_fig34}[args.which]
    text = run(cfg).to_csv()
    if args.out:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_validate_algebra(args) -> int:
    n = args.scale
    idem = ()
    if args.idempotents:
        idem = tuple(Chain(n).parse_degree(v).index for v in args.idempotents.split(","))
    table = ()
    if args.table:
        table = tuple(Chain(n).parse_degree(v).index for v in args.table.split(","))
    chain = Chain(n, args.logic, args.hedge, idem, table, strict=False)
    report = validate(chain)
    print(chain.describe())
    if report.ok:
        print("valid")
        return EXIT_OK
    for line in report.violations:
        print(f"violation: {line}")
    return EXIT_VERIFY


_COMMANDS = {
    "close": _cmd_close,
    "entail": _cmd_entail,
    "equiv": _cmd_equiv,
    "base": _cmd_base,
    "transform": _cmd_transform,
    "witness": _cmd_witness,
    "graph-base": _cmd_graph_base,
    "experiment": _cmd_experiment,
    "validate-algebra": _cmd_validate_algebra,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except VerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (FuzzyImplError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
