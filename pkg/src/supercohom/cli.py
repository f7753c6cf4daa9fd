"""Command-line front end.

Exit codes: 0 success, 2 configuration or input error, 3 internal
invariant failure.
"""

import argparse
import json
import os
import sys

from . import algebra_io
from .algebra import build_algebra, family_lowest_grade, parse_family, validate_structure
from .bench import run_benchmark
from .engine import EXACT_MODES, EngineConfig, compute_cohomology, required_grade_max
from .errors import ComplexError, InvalidFamily, ParseError, SupercohomError
from .report import document, to_csv, to_json, to_table
from .subcomplex import STRATEGIES, dump_subcomplex, partition_complex

EXIT_OK, EXIT_CONFIG, EXIT_INTERNAL = 0, 2, 3


class ConfigError(Exception):
    pass


def _int_range(text):
    a, sep, b = text.partition(":")
    try:
        lo = int(a)
        hi = int(b) if sep else lo
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or A:B, got {text!r}") from None
    if hi < lo:
        return range(0)
    return range(lo, hi + 1)


def _int_list(text):
    try:
        return tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _ranges(args):
    ks = args.k_range if args.k_range is not None else (
        range(args.k, args.k + 1) if args.k is not None else None)
    gs = args.g_range if args.g_range is not None else (
        range(args.g, args.g + 1) if args.g is not None else None)
    if ks is None or gs is None:
        raise ConfigError("give --k or --k-range and --g or --g-range")
    return ks, gs


def load_algebra(spec, ks=(), gs=(), grade_max=None):
    """A built-in family (``SLe2``, ``H(2)``) sized for the cells, or a JSON file."""
    if os.path.exists(spec):
        return algebra_io.load(spec)
    try:
        family, n = parse_family(spec)
    except InvalidFamily as exc:
        raise ConfigError(f"{spec!r} is neither a file nor a family ({exc})") from None
    if grade_max is None:
        lo = family_lowest_grade(family, n)
        grade_max = max([required_grade_max(lo, k, g) for k in ks for g in gs] or [1])
    return build_algebra(family, grade_max=grade_max, n=n)


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _config(args):
    primes = args.primes or EngineConfig.crt_primes
    fallback = args.fallback_prime
    if fallback == args.prime:
        fallback = 65537 if args.prime != 65537 else 65521
    return EngineConfig(
        prime=args.prime, fallback_prime=fallback, strategy=args.strategy, seed=args.seed,
        field=args.field, exact_mode=args.exact_mode, crt_primes=primes,
        emit_representatives=args.representatives, jobs=args.jobs)


def cmd_compute(args):
    ks, gs = _ranges(args)
    alg = load_algebra(args.algebra, ks, gs, args.grade_max)
    config = _config(args)
    results = [compute_cohomology(alg, k, g, config) for k in ks for g in gs]
    if args.dump_subcomplexes:
        os.makedirs(args.dump_subcomplexes, exist_ok=True)
        for k in ks:
            for g in gs:
                path = os.path.join(args.dump_subcomplexes, f"k{k}_g{g}.txt")
                with open(path, "w") as fh:
                    for sub in partition_complex(alg, k, g, config.strategy, config.seed):
                        dump_subcomplex(alg, sub, fh)
    if args.format == "json":
        text = to_json(document(alg, config, results, timings=args.timings))
    elif args.format == "csv":
        text = to_csv(alg, results)
    else:
        text = to_table(alg, results)
    _emit(text, args.out)
    return EXIT_OK


def cmd_bench(args):
    if args.repetitions < 1:
        raise ConfigError("--repetitions must be at least 1")
    ks, gs = _ranges(args)
    alg = load_algebra(args.algebra, ks, gs, args.grade_max)
    strategies = tuple(s.strip() for s in args.strategies.split(",") if s.strip())
    for s in strategies:
        if s not in STRATEGIES:
            raise ConfigError(f"unknown strategy {s!r}")
    primes = args.primes or (args.prime,)
    rows = []
    for k in ks:
        for g in gs:
            rows.extend(run_benchmark(alg, k, g, strategies, primes, args.repetitions,
                                      args.seed))
    if args.format == "json":
        text = json.dumps({"schema_version": 1, "rows": rows}, indent=1) + "\n"
    else:
        head = ("k", "g", "prime", "strategy", "dim C^{k-1}", "dim C^k", "dim C^{k+1}",
                "#sub", "median s", "ops", "T/T_top")
        lines = ["\t".join(head)]
        top = {(r["k"], r["g"], r["prime"]): r["median_time"] for r in rows
               if r["strategy"] == "top"}
        for r in rows:
            t_top = top.get((r["k"], r["g"], r["prime"]))
            ratio = f"{r['median_time'] / t_top:.2f}" if t_top else "-"
            lines.append("\t".join(str(x) for x in (
                r["k"], r["g"], r["prime"], r["strategy"], r["dim_lower"], r["dim"],
                r["dim_upper"], r["n_subcomplexes"], f"{r['median_time']:.3f}",
                r["modp_ops"], ratio)))
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return EXIT_OK


def cmd_validate(args):
    try:
        alg = algebra_io.load(args.file, validate=False)
    except OSError as exc:
        raise ConfigError(str(exc)) from None
    violations = validate_structure(alg)
    for v in violations:
        print(v)
    if violations:
        print(f"{len(violations)} violation(s)", file=sys.stderr)
        return EXIT_CONFIG
    print(f"{alg.name}: {len(alg)} elements, structure valid")
    return EXIT_OK


def cmd_export(args):
    family, n = parse_family(args.algebra)
    lo = family_lowest_grade(family, n)
    gmin = args.grade_min if args.grade_min is not None else lo
    alg = build_algebra(family, grade_min=gmin, grade_max=args.grade_max, n=n)
    _emit(algebra_io.dumps(alg), args.out)
    return EXIT_OK


def build_parser():
    p = argparse.ArgumentParser(prog="supercohom",
                                description="Cohomology of graded Lie superalgebras")
    sub = p.add_subparsers(dest="command", required=True)

    def cells(sp):
        sp.add_argument("--algebra", required=True,
                        help="family such as SLe2 or H2, or a JSON algebra file")
        sp.add_argument("--k", type=int)
        sp.add_argument("--k-range", type=_int_range, metavar="A:B")
        sp.add_argument("--g", type=int)
        sp.add_argument("--g-range", type=_int_range, metavar="A:B")
        sp.add_argument("--grade-max", type=int, help="override the generated grade window")
        sp.add_argument("--prime", type=int, default=65537)
        sp.add_argument("--primes", type=_int_list, help="comma-separated primes")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--out")

    c = sub.add_parser("compute", help="cohomology table for a range of (k, g)")
    cells(c)
    c.add_argument("--field", choices=("Q", "Fp"), default="Q")
    c.add_argument("--fallback-prime", type=int, default=65521)
    c.add_argument("--strategy", choices=STRATEGIES, default="top")
    c.add_argument("--exact-mode", choices=EXACT_MODES, default="rational")
    c.add_argument("--representatives", action="store_true")
    c.add_argument("--dump-subcomplexes", metavar="DIR")
    c.add_argument("--format", choices=("json", "csv", "table"), default="table")
    c.add_argument("--jobs", type=int, default=1)
    c.add_argument("--timings", action="store_true", help="include wall times in JSON")
    c.set_defaults(func=cmd_compute)

    b = sub.add_parser("bench", help="compare starting strategies and primes")
    cells(b)
    b.add_argument("--strategies", default="top,bottom,random")
    b.add_argument("--repetitions", type=int, default=5)
    b.add_argument("--format", choices=("json", "table"), default="table")
    b.set_defaults(func=cmd_bench)

    v = sub.add_parser("validate", help="check an algebra file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    e = sub.add_parser("export", help="write a built-in algebra as JSON")
    e.add_argument("--algebra", required=True)
    e.add_argument("--grade-min", type=int)
    e.add_argument("--grade-max", type=int, default=1)
    e.add_argument("--out")
    e.set_defaults(func=cmd_export)
    return p


_RANGE_FLAGS = ("--k-range", "--g-range")


def _join_ranges(argv):
    # let "--g-range -3:0" through; argparse would read -3:0 as an option
    out, it = [], iter(argv)
    for a in it:
        if a in _RANGE_FLAGS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(_join_ranges(sys.argv[1:] if argv is None else list(argv)))
    try:
        return args.func(args)
    except (ComplexError, AssertionError) as exc:
        print(f"internal invariant failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except (ConfigError, SupercohomError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
