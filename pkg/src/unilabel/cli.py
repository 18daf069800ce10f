"""Command-line front end: ``unilabel build|embed|label|decode|verify|bounds``."""

from __future__ import annotations

import argparse
import sys

from . import cycles, io, labeling, verify
from .bounds import DEFAULT_CONSTANTS, gv_bounds_table
from .errors import UnilabelError
from .graph import Graph, cycle_graph

EXIT_OK, EXIT_FAILED, EXIT_USAGE = 0, 1, 2

GRAPH_FORMATS = {"edgelist": io.serialize_graph, "dot": io.to_dot, "csv": io.to_csv}


class UsageError(Exception):
    pass


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="unilabel", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, *, construction=True, n=True):
        if construction:
            sp.add_argument("--construction", required=True, choices=verify.CONSTRUCTIONS)
        if n:
            sp.add_argument("--n", type=int, help="family size")
        sp.add_argument("--d", type=int, help="degree bound D")
        sp.add_argument("--seed", type=int, default=0)

    b = sub.add_parser("build", help="print a universal graph")
    common(b)
    b.add_argument("--format", choices=sorted(GRAPH_FORMATS), default="edgelist")

    e = sub.add_parser("embed", help="print guest_vertex<TAB>host_vertex lines")
    common(e)
    e.add_argument("--input", help="guest graph file ('-' for stdin)")
    e.add_argument("--length", type=int, help="cycle length for the cycle constructions")

    lab = sub.add_parser("label", help="print a label file")
    common(lab)
    lab.add_argument("--input", help="graph file ('-' for stdin)")
    lab.add_argument("--length", type=int, help="cycle length for the cycle constructions")

    d = sub.add_parser("decode", help="decide adjacency from two labels")
    common(d)
    d.add_argument("labels", nargs=2, metavar="BITS")

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", choices=("universality", "prefix", "oracle", "negative", "all"), default="all")
    v.add_argument("--max-n", type=int, default=10)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=("text", "csv"), default="text")

    bd = sub.add_parser("bounds", help="bound table as CSV")
    bd.add_argument("--n", type=int, required=True)
    bd.add_argument("--d", type=int, required=True)
    bd.add_argument("--o-constant", action="append", default=[], metavar="NAME=VALUE",
                    help=f"override an O-constant ({', '.join(DEFAULT_CONSTANTS)})")
    bd.add_argument("--format", choices=("csv",), default="csv")
    return p


def _need(args, name):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"--{name} is required for {args.construction}")
    return value


def _read_input(path) -> Graph:
    text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    return io.parse_graph(text)


def _guest(args) -> Graph:
    if args.construction.startswith("cycles"):
        if args.length is not None:
            return cycle_graph(args.length)
    if args.input is None:
        raise UsageError("--input is required" + (" (or --length)" if args.construction.startswith("cycles") else ""))
    return _read_input(args.input)


def cmd_build(args, out) -> int:
    n = _need(args, "n")
    c = args.construction
    if c == "degd-rand":
        raise UsageError("the randomised scheme has no materialised graph; use 'label'")
    if c.startswith("cycles") and n < 3:
        raise UsageError("cycle constructions need --n >= 3")
    g = verify.build_host(c, n, _need(args, "d") if c == "degd-det" else None)
    out.write(GRAPH_FORMATS[args.format](g))
    return EXIT_OK


def cmd_embed(args, out) -> int:
    c = args.construction
    if c == "degd-rand":
        raise UsageError("the randomised scheme has no host ids; use 'label'")
    g = _guest(args)
    n = g.n if args.n is None else args.n
    if c.startswith("cycles"):
        order = labeling._single_cycle(g)
        if not 3 <= g.n <= n:
            raise UsageError(f"cycle length {g.n} outside [3, {n}]")
        embed = cycles.embed_cycle_aware if c == "cycles-aware" else cycles.embed_cycle_oblivious
        image = dict(zip(order, embed(g.n, n)))
    else:
        if n != g.n:
            raise UsageError(f"input has {g.n} vertices but --n is {n}")
        D = _need(args, "d") if c == "degd-det" else None
        image = dict(enumerate(verify.embed_into_ids(c, g, n, D)))
    for u in range(g.n):
        out.write(f"{u}\t{image[u]}\n")
    return EXIT_OK


def cmd_label(args, out) -> int:
    c = args.construction
    g = _guest(args)
    D = _need(args, "d") if c.startswith("degd") else args.d
    name = labeling.scheme_name(c)
    lg = labeling.encode(labeling.Scheme(name, args.n, D, args.seed), g)
    seed = args.seed if c == "degd-rand" else None
    out.write(io.format_label_file(lg.labels, name, lg.scheme.n, D, seed))
    return EXIT_OK


def cmd_decode(args, out) -> int:
    a, b = args.labels
    if set(a + b) - {"0", "1"}:
        raise UsageError("labels must be bit strings")
    name = labeling.scheme_name(args.construction)
    adjacent = labeling.decode(name, a, b, n=args.n, D=args.d)
    out.write(("1" if adjacent else "0") + "\n")
    return EXIT_OK


def _suite_reports(suite: str, max_n: int, jobs: int, seed: int) -> list:
    reps = []
    if suite in ("universality", "all"):
        reps.append(verify.verify_universality("paths", range(0, min(max_n, 14) + 1), jobs=jobs))
        reps.append(verify.verify_universality("deg2", range(0, min(max_n, 12) + 1), jobs=jobs))
        for D in (3, 4):
            reps.append(verify.verify_universality("degd-det", range(1, min(max_n, 5) + 1), D, jobs=jobs))
        reps.append(verify.verify_universality("degd-rand", range(1, min(max_n, 6) + 1), 3, seed=seed, jobs=jobs))
        if max_n >= 3:
            for c in ("cycles-aware", "cycles-oblivious"):
                reps.append(verify.verify_universality(c, range(3, max_n + 1), jobs=jobs))
    if suite in ("prefix", "all"):
        reps.append(verify.verify_prefix_monotone("paths", range(0, max_n + 1)))
        reps.append(verify.verify_prefix_monotone("deg2", range(0, max_n + 1)))
        if max_n >= 3:
            reps.append(verify.verify_prefix_monotone("cycles-oblivious", range(3, max_n + 1)))
            reps.append(verify.verify_prefix_monotone("cycles-aware", range(3, max_n + 1)))
    if suite in ("oracle", "all"):
        cap = min(max_n, 6)
        reps.append(verify.cross_check_oracle("paths", cap))
        reps.append(verify.cross_check_oracle("deg2", cap))
        if cap >= 3:
            reps.append(verify.cross_check_oracle("cycles-aware", cap))
            reps.append(verify.cross_check_oracle("cycles-oblivious", cap))
    if suite in ("negative", "all") and max_n >= 4:
        control = verify.edge_deletion_control("deg2", range(1, max_n + 1), seed=seed)
        # the control passes when the broken host is caught
        caught = verify.VerificationReport("deg2", "negative", control.n_range, seconds=control.seconds)
        caught.merge(max_n, 1, int(not control.ok), int(control.ok), None)
        reps.append(caught)
        oracle = verify.VerificationReport("paths", "negative", (4,))
        ok = verify.oracle_negative_control()
        oracle.merge(4, 1, int(ok), int(not ok), None)
        reps.append(oracle)
    return reps


def cmd_verify(args, out) -> int:
    if args.max_n < 0 or args.jobs < 1:
        raise UsageError("--max-n must be >= 0 and --jobs >= 1")
    reps = _suite_reports(args.suite, args.max_n, args.jobs, args.seed)
    if args.format == "csv":
        out.write(verify.reports_to_csv(reps, timing=False))
    else:
        for r in reps:
            # timings vary between runs; leave them out so output is byte-stable
            out.write(r.to_text(timing=False) + "\n")
        failed = sum(not r.ok for r in reps)
        out.write(f"{len(reps) - failed}/{len(reps)} checks passed\n")
    return EXIT_OK if all(r.ok for r in reps) else EXIT_FAILED


def _constants(pairs) -> dict:
    out = {}
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or name not in DEFAULT_CONSTANTS:
            raise UsageError(f"--o-constant expects NAME=VALUE with NAME in {', '.join(DEFAULT_CONSTANTS)}")
        try:
            out[name] = float(value)
        except ValueError:
            raise UsageError(f"not a number: {value!r}") from None
    return out


def cmd_bounds(args, out) -> int:
    if not 1 <= args.d <= args.n:
        raise UsageError("bounds need 1 <= --d <= --n")
    out.write(gv_bounds_table(args.n, args.d, _constants(args.o_constant)).to_csv())
    return EXIT_OK


COMMANDS = {
    "build": cmd_build,
    "embed": cmd_embed,
    "label": cmd_label,
    "decode": cmd_decode,
    "verify": cmd_verify,
    "bounds": cmd_bounds,
}


def main(argv=None, out=None, err=None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, UnilabelError, ValueError, OSError) as exc:
        err.write(f"unilabel {args.command}: {exc}\n")
        return EXIT_USAGE


run = main


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
