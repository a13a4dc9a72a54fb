"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 input format error, 3 budget
exceeded, 4 verification divergence.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
from collections.abc import Sequence
from pathlib import Path

from .bench import BenchConfig, report_to_csv, run_sweep
from .errors import (
    BudgetExceededError,
    ConfigError,
    GraphFormatError,
    NoPathError,
    RowFormatError,
    VertexOutOfRangeError,
)
from .graph import MixedGraph, load_graph
from .oracle import assert_equivalence
from .paths import apsp, reconstruct_one, sdsp, spm_to_csv, spsp
from .projection import (
    AUTO,
    DEFAULT_NODE_BUDGET,
    build_inverse_projection,
    build_projection,
    to_bracket,
)
from .refined import (
    NotStronglyReachable,
    build_refined,
    diameter,
    eccentricity,
    inverse_diameter,
    inverse_eccentricity,
    refine_projection,
    refined_from_row,
)

EXIT_OK, EXIT_USAGE, EXIT_FORMAT, EXIT_BUDGET, EXIT_DIVERGENCE = range(5)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse would exit with status 2
        raise UsageError(f"{self.prog}: {message}")


def _depth(text: str) -> int | str:
    if text.lower() == AUTO:
        return AUTO
    try:
        k = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"depth must be AUTO or an integer, got {text!r}")
    if k < 0:
        raise argparse.ArgumentTypeError("depth must be non-negative")
    return k


def _csv_list(kind):
    def parse(text: str):
        try:
            return tuple(kind(x) for x in text.split(","))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad list {text!r}")

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="projpath", description="Shortest paths on unweighted mixed graphs.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    io_args = _Parser(add_help=False)
    io_args.add_argument("input", nargs="?", default="-", help="graph file, or - for stdin")
    io_args.add_argument("--format", choices=("auto", "matrix", "edgelist"), default="auto")
    io_args.add_argument("-o", "--output", default="-")

    verify_arg = _Parser(add_help=False)
    verify_arg.add_argument(
        "--verify", action="store_true", help="check the answer against the brute-force oracle first"
    )

    p = sub.add_parser("project", parents=[io_args], help="full or inverse projection in bracket form")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--depth", type=_depth, default=AUTO)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--refined", action="store_true", help="prune to shortest paths")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("refine", parents=[io_args], help="refined projection in bracket form")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_NODE_BUDGET)

    p = sub.add_parser("sssp", parents=[io_args, verify_arg], help="predecessor row of one source")
    p.add_argument("--source", type=int, required=True)

    p = sub.add_parser("sdsp", parents=[io_args, verify_arg], help="successor row toward one target")
    p.add_argument("--target", type=int, required=True)

    p = sub.add_parser("spsp", parents=[io_args, verify_arg], help="shortest path(s) between a pair")
    p.add_argument("--source", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--all", action="store_true", help="print every shortest path")

    p = sub.add_parser("apsp", parents=[io_args, verify_arg], help="shortest-path matrix as CSV")
    p.add_argument("--workers", type=int, default=None)

    sub.add_parser("metrics", parents=[io_args], help="eccentricities, diameters, density")
    sub.add_parser("verify", parents=[io_args], help="oracle equivalence for every source")

    p = sub.add_parser("bench", help="density/size sweep on random graphs")
    p.add_argument("--config", help="key=value config file")
    p.add_argument("--sizes", type=_csv_list(int))
    p.add_argument("--densities", type=_csv_list(float))
    p.add_argument("--arc-fraction", type=float)
    p.add_argument("--seed", type=int)
    p.add_argument("--repetitions", type=int)
    p.add_argument("--sources", type=int)
    p.add_argument("--no-timings", action="store_true", help="omit timing columns")
    p.add_argument("-o", "--output", default="-")
    return parser


def _read_graph(args) -> MixedGraph:
    if args.input == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(args.input).read_text()
        except OSError as exc:
            raise GraphFormatError(f"cannot read {args.input}: {exc.strerror}") from None
    return load_graph(text, args.format)


def _write(args, text: str) -> None:
    if args.output == "-":
        sys.stdout.write(text)
    else:
        Path(args.output).write_text(text)


def _metric(value: int | NotStronglyReachable) -> str:
    return "inf" if isinstance(value, NotStronglyReachable) else str(value)


def _verify(g: MixedGraph, sources) -> str | None:
    for u in sources:
        report = assert_equivalence(g, u)
        if not report.ok:
            return report.divergence
    return None


def _run(args) -> int:
    if args.command == "bench":
        return _bench(args)
    g = _read_graph(args)
    cmd = args.command
    for name in ("source", "target"):
        value = getattr(args, name, None)
        if value is not None:
            g.check_vertex(value)

    if getattr(args, "verify", False):
        if cmd == "sdsp":
            problem = _verify(g.transpose(), [args.target])
        elif cmd == "apsp":
            problem = _verify(g, g.vertices())
        else:
            problem = _verify(g, [args.source])
        if problem:
            print(f"verification failed: {problem}", file=sys.stderr)
            return EXIT_DIVERGENCE

    if cmd == "project":
        build = build_inverse_projection if args.inverse else build_projection
        p = build(g, args.source, args.depth, args.budget)
        if args.refined:
            p = refine_projection(p, g)
        _write(args, to_bracket(p) + "\n")
    elif cmd == "refine":
        base = g.transpose() if args.inverse else g
        p = refined_from_row(build_refined(base, args.source), base, args.budget)
        if args.inverse:
            p = dataclasses.replace(p, direction="inverse")
        _write(args, to_bracket(p) + "\n")
    elif cmd == "sssp":
        _write(args, build_refined(g, args.source).to_text() + "\n")
    elif cmd == "sdsp":
        _write(args, sdsp(g, args.target).to_text() + "\n")
    elif cmd == "spsp":
        if args.all:
            _write(args, spsp(g, args.source, args.target).to_text())
        else:
            row = build_refined(g, args.source, stop_at=args.target)
            try:
                path = reconstruct_one(row, args.target)
            except NoPathError as exc:
                print(str(exc), file=sys.stderr)
                return EXIT_OK
            _write(args, " ".join(map(str, path)) + "\n")
    elif cmd == "apsp":
        _write(args, spm_to_csv(apsp(g, args.workers)))
    elif cmd == "metrics":
        lines = ["vertex eccentricity inverse_eccentricity"]
        for v in g.vertices():
            lines.append(f"{v} {_metric(eccentricity(g, v))} {_metric(inverse_eccentricity(g, v))}")
        lines.append(f"diameter {_metric(diameter(g))}")
        lines.append(f"inverse_diameter {_metric(inverse_diameter(g))}")
        lines.append(f"density {g.density():.6f}")
        _write(args, "\n".join(lines) + "\n")
    elif cmd == "verify":
        problem = _verify(g, g.vertices())
        if problem:
            print(f"verification failed: {problem}", file=sys.stderr)
            return EXIT_DIVERGENCE
        _write(args, f"ok: {g.n} sources agree with the oracle\n")
    return EXIT_OK


def _bench(args) -> int:
    base = BenchConfig()
    if args.config:
        try:
            base = BenchConfig.from_text(Path(args.config).read_text())
        except OSError as exc:
            raise ConfigError(f"cannot read {args.config}: {exc.strerror}") from None
    overrides = {
        "sizes": args.sizes,
        "densities": args.densities,
        "arc_fraction": args.arc_fraction,
        "seed": args.seed,
        "repetitions": args.repetitions,
        "sources": args.sources,
    }
    cfg = dataclasses.replace(base, **{k: v for k, v in overrides.items() if v is not None})
    _write(args, report_to_csv(run_sweep(cfg), timings=not args.no_timings))
    return EXIT_OK


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return _run(args)
    except (UsageError, VertexOutOfRangeError, ConfigError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (GraphFormatError, RowFormatError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_FORMAT
    except BudgetExceededError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
