"""Command-line surface: cut, oracle, count, and cluster subcommands.

Reports are stable-ordered ``key: value`` lines on stdout; diagnostics go
to stderr. Exit codes: 0 success, 1 input error, 2 enumeration limit hit.
"""

from __future__ import annotations

import argparse
import hashlib
import sys
import time
from dataclasses import dataclass
from fractions import Fraction

from .contraction import Objective, optimal_average_cut, run_contraction
from .dendro import _label_key, communities_from_cut, linkage_to_tree, parse_linkage_csv
from .errors import AvgCutError, TooManyCutsError
from .io import parse_edgelist, parse_newick
from .oracle import DEFAULT_CUT_LIMIT, brute_force_optimum, count_cuts
from .rational import decimal_approx
from .tree import RootedTree


@dataclass(frozen=True)
class RunReport:
    """Everything one command run reports, in a fixed field order."""

    input_digest: str
    objective: str
    average: Fraction
    total: Fraction
    size: int
    cut: tuple[tuple[str, str, str], ...]
    contraction_count: int | None = None
    cut_count: int | None = None
    scheme: str | None = None
    communities: tuple[tuple[str, ...], ...] | None = None
    trace: tuple[tuple[str, str, str], ...] | None = None
    elapsed_s: float = 0.0

    def to_lines(self) -> list[str]:
        lines = [f"input_digest: {self.input_digest}", f"objective: {self.objective}"]
        if self.scheme is not None:
            lines.append(f"scheme: {self.scheme}")
        lines.append(f"average: {self.average}")
        lines.append(f"average_decimal: {decimal_approx(self.average)}")
        lines.append(f"total: {self.total}")
        lines.append(f"size: {self.size}")
        if self.contraction_count is not None:
            lines.append(f"contraction_count: {self.contraction_count}")
        if self.cut_count is not None:
            lines.append(f"cut_count: {self.cut_count}")
        if self.communities is not None:
            for members in self.communities:
                lines.append("community: " + " ".join(members))
        for parent, child, weight in self.cut:
            lines.append(f"cut: {parent} {child} {weight}")
        if self.trace is not None:
            for parent, child, lam in self.trace:
                lines.append(f"trace: {parent} {child} {lam}")
        lines.append(f"elapsed_ms: {self.elapsed_s * 1000:.3f}")
        return lines


def _digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def _read(path: str) -> tuple[str, str]:
    with open(path, "rb") as fh:
        data = fh.read()
    return data.decode("utf-8"), _digest(data)


def _load_tree(path: str, fmt: str) -> tuple[RootedTree, str]:
    text, digest = _read(path)
    tree = parse_newick(text) if fmt == "newick" else parse_edgelist(text)
    return tree, digest


def _cut_rows(tree: RootedTree, cut) -> tuple[tuple[str, str, str], ...]:
    return tuple(
        (tree.labels[tree.tail(e)], tree.labels[e], str(tree.weights[e]))
        for e in sorted(cut)
    )


def _cmd_cut(args) -> int:
    tree, digest = _load_tree(args.input, args.format)
    started = time.perf_counter()
    state = run_contraction(tree, Objective(args.objective))
    result = state.result()
    elapsed = time.perf_counter() - started
    trace = None
    if args.trace:
        trace = tuple(
            (tree.labels[tree.tail(s.edge)], tree.labels[s.edge], str(s.contractibility))
            for s in state.steps()
        )
    report = RunReport(
        input_digest=digest,
        objective=args.objective,
        average=result.average,
        total=result.total,
        size=result.size,
        cut=_cut_rows(tree, result.cut),
        contraction_count=len(result.contractions),
        trace=trace,
        elapsed_s=elapsed,
    )
    print("\n".join(report.to_lines()))
    return 0


def _cmd_oracle(args) -> int:
    tree, digest = _load_tree(args.input, "edgelist")
    started = time.perf_counter()
    result = brute_force_optimum(tree, Objective(args.objective), args.limit)
    elapsed = time.perf_counter() - started
    report = RunReport(
        input_digest=digest,
        objective=args.objective,
        average=result.average,
        total=result.total,
        size=result.size,
        cut=_cut_rows(tree, result.cut),
        cut_count=count_cuts(tree),
        elapsed_s=elapsed,
    )
    print("\n".join(report.to_lines()))
    return 0


def _cmd_count(args) -> int:
    text, digest = _read(args.input)
    tree = parse_edgelist(text)
    started = time.perf_counter()
    total = count_cuts(tree)
    elapsed = time.perf_counter() - started
    print(f"input_digest: {digest}")
    print(f"cut_count: {total}")
    print(f"elapsed_ms: {elapsed * 1000:.3f}")
    return 0


def _cmd_cluster(args) -> int:
    text, digest = _read(args.linkage)
    table = parse_linkage_csv(text)
    started = time.perf_counter()
    tree = linkage_to_tree(table, args.scheme)
    result = optimal_average_cut(tree, Objective(args.objective))
    partition = communities_from_cut(tree, result.cut)
    elapsed = time.perf_counter() - started
    report = RunReport(
        input_digest=digest,
        objective=args.objective,
        average=result.average,
        total=result.total,
        size=result.size,
        cut=_cut_rows(tree, result.cut),
        contraction_count=len(result.contractions),
        scheme=args.scheme,
        communities=tuple(
            tuple(sorted(members, key=_label_key)) for members in partition
        ),
        elapsed_s=elapsed,
    )
    print("\n".join(report.to_lines()))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="avgcut",
        description="Optimal average-weight root-separating cuts in rooted weighted trees.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    cut = sub.add_parser("cut", help="run the contraction algorithm")
    cut.add_argument("--objective", choices=("max", "min"), default="max")
    cut.add_argument("--format", choices=("edgelist", "newick"), default="edgelist")
    cut.add_argument("--input", required=True)
    cut.add_argument("--trace", action="store_true", help="log each contraction")
    cut.set_defaults(handler=_cmd_cut)

    oracle = sub.add_parser("oracle", help="brute-force optimum by full enumeration")
    oracle.add_argument("--objective", choices=("max", "min"), default="max")
    oracle.add_argument("--input", required=True)
    oracle.add_argument("--limit", type=int, default=DEFAULT_CUT_LIMIT)
    oracle.set_defaults(handler=_cmd_oracle)

    count = sub.add_parser("count", help="count the root-separating cuts")
    count.add_argument("--input", required=True)
    count.set_defaults(handler=_cmd_count)

    cluster = sub.add_parser("cluster", help="cut a linkage dendrogram into communities")
    cluster.add_argument("--linkage", required=True)
    cluster.add_argument("--objective", choices=("max", "min"), default="max")
    cluster.add_argument("--scheme", choices=("gap", "height"), default="gap")
    cluster.set_defaults(handler=_cmd_cluster)
    return parser


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.handler(args)
    except TooManyCutsError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    except (AvgCutError, OSError, UnicodeDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
