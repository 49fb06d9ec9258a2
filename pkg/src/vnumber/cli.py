"""Command-line experiment harness.

One executable, one task per invocation, one JSON report per run:

    vnum vfunction --ideal terai.txt --k 3 --out report.json
    vnum simon --n 4 --d 3 --mode squarefree
    vnum edge-suite
    vnum polarize-check --seed 42 --count 100

Reports carry ``schema: 1``, echo the full config (seed included), and
are deterministic given config+seed up to the ``timing_seconds`` field.
Exit status is 0 for verdicts ``pass`` and ``partial-budget``, 1 for
``fail`` and ``falsification-event``, 2 for bad input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from typing import Optional, Sequence

from . import suites
from .combi import Graph, Poset, edge_ideal, hibi_ideal
from .core import MonomialIdeal, VarContext

SCHEMA_VERSION = 1

MAX_VARS = 12
MAX_GENS = 200
MAX_EXPONENT = 9
MAX_K = 6


# ---------------------------------------------------------------------------
# input files


def _data_lines(path: str) -> list[tuple[int, str]]:
    out = []
    with open(path, "r", encoding="utf-8") as handle:
        for number, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if line:
                out.append((number, line))
    if not out:
        raise ValueError(f"{path}: no data lines")
    return out


def parse_ideal_file(path: str) -> MonomialIdeal:
    """Header ``vars: x y`` then one monomial per line, e.g. ``x^2 y``."""
    lines = _data_lines(path)
    number, header = lines[0]
    if not header.startswith("vars:"):
        raise ValueError(f"{path}:{number}: expected a 'vars:' header line")
    labels = header[len("vars:"):].split()
    if not labels:
        raise ValueError(f"{path}:{number}: the 'vars:' header names no variables")
    try:
        ctx = VarContext(labels)
    except ValueError as exc:
        raise ValueError(f"{path}:{number}: {exc}") from None
    gens = []
    for number, line in lines[1:]:
        exponents = [0] * ctx.n
        for token in line.split():
            name, _, power_str = token.partition("^")
            if name not in ctx.names:
                raise ValueError(f"{path}:{number}: unknown variable '{name}'")
            if power_str:
                try:
                    power = int(power_str)
                except ValueError:
                    raise ValueError(
                        f"{path}:{number}: bad exponent '{power_str}'"
                    ) from None
                if power < 1:
                    raise ValueError(f"{path}:{number}: exponent must be >= 1")
            else:
                power = 1
            exponents[ctx.index(name)] += power
        gens.append(ctx.monomial(exponents))
    if not gens:
        raise ValueError(f"{path}: no generators after the header")
    return MonomialIdeal(ctx, gens)


def parse_graph_file(path: str) -> Graph:
    """One edge per line as two 1-based vertex numbers, e.g. ``1 2``."""
    edges = []
    top = 0
    for number, line in _data_lines(path):
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"{path}:{number}: expected 'i j'")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"{path}:{number}: vertices must be integers") from None
        if a < 1 or b < 1:
            raise ValueError(f"{path}:{number}: vertices are 1-based")
        if a == b:
            raise ValueError(f"{path}:{number}: loop at vertex {a}")
        edge = (min(a, b) - 1, max(a, b) - 1)
        if edge in edges:
            raise ValueError(f"{path}:{number}: duplicate edge {a} {b}")
        edges.append(edge)
        top = max(top, a, b)
    return Graph.from_edges(top, edges)


def parse_poset_file(path: str) -> Poset:
    """One cover relation per line as ``i < j``, 1-based elements."""
    covers = []
    top = 0
    for number, line in _data_lines(path):
        parts = line.split()
        if len(parts) != 3 or parts[1] != "<":
            raise ValueError(f"{path}:{number}: expected 'i < j'")
        try:
            a, b = int(parts[0]), int(parts[2])
        except ValueError:
            raise ValueError(f"{path}:{number}: elements must be integers") from None
        if a < 1 or b < 1:
            raise ValueError(f"{path}:{number}: elements are 1-based")
        if a == b:
            raise ValueError(f"{path}:{number}: cover relates {a} to itself")
        covers.append((a - 1, b - 1))
        top = max(top, a, b)
    try:
        return Poset.from_covers(top, covers)
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from None


def _guard_ideal(ideal: MonomialIdeal) -> MonomialIdeal:
    if ideal.context.n > MAX_VARS:
        raise ValueError(f"refusing {ideal.context.n} variables (cap {MAX_VARS})")
    if ideal.num_gens > MAX_GENS:
        raise ValueError(f"refusing {ideal.num_gens} generators (cap {MAX_GENS})")
    top = int(ideal.matrix.max(initial=0))
    if top > MAX_EXPONENT:
        raise ValueError(f"refusing exponent {top} (cap {MAX_EXPONENT})")
    return ideal


def _load_ideal(args: argparse.Namespace) -> MonomialIdeal:
    sources = [args.ideal, args.graph, args.poset]
    if sum(s is not None for s in sources) != 1:
        raise ValueError("give exactly one of --ideal, --graph, --poset")
    if args.ideal:
        ideal = parse_ideal_file(args.ideal)
    elif args.graph:
        ideal = edge_ideal(parse_graph_file(args.graph))
    else:
        poset = parse_poset_file(args.poset)
        if 2 * poset.n > MAX_VARS:
            raise ValueError(
                f"refusing a {poset.n}-element poset (needs {2*poset.n} "
                f"variables, cap {MAX_VARS})"
            )
        ideal = hibi_ideal(poset)
    return _guard_ideal(ideal)


# ---------------------------------------------------------------------------
# report plumbing


def _config_echo(args: argparse.Namespace) -> dict:
    keys = ("ideal", "graph", "poset", "n", "d", "mode", "k", "budget",
            "seed", "count")
    return {key: getattr(args, key) for key in keys if getattr(args, key, None)
            is not None}


def _write_csv(path: str, results: dict) -> None:
    rows = results.get("report", {}).get("rows")
    if rows is None:
        rows = [{"k": 1, "per_prime": results["per_prime"]}]
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(
            ["k", "prime", "v", "alpha_module", "maximal_in_ass", "witness"])
        for row in rows:
            for entry in row["per_prime"]:
                writer.writerow([
                    row["k"],
                    " ".join(entry["prime"]),
                    entry["v"],
                    entry["alpha_module"],
                    entry["maximal_in_ass"],
                    entry["witness"],
                ])


def _run_task(args: argparse.Namespace) -> dict:
    task = args.task
    if task == "v":
        return suites.run_v(_load_ideal(args))
    if task == "vfunction":
        return suites.run_vfunction(_load_ideal(args), args.k)
    if task == "ass":
        return suites.run_ass(_load_ideal(args))
    if task == "polarize-check":
        return suites.run_polarize_check(args.seed, count=args.count, k_max=args.k)
    if task == "simon":
        return suites.run_simon(args.n, args.d, args.mode, args.budget)
    if task == "edge-suite":
        return suites.run_edge_suite(k_max=args.k)
    if task == "polymatroid-suite":
        return suites.run_polymatroid_suite(
            args.seed, count=args.count, k_max=args.k)
    if task == "hibi-suite":
        return suites.run_hibi_suite(k_max=args.k)
    if task == "depthzero-suite":
        return suites.run_depthzero_suite(
            args.seed, count=args.count, k_max=args.k,
            budget=args.budget or 200_000)
    raise ValueError(f"unknown task '{task}'")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vnum",
        description="v-number and monomial-ideal experiment harness",
    )
    sub = parser.add_subparsers(dest="task", required=True)

    def add(name: str, help_text: str, *, source=False, nd=False, seeded=False,
            k_default: Optional[int] = None, count_default: Optional[int] = None,
            budget=False):
        p = sub.add_parser(name, help=help_text)
        if source:
            p.add_argument("--ideal", help="ideal file: 'vars:' header + monomial lines")
            p.add_argument("--graph", help="graph file: 'i j' edges, 1-based")
            p.add_argument("--poset", help="poset file: 'i < j' covers, 1-based")
        if nd:
            p.add_argument("--n", type=int, required=True, help="variable count")
            p.add_argument("--d", type=int, required=True, help="generation degree")
            p.add_argument("--mode", choices=("squarefree", "monomial"),
                           required=True)
        if seeded:
            p.add_argument("--seed", type=int, default=0, help="corpus seed")
        if count_default is not None:
            p.add_argument("--count", type=int, default=count_default,
                           help="corpus size")
        if k_default is not None:
            p.add_argument("--k", type=int, default=k_default,
                           help="power horizon K")
        if budget:
            p.add_argument("--budget", type=int, default=None,
                           help="search node budget")
        p.add_argument("--out", help="write the JSON report here (default stdout)")
        p.add_argument("--csv", help="flatten the v-table to CSV (v/vfunction)")
        return p

    add("v", "v-number of one ideal", source=True)
    add("vfunction", "v(I^k) table for k = 1..K", source=True, k_default=3)
    add("ass", "associated primes, three routes", source=True)
    add("polarize-check",
        "polarization correspondence + oracle/bound/tail checks on a random corpus",
        seeded=True, count_default=100, k_default=4)
    add("simon", "extension-by-linear-quotients sweep", nd=True, budget=True)
    add("edge-suite", "chordality gate + edge-ideal v-laws, all graphs on <= 6 vertices",
        k_default=3)
    add("polymatroid-suite", "exchange + v-law on sampled polymatroidal ideals",
        seeded=True, count_default=50, k_default=3)
    add("hibi-suite", "Hibi ideal laws over all posets with <= 4 elements",
        k_default=2)
    add("depthzero-suite", "depth-zero v-law on m^d and sampled primary ideals",
        seeded=True, count_default=10, k_default=3, budget=True)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "k", None) is not None and not 1 <= args.k <= MAX_K:
        print(f"error: --k must be within 1..{MAX_K}", file=sys.stderr)
        return 2
    started = time.perf_counter()
    try:
        results = _run_task(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {
        "schema": SCHEMA_VERSION,
        "task": args.task,
        "config": _config_echo(args),
        "results": results,
        "verdict": results["verdict"],
        "timing_seconds": round(time.perf_counter() - started, 3),
    }
    payload = json.dumps(report, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(payload + "\n")
    else:
        print(payload)
    if args.csv:
        if args.task not in ("v", "vfunction"):
            print("error: --csv applies to the v and vfunction tasks",
                  file=sys.stderr)
            return 2
        _write_csv(args.csv, results)
    return 0 if report["verdict"] in ("pass", "partial-budget") else 1


if __name__ == "__main__":
    sys.exit(main())
