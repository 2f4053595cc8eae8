"""Command-line front end: aut | heur | oracle | code | bench."""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Optional

from .bouquet import DEFAULT_MAX_ENTRIES, BouquetOverflow
from .graph import GraphError, read_graph
from .group import cycle_form, format_orbits
from .heuristic import HeurConfig, heuraut
from .oracle import OracleLimitError, brute_force
from .partition import PartitionError, code, refine, transform, unit_partition
from .search import SearchConfig, UnsupportedDecomposition, vseparn

EXIT_OK, EXIT_ERROR, EXIT_PARSE, EXIT_UNSUPPORTED, EXIT_OVERFLOW = 0, 1, 2, 3, 4


@dataclass
class RunReport:
    input: str
    algorithm: str
    n: int
    order: int
    factors: list[int]
    orbits: list[list[int]]
    generators: list[str]
    metrics: dict = field(default_factory=dict)
    note: str = ""
    exact: bool = True
    wall_time: Optional[float] = None

    @property
    def factored(self) -> str:
        nontrivial = [f for f in self.factors if f != 1]
        return "*".join(map(str, nontrivial)) or "1"

    def text(self) -> str:
        lines = [f"input: {self.input}", f"algorithm: {self.algorithm}", f"n: {self.n}"]
        if self.note:
            lines.append(f"note: {self.note}")
        if not self.exact:
            lines.append("exact: unverified")
        lines.append(f"order: {self.order}")
        lines.append(f"factored: {self.factored}")
        lines.append(f"orbits: {format_orbits(self.orbits)}")
        lines.append(f"generators: {len(self.generators)}")
        lines.extend(self.generators)
        if self.metrics:
            lines.append("metrics: " + json.dumps(self.metrics, sort_keys=True))
        if self.wall_time is not None:
            lines.append(f"time: {self.wall_time:.6f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        d = asdict(self)
        d["order"] = str(self.order)  # may exceed JSON-safe integers
        d["factored"] = self.factored
        if self.wall_time is None:
            del d["wall_time"]
        return json.dumps(d, sort_keys=True)


def _report(name, algorithm, res, wall=None) -> RunReport:
    return RunReport(
        input=name, algorithm=algorithm, n=res.n, order=res.order, factors=list(res.factors),
        orbits=res.orbits, generators=[cycle_form(p) for p in res.perms()],
        metrics=res.metrics.as_dict() if algorithm != "oracle" else {},
        note=res.note, exact=res.exact, wall_time=wall)


class _Oracle:
    """Adapter giving a FullGroup the result interface used by reports."""

    def __init__(self, fg):
        from .group import GroupAccumulator

        acc = GroupAccumulator(fg.n)
        for p in fg.elements:
            acc.add_generator(p)
        self.n, self.order, self.orbits = fg.n, fg.order, fg.orbits
        self._perms = acc.perms()
        self.factors = [fg.order]
        self.note = "generators listed: group elements that merge orbits"
        self.exact = True

    def perms(self):
        return self._perms


def run_algorithm(algorithm: str, path: str, fmt: str, args) -> RunReport:
    g = read_graph(path, fmt)
    trace = (lambda line: print(line, file=sys.stderr)) if getattr(args, "trace", False) else None
    t0 = time.perf_counter()
    if algorithm == "aut":
        res = vseparn(g, cfg=SearchConfig(max_bouquet=args.max_bouquet, trace=trace))
    elif algorithm == "heur":
        res = heuraut(g, cfg=HeurConfig(k1=args.k1, nm2=args.nm2))
    else:
        res = _Oracle(brute_force(g, limit=args.limit))
    wall = time.perf_counter() - t0
    return _report(path, algorithm, res, wall if getattr(args, "time", False) else None)


def cmd_code(args) -> int:
    g = read_graph(args.path, args.format)
    p = unit_partition(g.n)
    out = [f"pi_0 = {p} code={code(g, p)}"]
    for i, x in enumerate(args.base, 1):
        p = refine(g, transform(p, x))
        out.append(f"pi_{i} = {p} code={code(g, p)}")
    if args.json:
        print(json.dumps([line.split(" = ", 1)[1] for line in out]))
    else:
        print("\n".join(out))
    return EXIT_OK


def _bench_one(job):
    path, fmt, oracle_limit, max_bouquet = job
    row = {"file": os.path.basename(path), "n": None, "k": None, "error": ""}
    try:
        g = read_graph(path, fmt)
        row["n"], row["k"] = g.n, g.k
        t0 = time.perf_counter()
        a = vseparn(g, cfg=SearchConfig(max_bouquet=max_bouquet))
        row["aut_order"], row["aut_time"] = a.order, time.perf_counter() - t0
        t0 = time.perf_counter()
        h = heuraut(g)
        row["heur_order"], row["heur_time"] = h.order, time.perf_counter() - t0
        if g.n <= oracle_limit:
            t0 = time.perf_counter()
            row["oracle_order"] = brute_force(g, limit=oracle_limit).order
            row["oracle_time"] = time.perf_counter() - t0
    except (GraphError, UnsupportedDecomposition, BouquetOverflow, PartitionError) as exc:
        row["error"] = f"{type(exc).__name__}: {exc}"
    return row


BENCH_COLUMNS = ["file", "n", "k", "aut_order", "aut_time", "heur_order", "heur_time",
                 "oracle_order", "oracle_time", "error"]


def format_table(rows) -> str:
    def cell(v):
        if v is None:
            return "-"
        return f"{v:.4f}" if isinstance(v, float) else str(v)

    table = [BENCH_COLUMNS] + [[cell(r.get(c)) for c in BENCH_COLUMNS] for r in rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(BENCH_COLUMNS))]
    return "".join("  ".join(v.ljust(w) for v, w in zip(line, widths)).rstrip() + "\n"
                   for line in table)


def bench_rows(directory: str, fmt: Optional[str], oracle_limit: int = 8,
               max_bouquet: int = DEFAULT_MAX_ENTRIES, jobs: int = 1) -> list[dict]:
    files = sorted(f for f in os.listdir(directory)
                   if os.path.isfile(os.path.join(directory, f)))
    work = []
    for f in files:
        f_fmt = fmt or ("adjacency-list" if f.endswith(".adj") else "dimacs-edge")
        work.append((os.path.join(directory, f), f_fmt, oracle_limit, max_bouquet))
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_bench_one, work))
    return [_bench_one(w) for w in work]


def cmd_bench(args) -> int:
    rows = bench_rows(args.dir, args.format_explicit, args.oracle_limit,
                      args.max_bouquet, args.jobs)
    if args.json:
        print(json.dumps(rows, default=str))
    else:
        sys.stdout.write(format_table(rows))
    if args.plot_data:
        with open(args.plot_data, "w", encoding="utf-8") as fh:
            fh.write("file,n,aut_time,heur_time\n")
            for r in rows:
                fh.write(f"{r['file']},{r['n']},{r.get('aut_time', '')},{r.get('heur_time', '')}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", default=None,
                        choices=["dimacs-edge", "adjacency-list"],
                        help="input format (default dimacs-edge)")
    common.add_argument("--trace", action="store_true", help="print search events to stderr")
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-bouquet", type=int, default=DEFAULT_MAX_ENTRIES,
                        help="cap on stored numberings")
    common.add_argument("--time", action="store_true", help="include wall time")

    parser = argparse.ArgumentParser(prog="autpart", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("aut", parents=[common], help="exact automorphism group")
    p.add_argument("path")
    p = sub.add_parser("heur", parents=[common], help="heuristic estimate")
    p.add_argument("path")
    p.add_argument("--k1", type=float, default=0.35)
    p.add_argument("--nm2", type=int, default=5)
    p = sub.add_parser("oracle", parents=[common], help="brute force (small n)")
    p.add_argument("path")
    p.add_argument("--limit", type=int, default=10)
    p = sub.add_parser("code", parents=[common], help="replay a base and print codes")
    p.add_argument("path")
    p.add_argument("base", nargs="*", type=int)
    p = sub.add_parser("bench", parents=[common], help="run all algorithms over a directory")
    p.add_argument("dir")
    p.add_argument("--oracle-limit", type=int, default=8)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--plot-data", default=None, help="write a CSV of timings")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.format_explicit = args.format
    args.format = args.format or "dimacs-edge"
    try:
        if args.command == "code":
            return cmd_code(args)
        if args.command == "bench":
            return cmd_bench(args)
        if args.command == "heur" and not (0 < args.k1 <= 1 and args.nm2 >= 1):
            print("error: need 0 < k1 <= 1 and nm2 >= 1", file=sys.stderr)
            return EXIT_ERROR
        report = run_algorithm(args.command, args.path, args.format, args)
    except (GraphError, PartitionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except UnsupportedDecomposition as exc:
        print(f"error: unsupported decomposition: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except BouquetOverflow as exc:
        print(f"error: bouquet overflow: {exc}", file=sys.stderr)
        return EXIT_OVERFLOW
    except OracleLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    sys.stdout.write(report.to_json() + "\n" if args.json else report.text())
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
