"""Command-line front end and benchmark harness.

Runs the truth-table -> entropy order -> BDD -> disjoint cubes ->
minimized SOP pipeline on a PLA file or a minterm list, optionally
cross-checks against the exact Quine-McCluskey cover, and emits
machine-readable JSON reports (plus an optional CSV table).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from . import bdd, minimizer, qm
from .bdd import FunctionHandle, VariableOrder, build_from_truthtable
from .boolfn import (
    Cover,
    Cube,
    TruthTable,
    cube_from_text,
    cube_minterms,
    format_cube_pla,
    literal_count,
    truthtable_from_minterms,
)
from .minimizer import default_names, format_expression
from .ordering import entropy_order

REPORT_SCHEMA = "dsopmin-report/1"

STAGES = ("order", "build", "dsop", "minimize", "oracle")


class PlaError(ValueError):
    pass


@dataclass
class PipelineConfig:
    ordering: str = "entropy"  # entropy | given | sift
    emit: Tuple[str, ...] = ("sop",)
    oracle: bool = False
    names: Optional[List[str]] = None
    seed: int = 0
    count: int = 0
    record_timings: bool = True


@dataclass
class StatsReport:
    n: int
    order: Tuple[int, ...]
    bdd_nodes: int
    one_paths: int
    dsop_cubes: int
    sop_cubes: int
    sop_literals: int
    oracle_cubes: Optional[int] = None
    oracle_literals: Optional[int] = None
    timings_ms: Dict[str, float] = field(default_factory=dict)

    def check(self) -> List[str]:
        """Invariant violations, empty when the record is consistent."""
        problems = []
        if self.dsop_cubes != self.one_paths:
            problems.append(f"dsop_cubes {self.dsop_cubes} != one_paths {self.one_paths}")
        if self.sop_cubes > self.dsop_cubes:
            problems.append(f"sop_cubes {self.sop_cubes} > dsop_cubes {self.dsop_cubes}")
        if self.oracle_cubes is not None and self.oracle_cubes > self.sop_cubes:
            problems.append(f"oracle_cubes {self.oracle_cubes} > sop_cubes {self.sop_cubes}")
        return problems

    def to_record(self) -> Dict[str, object]:
        rec: Dict[str, object] = {
            "schema": REPORT_SCHEMA,
            "n": self.n,
            "order": list(self.order),
            "bdd_nodes": self.bdd_nodes,
            "one_paths": self.one_paths,
            "dsop_cubes": self.dsop_cubes,
            "sop_cubes": self.sop_cubes,
            "sop_literals": self.sop_literals,
            "oracle_cubes": self.oracle_cubes,
            "oracle_literals": self.oracle_literals,
        }
        for stage in STAGES:
            rec[f"time_{stage}_ms"] = self.timings_ms.get(stage, 0.0)
        return rec


def parse_pla(text: str) -> Tuple[TruthTable, Optional[List[str]]]:
    """Parse the single-output PLA subset; listed cubes define the ON-set."""
    n: Optional[int] = None
    out_count: Optional[int] = None
    names: Optional[List[str]] = None
    cubes: List[Tuple[str, str]] = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("."):
            parts = line.split()
            key = parts[0]
            if key == ".i":
                n = int(parts[1])
            elif key == ".o":
                out_count = int(parts[1])
                if out_count != 1:
                    raise PlaError("only single-output functions are supported (.o 1)")
            elif key == ".ilb":
                names = parts[1:]
            elif key in (".ob", ".p"):
                pass
            elif key == ".e":
                break
            else:
                raise PlaError(f"unsupported PLA directive {key}")
            continue
        parts = line.split()
        if len(parts) != 2:
            raise PlaError(f"malformed cube line {line!r}")
        cubes.append((parts[0], parts[1]))

    if n is None:
        raise PlaError("missing .i directive")
    if out_count is None:
        raise PlaError("missing .o directive")
    if names is not None and len(names) != n:
        raise PlaError(".ilb name count does not match .i")

    bits = 0
    for in_part, out_part in cubes:
        if out_part == "-" or out_part == "~":
            raise PlaError("don't-care outputs not supported (completely specified only)")
        if out_part not in ("0", "1"):
            raise PlaError(f"malformed output field {out_part!r}")
        cube = cube_from_text(in_part, n)
        if out_part == "1":
            for m in cube_minterms(cube):
                bits |= 1 << m
    return TruthTable(n, bits), names


def format_pla(cover: Cover, names: Optional[Sequence[str]] = None) -> str:
    """Write a cover in the same PLA subset parse_pla accepts."""
    lines = [f".i {cover.n}", ".o 1"]
    if names is not None:
        lines.append(".ilb " + " ".join(names))
    lines.append(f".p {len(cover.cubes)}")
    for cube in cover:
        lines.append(f"{format_cube_pla(cube)} 1")
    lines.append(".e")
    return "\n".join(lines) + "\n"


def parse_minterms(spec: str) -> TruthTable:
    """Parse the "N:i,i,..." shorthand; "N:" means the constant-0 function."""
    try:
        head, _, tail = spec.partition(":")
        n = int(head)
        minterms = [int(t) for t in tail.split(",") if t.strip()]
    except ValueError:
        raise ValueError(f"malformed minterm spec {spec!r}") from None
    return truthtable_from_minterms(n, minterms)


def run_pipeline(tt: TruthTable, cfg: PipelineConfig) -> Tuple[StatsReport, Dict[str, Cover]]:
    """Execute the configured pipeline; returns stats plus dsop/sop covers."""
    timings: Dict[str, float] = {}

    def clock(stage: str, start: float) -> None:
        if cfg.record_timings:
            timings[stage] = (time.perf_counter() - start) * 1000.0

    t = time.perf_counter()
    if cfg.ordering == "entropy":
        order = entropy_order(tt)
    elif cfg.ordering in ("given", "sift"):
        order = VariableOrder.identity(tt.n)
    else:
        raise ValueError(f"unknown ordering mode {cfg.ordering!r}")
    clock("order", t)

    t = time.perf_counter()
    h = build_from_truthtable(tt, order)
    if cfg.ordering == "sift":
        order = bdd.sift_paths(h.manager, h)
    nodes = bdd.node_count(h)
    clock("build", t)

    t = time.perf_counter()
    dsop = bdd.enumerate_one_paths(h)
    p1 = bdd.one_path_count(h)
    clock("dsop", t)

    t = time.perf_counter()
    sop = minimizer.simplify(dsop)
    sop = minimizer.expand(sop, h)
    sop = minimizer.irredundant(sop, h)
    clock("minimize", t)

    oracle_cubes = oracle_literals = None
    if cfg.oracle:
        t = time.perf_counter()
        oracle = qm.exact_cover(tt)
        oracle_cubes = len(oracle.cubes)
        oracle_literals = literal_count(oracle)
        clock("oracle", t)

    report = StatsReport(
        n=tt.n,
        order=order.perm,
        bdd_nodes=nodes,
        one_paths=p1,
        dsop_cubes=len(dsop.cubes),
        sop_cubes=len(sop.cubes),
        sop_literals=literal_count(sop),
        oracle_cubes=oracle_cubes,
        oracle_literals=oracle_literals,
        timings_ms=timings,
    )
    return report, {"dsop": dsop, "sop": sop}


def emit_report(reports: Sequence[StatsReport], path: str) -> None:
    """JSON record array; byte-stable for identical report contents."""
    payload = [r.to_record() for r in reports]
    with open(path, "w") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def emit_csv(reports: Sequence[StatsReport], path: str) -> None:
    """Delimited table for spreadsheet import, one row per run."""
    records = [r.to_record() for r in reports]
    fields = ["schema", "n", "order", "bdd_nodes", "one_paths", "dsop_cubes",
              "sop_cubes", "sop_literals", "oracle_cubes", "oracle_literals"]
    fields += [f"time_{s}_ms" for s in STAGES]
    with open(path, "w", newline="") as fh:
        writer = csv.DictWriter(fh, fieldnames=fields)
        writer.writeheader()
        for rec in records:
            rec = dict(rec)
            rec["order"] = " ".join(str(v) for v in rec["order"])
            writer.writerow(rec)


def random_table(n: int, rng: random.Random) -> TruthTable:
    return TruthTable(n, rng.getrandbits(1 << n))


def run_benchmark(cfg: PipelineConfig, n: int) -> List[StatsReport]:
    """Seeded batch of random functions through the pipeline."""
    rng = random.Random(cfg.seed)
    reports = []
    for _ in range(cfg.count):
        tt = random_table(n, rng)
        report, _covers = run_pipeline(tt, cfg)
        reports.append(report)
    return reports


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dsopmin",
        description="Two-level minimization via BDD one-path DSOP extraction",
    )
    src = parser.add_mutually_exclusive_group()
    src.add_argument("--input", metavar="FILE.pla", help="single-output PLA input")
    src.add_argument("--minterms", metavar="N:LIST", help='minterm shorthand, e.g. "4:1,5,6,9"')
    src.add_argument("--benchmark", type=int, metavar="COUNT",
                     help="run COUNT seeded random functions instead of one input")
    parser.add_argument("--order", choices=["entropy", "given", "sift"], default="entropy")
    parser.add_argument("--emit", default="sop", help="comma-separated subset of dsop,sop")
    parser.add_argument("--oracle", choices=["qm"], help="cross-check with the exact minimizer")
    parser.add_argument("--report", metavar="PATH", help="write the JSON report here")
    parser.add_argument("--csv", metavar="PATH", help="also write a CSV table")
    parser.add_argument("--names", help="comma-separated variable names")
    parser.add_argument("--seed", type=int, default=0, help="benchmark RNG seed")
    parser.add_argument("--bench-vars", type=int, default=4, help="benchmark variable count")
    parser.add_argument("--no-timing", action="store_true",
                        help="zero the timing fields (byte-stable reports)")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)

    emit = tuple(s for s in args.emit.split(",") if s)
    for s in emit:
        if s not in ("dsop", "sop"):
            parser.error(f"unknown emit kind {s!r}")

    names = args.names.split(",") if args.names else None
    cfg = PipelineConfig(
        ordering=args.order,
        emit=emit,
        oracle=args.oracle == "qm",
        names=names,
        seed=args.seed,
        count=args.benchmark or 0,
        record_timings=not args.no_timing,
    )

    try:
        if args.benchmark is not None:
            reports = run_benchmark(cfg, args.bench_vars)
            outputs = None
        elif args.input:
            with open(args.input) as fh:
                tt, pla_names = parse_pla(fh.read())
            if cfg.names is None:
                cfg.names = pla_names
            report, outputs = run_pipeline(tt, cfg)
            reports = [report]
        elif args.minterms:
            tt = parse_minterms(args.minterms)
            report, outputs = run_pipeline(tt, cfg)
            reports = [report]
        else:
            parser.error("one of --input, --minterms, --benchmark is required")
            return 2
    except (OSError, ValueError) as exc:
        print(f"dsopmin: error: {exc}", file=sys.stderr)
        return 2

    failures = [p for r in reports for p in r.check()]

    if outputs is not None:
        tt_names = cfg.names or default_names(reports[0].n)
        if len(tt_names) != reports[0].n:
            print("dsopmin: error: variable name count does not match n", file=sys.stderr)
            return 2
        if "dsop" in emit:
            print(f"dsop ({reports[0].dsop_cubes} cubes): "
                  f"{format_expression(outputs['dsop'], tt_names)}")
        if "sop" in emit:
            print(f"sop ({reports[0].sop_cubes} cubes, {reports[0].sop_literals} literals): "
                  f"{format_expression(outputs['sop'], tt_names)}")
        order_names = " ".join(tt_names[v] for v in reports[0].order)
        print(f"order: {order_names}  nodes: {reports[0].bdd_nodes}  "
              f"one-paths: {reports[0].one_paths}")
        if reports[0].oracle_cubes is not None:
            print(f"oracle: {reports[0].oracle_cubes} cubes, "
                  f"{reports[0].oracle_literals} literals")
    else:
        print(f"benchmark: {len(reports)} runs, n={args.bench_vars}, seed={cfg.seed}")

    if args.report:
        try:
            emit_report(reports, args.report)
        except OSError as exc:
            print(f"dsopmin: error: {exc}", file=sys.stderr)
            return 2
    if args.csv:
        try:
            emit_csv(reports, args.csv)
        except OSError as exc:
            print(f"dsopmin: error: {exc}", file=sys.stderr)
            return 2

    if failures:
        for p in failures:
            print(f"dsopmin: invariant violation: {p}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
