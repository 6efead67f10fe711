"""Seeded Monte Carlo sweeps over (n, a, b, edge multiplier) cells.

Trial i of a cell uses seed ``base_seed + i`` for both the random hypergraph
and the solver, so any trial can be replayed alone.  Aggregation only sums
per-trial records and sorts by seed, so the summary does not depend on the
order in which trials ran.
"""

from __future__ import annotations

import csv
import json
import math
import time
import warnings
from dataclasses import asdict, dataclass, field
from pathlib import Path

from .alon import AlonParams, alon_edge_budget, expected_recolorings_bound, a_prime, solve_alon
from .errors import AttemptsExhausted, InvalidParams, RegimeWarning
from .hypergraph import gen_random_uniform
from .theorem1 import BAD_EVENTS, SolverParams, bad_event_bounds, edge_budget_thm1, solve_theorem1

METHODS = ("theorem1", "alon")
Z = 3.0


def wilson_interval(successes: int, trials: int, z: float = Z) -> tuple[float, float]:
    if trials <= 0 or not 0 <= successes <= trials:
        raise InvalidParams(f"need 0 <= successes <= trials, trials > 0; got {successes}/{trials}")
    phat = successes / trials
    denom = 1 + z * z / trials
    center = (phat + z * z / (2 * trials)) / denom
    half = z * math.sqrt(phat * (1 - phat) / trials + z * z / (4 * trials * trials)) / denom
    return max(0.0, center - half), min(1.0, center + half)


@dataclass(frozen=True)
class ExperimentConfig:
    grid: tuple[tuple[int, int, int, float], ...]
    vertices: int
    trials: int = 100
    base_seed: int = 0
    method: str = "theorem1"
    out: str | None = None
    export_csv: bool = False

    def __post_init__(self):
        if self.trials < 1:
            raise InvalidParams(f"trials must be >= 1, got {self.trials}")
        if self.method not in METHODS:
            raise InvalidParams(f"method must be one of {METHODS}, got {self.method!r}")
        if not self.grid:
            raise InvalidParams("empty grid")
        for n, a, b, mult in self.grid:
            if mult <= 0:
                raise InvalidParams(f"multiplier must be positive, got {mult}")
            if self.vertices < n:
                raise InvalidParams(f"need at least n = {n} vertices, got {self.vertices}")


def cell_edge_count(method: str, n: int, a: int, b: int, multiplier: float) -> int:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RegimeWarning)
        budget = edge_budget_thm1(n, a, b) if method == "theorem1" else alon_edge_budget(n, a, b)
    return math.floor(multiplier * budget)


def run_trial(method: str, n: int, a: int, b: int, v: int, m: int, seed: int) -> dict:
    """One independent run; the returned record is everything aggregation needs."""
    H = gen_random_uniform(v, n, m, seed)
    if method == "theorem1":
        out = solve_theorem1(H, SolverParams(a, b, seed))
        return {"seed": seed, "status": out.status, "recolors": len(out.events),
                "events": {k: int(f) for k, f in out.report.flags().items()},
                "unexplained": len(out.report.unexplained)}
    try:
        _, ledger = solve_alon(H, AlonParams(a, b, seed))
    except AttemptsExhausted:
        return {"seed": seed, "status": "exhausted", "recolors": 0, "attempts": None}
    return {"seed": seed, "status": "proper", "recolors": len(ledger.repairs), "attempts": ledger.attempt}


@dataclass
class CellSummary:
    n: int
    a: int
    b: int
    multiplier: float
    edges: int
    trials: int
    successes: int
    success_rate: float
    mean_recolors: float
    seeds: tuple[int, int]
    event_counts: dict[str, int] = field(default_factory=dict)
    frequencies: dict[str, float] = field(default_factory=dict)
    wilson: dict[str, tuple[float, float]] = field(default_factory=dict)
    bounds: dict[str, float] = field(default_factory=dict)
    exceeded: list[str] = field(default_factory=list)
    unclassified_failures: int = 0
    recolor_bound: float | None = None

    @property
    def flagged(self) -> bool:
        return bool(self.exceeded)


@dataclass
class ExperimentReport:
    method: str
    cells: list[CellSummary]
    records: list[list[dict]]
    wall_clock: float = field(default=0.0, compare=False)

    def summary(self) -> dict:
        return {"method": self.method, "wall_clock_s": self.wall_clock,
                "cells": [asdict(c) | {"flagged": c.flagged} for c in self.cells]}


def aggregate(method: str, cell: tuple[int, int, int, float], edges: int, records: list[dict]) -> CellSummary:
    n, a, b, mult = cell
    records = sorted(records, key=lambda r: r["seed"])
    trials = len(records)
    successes = sum(r["status"] == "proper" for r in records)
    s = CellSummary(n, a, b, mult, edges, trials, successes, successes / trials,
                    sum(r["recolors"] for r in records) / trials,
                    (records[0]["seed"], records[-1]["seed"]))
    if method == "theorem1":
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            s.bounds = bad_event_bounds(n, a, b)
        for ev in BAD_EVENTS:
            k = sum(r["events"][ev] for r in records)
            s.event_counts[ev] = k
            s.frequencies[ev] = k / trials
            lo, hi = wilson_interval(k, trials)
            s.wilson[ev] = (lo, hi)
            # conservative: flag unless the whole 3-sigma interval sits at or below the bound
            if hi > s.bounds[ev]:
                s.exceeded.append(ev)
        s.unclassified_failures = sum(r["status"] != "proper" and
                                      (not any(r["events"].values()) or r["unexplained"] > 0)
                                      for r in records)
    else:
        ap = a_prime(a, n)
        if ap >= b:
            s.recolor_bound = float(expected_recolorings_bound(ap, b, n, edges))
    return s


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    start = time.perf_counter()
    cells, all_records = [], []
    for cell in config.grid:
        n, a, b, mult = cell
        m = cell_edge_count(config.method, n, a, b, mult)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RegimeWarning)
            records = [run_trial(config.method, n, a, b, config.vertices, m, config.base_seed + i)
                       for i in range(config.trials)]
        cells.append(aggregate(config.method, cell, m, records))
        all_records.append(sorted(records, key=lambda r: r["seed"]))
    report = ExperimentReport(config.method, cells, all_records, time.perf_counter() - start)
    if config.out:
        write_report(report, config.out, config.export_csv)
    return report


def write_report(report: ExperimentReport, out: str, csv_grid: bool = False) -> None:
    """``trials.jsonl`` and ``summary.json`` (plus ``grid.csv`` on request) under directory ``out``."""
    d = Path(out)
    d.mkdir(parents=True, exist_ok=True)
    with open(d / "trials.jsonl", "w") as fh:
        for cell, recs in zip(report.cells, report.records):
            for r in recs:
                fh.write(json.dumps({"n": cell.n, "a": cell.a, "b": cell.b, "multiplier": cell.multiplier} | r) + "\n")
    (d / "summary.json").write_text(json.dumps(report.summary(), indent=2) + "\n")
    if csv_grid:
        write_grid_csv(report, d / "grid.csv")


def write_grid_csv(report: ExperimentReport, path) -> None:
    cols = ["n", "a", "b", "multiplier", "edges", "trials", "success_rate", "mean_recolors", "flagged"]
    cols += [f"freq_{e}" for e in BAD_EVENTS] if report.method == "theorem1" else ["recolor_bound"]
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(cols)
        for c in report.cells:
            row = [c.n, c.a, c.b, c.multiplier, c.edges, c.trials, c.success_rate, c.mean_recolors, c.flagged]
            row += [c.frequencies[e] for e in BAD_EVENTS] if report.method == "theorem1" else [c.recolor_bound]
            w.writerow(row)
