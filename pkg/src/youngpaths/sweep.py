"""Exhaustive property sweeps over all small partitions."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Any, Iterator

from .closedforms import closed_form_suite
from .gram import gram_determinant, verify_identities
from .lgv import (
    DEFAULT_SYSTEM_BUDGET,
    SystemBudgetExceeded,
    check_determinant_one,
    contiguous_selections,
    enumerate_disjoint_systems,
    scan_unit_selections,
    se_unit_selections,
    verify_lgv,
)
from .partition import Partition, conjugate, durfee, enumerate_partitions, truncate
from .patharray import (
    DEFAULT_PATH_LIMIT,
    PathLimitExceeded,
    count_paths,
    enumerate_paths,
    path_count_array,
)
from .report import Check

PROPERTIES = ("array-oracle", "dets", "lgv-oracle", "identities", "closed-forms", "duality", "truncation")
PER_PARTITION = tuple(p for p in PROPERTIES if p != "closed-forms")


@dataclass(frozen=True)
class SweepConfig:
    max_cells: int = 14
    properties: tuple[str, ...] = PROPERTIES
    path_budget: int = DEFAULT_PATH_LIMIT
    system_budget: int = DEFAULT_SYSTEM_BUDGET
    lgv_max_order: int = 3
    workers: int | None = None
    explore: bool = False
    explore_samples: int | None = None
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.max_cells < 0:
            raise ValueError("max_cells must be >= 0")
        if not self.properties:
            raise ValueError("at least one property is required")
        unknown = [p for p in self.properties if p not in PROPERTIES]
        if unknown:
            raise ValueError(f"unknown properties: {', '.join(unknown)}")
        if self.path_budget < 1 or self.system_budget < 1:
            raise ValueError("budgets must be positive")
        if self.workers is not None and self.workers < 1:
            raise ValueError("workers must be >= 1")

    def describe(self) -> dict[str, Any]:
        # worker count does not affect results, so it stays out of reports
        doc = asdict(self)
        doc.pop("workers")
        doc["properties"] = list(self.properties)
        return doc


@dataclass
class Outcome:
    """Checks and inconclusive items for one partition (or one global suite)."""

    partition: Partition | None
    checks: list[tuple[str, Check]] = field(default_factory=list)
    inconclusive: list[tuple[str, dict[str, Any]]] = field(default_factory=list)
    exploratory: list[dict[str, Any]] = field(default_factory=list)


def _array_oracle(p: Partition, cfg: SweepConfig, out: Outcome) -> None:
    d = path_count_array(p)
    boxes = list(p.boxes())
    for a in boxes:
        for b in boxes:
            params = {"from": list(a), "to": list(b)}
            dp = count_paths(p, a, b)
            try:
                brute = len(enumerate_paths(p, a, b, limit=cfg.path_budget))
            except PathLimitExceeded:
                out.inconclusive.append(("array-oracle", params))
                continue
            out.checks.append(("array-oracle", Check("paths-vs-dp", params, dp, brute)))
    for i, j in boxes:
        direct = count_paths(p, p.foot(j), p.row_end(i))
        out.checks.append(("array-oracle", Check("array-entry", {"i": i, "j": j}, d[i, j], direct)))


def _dets(p: Partition, cfg: SweepConfig, out: Outcome) -> None:
    for check in check_determinant_one(p).checks:
        out.checks.append(("dets", check))
    d = path_count_array(p)
    for k in range(1, durfee(p) + 1):
        out.checks.append(("dets", Check("gram", {"k": k}, gram_determinant(p, k, d), 1)))


def _lgv_oracle(p: Partition, cfg: SweepConfig, out: Outcome) -> None:
    d = path_count_array(p)
    for sel in contiguous_selections(p, cfg.lgv_max_order):
        params = {"rows": list(sel.rows), "cols": list(sel.cols)}
        rep = verify_lgv(p, sel, cfg.system_budget, d)
        if rep.signed_count is None:
            out.inconclusive.append(("lgv-oracle", params))
            continue
        out.checks.append(("lgv-oracle", Check("lgv", params, rep.signed_count, rep.determinant)))
    for sel in se_unit_selections(p, d):
        params = {"rows": list(sel.rows), "cols": list(sel.cols)}
        try:
            systems = enumerate_disjoint_systems(p, sel.cols, sel.rows, cfg.system_budget)
        except SystemBudgetExceeded:
            out.inconclusive.append(("lgv-oracle", params))
            continue
        hooks = sum(1 for s in systems if s.is_identity() and all(path.is_hook() for path in s.paths))
        out.checks.append(("lgv-oracle", Check("unique-systems", params, len(systems), 1)))
        out.checks.append(("lgv-oracle", Check("hook-systems", params, hooks, 1)))


def _identities(p: Partition, cfg: SweepConfig, out: Outcome) -> None:
    for check in verify_identities(p).checks:
        out.checks.append(("identities", check))


def _duality(p: Partition, cfg: SweepConfig, out: Outcome) -> None:
    d, dc = path_count_array(p), path_count_array(conjugate(p))
    for i, j in p.boxes():
        out.checks.append(("duality", Check("transpose", {"i": i, "j": j}, dc[j, i], d[i, j])))


def _truncation(p: Partition, cfg: SweepConfig, out: Outcome) -> None:
    if not p:
        return
    d = path_count_array(p)
    rows_cut = truncate(p, 1, 0)
    drow = path_count_array(rows_cut)
    for (i, j) in rows_cut.boxes():
        out.checks.append(("truncation", Check("drop-row", {"i": i, "j": j}, drow[i, j], d[i + 1, j])))
    cols_cut = truncate(p, 0, 1)
    dcut = path_count_array(cols_cut)
    for (i, j) in cols_cut.boxes():
        out.checks.append(("truncation", Check("drop-col", {"i": i, "j": j}, dcut[i, j], d[i, j + 1])))


_SUITES = {
    "array-oracle": _array_oracle,
    "dets": _dets,
    "lgv-oracle": _lgv_oracle,
    "identities": _identities,
    "duality": _duality,
    "truncation": _truncation,
}


def check_partition(p: Partition, cfg: SweepConfig) -> Outcome:
    out = Outcome(p)
    for prop in cfg.properties:
        if prop in _SUITES:
            _SUITES[prop](p, cfg, out)
    if cfg.explore:
        scan = scan_unit_selections(p, cfg.lgv_max_order, cfg.explore_samples, cfg.seed)
        for sel, det in scan.outside_certified():
            out.exploratory.append({"rows": list(sel.rows), "cols": list(sel.cols), "det": str(det)})
    return out


def _closed_forms() -> Outcome:
    out = Outcome(None)
    for report in closed_form_suite():
        for check in report.checks:
            params = dict(report.subject or {})
            params.update(check.params)
            out.checks.append(("closed-forms", Check(check.name, params, check.value, check.expected)))
    return out


def _run_one(args: tuple[Partition, SweepConfig]) -> Outcome:
    return check_partition(*args)


def run_outcomes(cfg: SweepConfig) -> Iterator[Outcome]:
    """Outcomes in deterministic order: closed forms first, then partitions by size."""
    if "closed-forms" in cfg.properties:
        yield _closed_forms()
    if not any(p in cfg.properties for p in PER_PARTITION) and not cfg.explore:
        return
    parts = list(enumerate_partitions(cfg.max_cells))
    workers = cfg.workers or os.cpu_count() or 1
    if workers == 1:
        yield from (check_partition(p, cfg) for p in parts)
        return
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map preserves input order regardless of completion order
        yield from pool.map(_run_one, [(p, cfg) for p in parts], chunksize=8)


@dataclass
class SweepReport:
    config: SweepConfig
    partitions: int = 0
    summary: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[dict[str, Any]] = field(default_factory=list)
    inconclusive: list[dict[str, Any]] = field(default_factory=list)
    exploratory: list[dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_dict(self) -> dict[str, Any]:
        doc: dict[str, Any] = {
            "config": self.config.describe(),
            "partitions": self.partitions,
            "summary": self.summary,
            "failures": self.failures,
            "inconclusive": self.inconclusive,
        }
        if self.config.explore:
            doc["exploratory"] = self.exploratory
        doc["pass"] = self.passed
        return doc


def run_sweep(cfg: SweepConfig) -> SweepReport:
    report = SweepReport(cfg)
    report.summary = {p: {"checks": 0, "failures": 0, "inconclusive": 0} for p in cfg.properties}
    for out in run_outcomes(cfg):
        where = {"partition": list(out.partition.parts)} if out.partition is not None else {}
        if out.partition is not None:
            report.partitions += 1
        for prop, check in out.checks:
            report.summary[prop]["checks"] += 1
            if not check.passed:
                report.summary[prop]["failures"] += 1
                report.failures.append({"property": prop, **where, "check": check.name, **check.to_dict()})
        for prop, params in out.inconclusive:
            report.summary[prop]["inconclusive"] += 1
            report.inconclusive.append({"property": prop, **where, **params})
        for item in out.exploratory:
            report.exploratory.append({**where, **item})
    return report
