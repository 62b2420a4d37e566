"""Runs the check catalog for one configuration."""

from __future__ import annotations

import os
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .checks import CATALOG, CheckResult, Workspace
from .config import SuiteConfig


@dataclass
class Report:
    config: SuiteConfig
    results: list[CheckResult]
    meta: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed is not False for r in self.results)

    def by_criterion(self) -> dict[int, list[CheckResult]]:
        out: dict[int, list[CheckResult]] = {}
        for r in self.results:
            out.setdefault(r.criterion, []).append(r)
        return out


def _run_one(ws: Workspace, entry) -> CheckResult:
    start = time.perf_counter()
    if entry.needs_exact and not ws.exact:
        res = CheckResult(entry.id, entry.criterion, entry.fn.__doc__ or entry.fn.__name__, "", None, 0.0, None, 0,
                          status="skipped", reason="needs the exact regime; this root system is floating")
    else:
        try:
            res = entry.fn(ws)
        except Exception as exc:  # a broken check must show up as a failure
            res = CheckResult(entry.id, entry.criterion, entry.fn.__name__, "", None, 0.0, False, 0,
                              status="error", reason=f"{type(exc).__name__}: {exc}",
                              details={"traceback": traceback.format_exc()})
    res.wall_time = time.perf_counter() - start
    return res


def run_verification(cfg: SuiteConfig, only: list[str] | None = None, threads: int | None = None) -> Report:
    """Run the catalog (or the listed check ids) and collect the results in catalog order."""
    start = time.perf_counter()
    ws = Workspace(cfg)
    entries = [e for e in CATALOG if only is None or e.id in only or str(e.criterion) in only]
    threads = threads or int(os.environ.get("DUNKLSB_THREADS", "1"))
    if threads > 1:
        # the shared tables are built up front so workers only read them
        ws.basis
        ws.table()
        with ThreadPoolExecutor(threads) as pool:
            results = list(pool.map(lambda e: _run_one(ws, e), entries))
    else:
        results = [_run_one(ws, e) for e in entries]
    timings = {r.id: round(r.wall_time, 3) for r in results}
    meta = {
        "root_system": {"dimension": ws.N, "roots": len(ws.rs), "group_order": ws.group.order,
                        "regime": ws.rs.regime},
        "gamma": ws.ctx.gamma,
        "timings": timings,
        "total_time": round(time.perf_counter() - start, 3),
    }
    return Report(cfg, results, meta)
