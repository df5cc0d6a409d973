"""Run the check catalog and render the JSON report."""

from __future__ import annotations

import json
import multiprocessing as mp
import os
import time
from concurrent.futures import ProcessPoolExecutor
from fnmatch import fnmatch
from pathlib import Path

from diffgraph.suite.checks import CHECKS, CheckResult, Context

REPORT_VERSION = 1


def _matches(cid: str, pattern: str) -> bool:
    """A pattern selects an id directly or through its base id (``C8`` selects ``C8:A18``)."""
    return fnmatch(cid, pattern) or fnmatch(cid.split(":")[0], pattern)


def selected_checks(pattern: str = "*") -> list[str]:
    base = pattern.split(":")[0]
    return [cid for cid in CHECKS if fnmatch(cid, pattern) or fnmatch(cid, base)]


def _run_one(cid: str, ctx: Context) -> list[CheckResult]:
    start = time.perf_counter()
    results = CHECKS[cid](ctx)
    elapsed = time.perf_counter() - start
    for r in results:
        r.wall_time = elapsed
    return results


_worker_ctx: Context | None = None


def _worker_init(max_order: int, seed: int, cayley_dir: str | None) -> None:
    global _worker_ctx
    _worker_ctx = Context(max_order, seed, cayley_dir)


def _worker_run(cid: str) -> list[CheckResult]:
    assert _worker_ctx is not None
    return _run_one(cid, _worker_ctx)


def run_suite(
    pattern: str = "*",
    max_order: int = 200,
    seed: int = 0,
    workers: int | None = 1,
    cayley_dir: str | Path | None = None,
) -> list[CheckResult]:
    """Run every check whose id matches ``pattern``; results come back sorted by id.

    With several workers each check runs in its own process; the results do
    not depend on the worker count.
    """
    if max_order < 1:
        raise ValueError("max_order must be positive")
    workers = workers or os.cpu_count() or 1
    names = selected_checks(pattern)
    results: list[CheckResult] = []
    if workers > 1 and len(names) > 1:
        cdir = str(cayley_dir) if cayley_dir else None
        with ProcessPoolExecutor(workers, mp_context=mp.get_context("fork"), initializer=_worker_init, initargs=(max_order, seed, cdir)) as pool:
            for batch in pool.map(_worker_run, names):
                results += batch
    else:
        ctx = Context(max_order, seed, cayley_dir)
        for cid in names:
            results += _run_one(cid, ctx)
    results = [r for r in results if _matches(r.id, pattern)]
    return sorted(results, key=lambda r: _sort_key(r.id))


def _sort_key(cid: str) -> tuple:
    base, _, sub = cid.partition(":")
    return (base[0], int(base[1:]), sub)


def summary(results: list[CheckResult]) -> dict[str, int]:
    out: dict[str, int] = {}
    for r in results:
        out[r.label] = out.get(r.label, 0) + 1
    return out


def report_dict(results: list[CheckResult], max_order: int, seed: int, timings: bool = False) -> dict:
    return {
        "version": REPORT_VERSION,
        "max_order": max_order,
        "seed": seed,
        "summary": summary(results),
        "results": [r.to_dict(timings) for r in results],
    }


def render_report(results: list[CheckResult], max_order: int, seed: int, timings: bool = False) -> str:
    """Canonical JSON: sorted keys, fixed indentation, no timings unless asked for."""
    return json.dumps(report_dict(results, max_order, seed, timings), sort_keys=True, indent=1) + "\n"


def exit_code(results: list[CheckResult]) -> int:
    return 1 if any(r.status == "FAIL" for r in results) else 0
