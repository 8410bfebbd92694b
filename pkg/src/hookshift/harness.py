"""Sweep driver: run the identity catalog over all partitions up to a
bound, in parallel, and emit deterministic machine-readable reports.

The work unit is one (identity, n) pair; a worker enumerates the
partitions of n itself, so nothing large crosses process boundaries.
Results are merged by a deterministic sort, which makes report contents
independent of worker count and completion order.  Wall-clock time lives
in a separate "timing" object excluded from the determinism guarantee.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import FIRST_COMPLETED, ProcessPoolExecutor, wait
from dataclasses import dataclass, field

from .identities import Fault, IdentityId, Workspace, check_identity
from .partitions import enumerate_partitions
from .schur import check_schur_recurrences, check_theorem_1_2, schur_lhs, schur_rhs, to_monomial

CATALOG = tuple(IdentityId)
_FORMATS = ("json", "csv", "text")


@dataclass(frozen=True)
class SweepConfig:
    """What to sweep and how.

    ``identities`` may be a tuple of IdentityId or the string "all"; the
    selection is always normalized to catalog order.  ``parallelism`` is a
    worker count or "auto" (one worker per CPU).  ``fault`` is the test
    hook for sensitivity runs and leaves ordinary sweeps untouched.
    """

    max_n_identities: int = 25
    max_n_theorem_1_2: int = 9
    max_n_oracles: int = 8
    identities: object = "all"
    parallelism: object = "auto"
    output_format: str = "json"
    fail_fast: bool = False
    capture_witnesses: bool = False
    fault: Fault | None = None

    def __post_init__(self):
        for name in ("max_n_identities", "max_n_theorem_1_2", "max_n_oracles"):
            v = getattr(self, name)
            if not isinstance(v, int) or v < 1:
                raise ValueError(f"{name} must be a positive integer, got {v!r}")
        if self.max_n_oracles > self.max_n_identities:
            raise ValueError("oracle bound must not exceed the identity bound")
        if self.output_format not in _FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")
        if self.identities != "all":
            ids = tuple(self.identities)
            for i in ids:
                if not isinstance(i, IdentityId):
                    raise ValueError(f"not an IdentityId: {i!r}")
            object.__setattr__(self, "identities", ids)
        if self.parallelism != "auto":
            if not isinstance(self.parallelism, int) or self.parallelism < 1:
                raise ValueError("parallelism must be 'auto' or a positive integer")

    def selected_identities(self) -> tuple[IdentityId, ...]:
        if self.identities == "all":
            return CATALOG
        chosen = set(self.identities)
        return tuple(i for i in CATALOG if i in chosen)

    def workers(self) -> int:
        if self.parallelism == "auto":
            return os.cpu_count() or 1
        return self.parallelism

    def to_json(self) -> dict:
        return {
            "max_n_identities": self.max_n_identities,
            "max_n_theorem_1_2": self.max_n_theorem_1_2,
            "max_n_oracles": self.max_n_oracles,
            "identities": [i.value for i in self.selected_identities()],
            "parallelism": self.parallelism,
            "output_format": self.output_format,
            "fail_fast": self.fail_fast,
            "capture_witnesses": self.capture_witnesses,
            "fault": self.fault.to_json() if self.fault else None,
        }


@dataclass
class SweepReport:
    """Aggregated sweep results; deterministic given the config."""

    config: SweepConfig
    identity_rows: list[dict] = field(default_factory=list)
    theorem_rows: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    def per_identity(self) -> dict[str, dict]:
        out: dict[str, dict] = {}
        for row in self.identity_rows:
            agg = out.setdefault(
                row["identity"], {"checked": 0, "passed": 0, "failures": []}
            )
            agg["checked"] += row["checked"]
            agg["passed"] += row["passed"]
            agg["failures"].extend(row["failures"])
            if self.config.capture_witnesses:
                agg.setdefault("witnesses", []).extend(row.get("witnesses", []))
        return out

    def totals(self) -> dict[str, int]:
        checked = sum(r["checked"] for r in self.identity_rows)
        passed = sum(r["passed"] for r in self.identity_rows)
        for row in self.theorem_rows:
            for key in ("equality", "recurrences", "oracle"):
                if row[key] is not None:
                    checked += 1
                    passed += row[key] == "pass"
        return {"checked": checked, "passed": passed, "failed": checked - passed}

    @property
    def all_passed(self) -> bool:
        return self.totals()["failed"] == 0

    def to_json(self) -> dict:
        return {
            "config": self.config.to_json(),
            "identities": self.per_identity(),
            "theorem_1_2": self.theorem_rows,
            "totals": self.totals(),
            "timing": {"wall_seconds": self.wall_time},
        }


# Worker-side state: one workspace per process, built from the fault once.
_WORKER: dict = {}


def _init_worker(fault: Fault | None, capture: bool, max_n_oracles: int, thm_limit: int):
    _WORKER["workspace"] = Workspace(fault)
    _WORKER["capture"] = capture
    _WORKER["max_n_oracles"] = max_n_oracles
    _WORKER["thm_limit"] = thm_limit


def _run_task(task: tuple) -> dict:
    kind, name, n = task
    if kind == "identity":
        return _identity_task(name, n)
    return _theorem_task(n)


def _identity_task(name: str, n: int) -> dict:
    identity = IdentityId(name)
    ws = _WORKER["workspace"]
    capture = _WORKER["capture"]
    checked = passed = 0
    failures: list[dict] = []
    witnesses: list[dict] = []
    for lam in enumerate_partitions(n):
        for outcome in check_identity(identity, lam, ws, capture=capture):
            checked += 1
            if outcome.passed:
                passed += 1
                if capture:
                    witnesses.append(outcome.to_json())
            else:
                failures.append(_failure_json(outcome))
    row = {
        "kind": "identity",
        "identity": identity.value,
        "n": n,
        "checked": checked,
        "passed": passed,
        "failures": failures,
    }
    if capture:
        row["witnesses"] = witnesses
    return row


def _failure_json(outcome) -> dict:
    as_json = outcome.to_json()
    return {
        "identity": as_json["identity"],
        "partition": as_json["partition"],
        "corner_index": as_json["corner_index"],
        "lhs": as_json["lhs"],
        "rhs": as_json["rhs"],
    }


def _theorem_task(n: int) -> dict:
    thm_limit = _WORKER["thm_limit"]
    row: dict = {"kind": "theorem", "n": n}
    eq = check_theorem_1_2(n, limit=thm_limit)
    row["equality"] = eq.status
    if not eq.passed:
        row["equality_witness"] = {"lhs": eq.lhs, "rhs": eq.rhs}
    if n >= 1:
        rec = check_schur_recurrences(n, limit=thm_limit)
        row["recurrences"] = rec.status
        if not rec.passed:
            row["recurrences_witness"] = {"lhs": rec.lhs, "rhs": rec.rhs}
    else:
        row["recurrences"] = None
    if n <= _WORKER["max_n_oracles"]:
        same = to_monomial(schur_lhs(n), limit=_WORKER["max_n_oracles"]) == to_monomial(
            schur_rhs(n), limit=_WORKER["max_n_oracles"]
        )
        row["oracle"] = "pass" if same else "fail"
    else:
        row["oracle"] = None
    return row


def _task_failed(row: dict) -> bool:
    if row["kind"] == "identity":
        return bool(row["failures"])
    return "fail" in (row["equality"], row["recurrences"], row["oracle"])


def run_sweep(config: SweepConfig) -> SweepReport:
    """Run every selected check and merge the outcomes deterministically.

    Verification failures are data in the report, not errors.  With
    fail_fast, outstanding work is cancelled after the first failing work
    unit, so such a report covers only the units that finished.
    """
    start = time.perf_counter()
    selected = config.selected_identities()
    tasks: list[tuple] = [
        ("identity", identity.value, n)
        for identity in selected
        for n in range(1, config.max_n_identities + 1)
    ]
    tasks += [("theorem", "", n) for n in range(config.max_n_theorem_1_2 + 1)]

    init_args = (
        config.fault,
        config.capture_witnesses,
        config.max_n_oracles,
        config.max_n_theorem_1_2,
    )
    rows: list[dict] = []
    if config.workers() == 1:
        _init_worker(*init_args)
        for task in tasks:
            row = _run_task(task)
            rows.append(row)
            if config.fail_fast and _task_failed(row):
                break
    else:
        with ProcessPoolExecutor(
            max_workers=config.workers(), initializer=_init_worker, initargs=init_args
        ) as pool:
            pending = {pool.submit(_run_task, task) for task in tasks}
            stop = False
            while pending and not stop:
                done, pending = wait(pending, return_when=FIRST_COMPLETED)
                for fut in done:
                    row = fut.result()
                    rows.append(row)
                    if config.fail_fast and _task_failed(row):
                        stop = True
                for fut in pending if stop else ():
                    fut.cancel()

    order = {identity.value: k for k, identity in enumerate(CATALOG)}
    identity_rows = sorted(
        (r for r in rows if r["kind"] == "identity"),
        key=lambda r: (order[r["identity"]], r["n"]),
    )
    theorem_rows = sorted(
        (r for r in rows if r["kind"] == "theorem"), key=lambda r: r["n"]
    )
    for row in identity_rows + theorem_rows:
        del row["kind"]
    return SweepReport(
        config=config,
        identity_rows=identity_rows,
        theorem_rows=theorem_rows,
        wall_time=time.perf_counter() - start,
    )


def render_report(report: SweepReport, fmt: str | None = None) -> str:
    """Render to json, csv, or text; bit-stable for identical reports."""
    fmt = report.config.output_format if fmt is None else fmt
    if fmt == "json":
        return json.dumps(report.to_json(), indent=2)
    if fmt == "csv":
        return _render_csv(report)
    if fmt == "text":
        return _render_text(report)
    raise ValueError(f"unknown output format {fmt!r}")


def _render_csv(report: SweepReport) -> str:
    lines = ["identity,n,checked,passed,failed"]
    for row in report.identity_rows:
        failed = row["checked"] - row["passed"]
        lines.append(f"{row['identity']},{row['n']},{row['checked']},{row['passed']},{failed}")
    for row in report.theorem_rows:
        statuses = [row[k] for k in ("equality", "recurrences", "oracle") if row[k] is not None]
        passed = sum(s == "pass" for s in statuses)
        lines.append(f"THM_1_2,{row['n']},{len(statuses)},{passed},{len(statuses) - passed}")
    return "\n".join(lines) + "\n"


def _render_text(report: SweepReport) -> str:
    per = report.per_identity()
    width = max((len(name) for name in per), default=8)
    lines = [f"identity sweep up to n = {report.config.max_n_identities}"]
    for name, agg in per.items():
        failed = agg["checked"] - agg["passed"]
        mark = "ok" if failed == 0 else f"{failed} FAILED"
        lines.append(f"  {name:<{width}}  checked {agg['checked']:>6}  {mark}")
    if report.theorem_rows:
        worst = "ok"
        for row in report.theorem_rows:
            if _row_failed_text(row):
                worst = "FAILED"
        ns = [row["n"] for row in report.theorem_rows]
        lines.append(f"  theorem_1_2 for n in {min(ns)}..{max(ns)}: {worst}")
    totals = report.totals()
    lines.append(
        f"totals: checked {totals['checked']}, passed {totals['passed']}, failed {totals['failed']}"
    )
    lines.append(f"wall time: {report.wall_time:.2f}s")
    return "\n".join(lines) + "\n"


def _row_failed_text(row: dict) -> bool:
    return "fail" in (row["equality"], row["recurrences"], row["oracle"])
