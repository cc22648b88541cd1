"""Exhaustive two-phase search over triplet spaces.

Every triplet gets a high-precision estimate of the derived angle.  Values
that sit on a half step (within ``tol``) are handed to exact certification;
everything else is irrational by the denominator bound.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from pathlib import Path
from typing import Iterator

from .oracle import DEFAULT_DIGITS, HPReal, near_half_step, theta_estimate
from .solver import (
    DEFAULT_TOL,
    Classification,
    Triplet,
    certify_theta,
)

__all__ = [
    "JOBS_ENV",
    "CSV_COLUMNS",
    "Convention",
    "SearchError",
    "SearchRecord",
    "SearchReport",
    "default_workers",
    "enumerate_triplets",
    "expected_count",
    "run_search",
    "export",
    "report_to_csv",
    "report_to_json",
    "report_from_json",
]

log = logging.getLogger(__name__)

JOBS_ENV = "ADVENTITIOUS_JOBS"
CSV_COLUMNS = (
    "a",
    "b",
    "c",
    "unit_N",
    "theta_half_steps",
    "classification",
    "certified",
    "theta_decimal",
)
THETA_DECIMAL_DIGITS = 50


class SearchError(RuntimeError):
    pass


@dataclass(frozen=True)
class Convention:
    """Which triplets are searched.

    ``tripp-even``: even apex 2..176, integral base angles.
    ``full``: every apex 1..177.
    ``unit``: the ``full`` shape with 180 replaced by ``unit_N``.
    """

    kind: str
    unit_N: int = 180

    def __post_init__(self) -> None:
        if self.kind not in ("tripp-even", "full", "unit"):
            raise ValueError(f"unknown convention {self.kind!r}")
        if self.kind != "unit" and self.unit_N != 180:
            raise ValueError(f"{self.kind} is defined for degrees only")
        if self.unit_N < 4:
            raise ValueError(f"unit_N must be at least 4, got {self.unit_N}")

    @classmethod
    def parse(cls, text: str) -> Convention:
        if text.startswith("unit:"):
            return cls("unit", int(text[5:]))
        return cls(text)

    @property
    def name(self) -> str:
        return f"unit:{self.unit_N}" if self.kind == "unit" else self.kind

    def apexes(self) -> range:
        N = self.unit_N
        if self.kind == "tripp-even":
            return range(2, N - 3, 2)
        return range(1, N - 2)

    def max_b(self, a: int) -> int:
        # largest integer strictly below the base angle (N - a) / 2
        return -(-(self.unit_N - a) // 2) - 1


def enumerate_triplets(conv: Convention) -> Iterator[Triplet]:
    """Triplets of ``conv`` in lexicographic (a, b, c) order, with c < b."""
    for a in conv.apexes():
        yield from _apex_triplets(conv, a)


def _apex_triplets(conv: Convention, a: int) -> Iterator[Triplet]:
    N = conv.unit_N
    for b in range(2, conv.max_b(a) + 1):
        for c in range(1, b):
            yield Triplet(a, b, c, N)


def expected_count(conv: Convention) -> int:
    """Closed-form size of the triplet space: sum over apexes of C(max_b, 2)."""
    return sum(comb(conv.max_b(a), 2) for a in conv.apexes() if conv.max_b(a) >= 2)


@dataclass(frozen=True)
class SearchRecord:
    triplet: Triplet
    theta_estimate: HPReal
    classification: Classification
    half_steps: int | None
    certified: bool

    @property
    def sort_key(self) -> tuple[int, int, int]:
        t = self.triplet
        return (t.a, t.b, t.c)


@dataclass
class SearchReport:
    convention: Convention
    total_enumerated: int
    integral_count: int
    half_integral_count: int
    solutions: list[SearchRecord]
    digits: int
    tol: Fraction
    prefilter_candidates: int = 0
    rejected_candidates: int = 0
    workers: int = field(default=1, compare=False)
    elapsed_seconds: float = field(default=0.0, compare=False)


def default_workers() -> int:
    env = os.environ.get(JOBS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class _ApexResult:
    a: int
    count: int
    candidates: int
    rejected: int
    records: list[SearchRecord]


def _search_apex(job: tuple[Convention, int, int, Fraction]) -> _ApexResult:
    conv, a, digits, tol = job
    count = candidates = rejected = 0
    records: list[SearchRecord] = []
    for t in _apex_triplets(conv, a):
        count += 1
        try:
            est = theta_estimate(t, digits)
            j = near_half_step(est, tol)
            if j is None:
                continue
            candidates += 1
            if not certify_theta(t, j):
                rejected += 1
                continue
        except Exception as exc:
            raise SearchError(f"search failed at triplet {t}: {exc}") from exc
        kind = Classification.INTEGRAL if j % 2 == 0 else Classification.HALF_INTEGRAL
        records.append(SearchRecord(t, est, kind, j, True))
    return _ApexResult(a, count, candidates, rejected, records)


def _dedup_mirrors(records: list[SearchRecord]) -> list[SearchRecord]:
    """Keep one record per mirror pair, preferring the b > c orientation."""
    best: dict[tuple[int, int, int, int], SearchRecord] = {}
    for r in records:
        t = r.triplet
        key = (t.a, max(t.b, t.c), min(t.b, t.c), t.unit_N)
        if key not in best or (t.is_canonical and not best[key].triplet.is_canonical):
            best[key] = r
    return sorted(best.values(), key=lambda r: r.sort_key)


def run_search(
    conv: Convention,
    digits: int = DEFAULT_DIGITS,
    tol: Fraction = DEFAULT_TOL,
    workers: int | None = None,
) -> SearchReport:
    """Run the prefilter and exact certification over every triplet of ``conv``.

    The result is independent of ``workers``: apexes are processed as
    separate tasks and merged back in apex order.
    """
    if digits < 50:
        raise ValueError("searches need at least 50 digits")
    tol = Fraction(tol)
    if not 0 < tol < Fraction(1, 4):
        raise ValueError("tol must lie in (0, 1/4)")
    workers = default_workers() if workers is None else max(1, workers)
    jobs = [(conv, a, digits, tol) for a in conv.apexes()]
    start = time.perf_counter()
    if workers == 1:
        results = [_search_apex(job) for job in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_apex, jobs))
    elapsed = time.perf_counter() - start

    records = _dedup_mirrors([r for res in results for r in res.records])
    report = SearchReport(
        convention=conv,
        total_enumerated=sum(r.count for r in results),
        integral_count=sum(r.classification is Classification.INTEGRAL for r in records),
        half_integral_count=sum(
            r.classification is Classification.HALF_INTEGRAL for r in records
        ),
        solutions=records,
        digits=digits,
        tol=tol,
        prefilter_candidates=sum(r.candidates for r in results),
        rejected_candidates=sum(r.rejected for r in results),
        workers=workers,
        elapsed_seconds=elapsed,
    )
    log.info(
        "%s: %d triplets, %d integral, %d half-integral in %.1fs",
        conv.name,
        report.total_enumerated,
        report.integral_count,
        report.half_integral_count,
        elapsed,
    )
    return report


def _record_row(r: SearchRecord) -> list[str]:
    t = r.triplet
    return [
        str(t.a),
        str(t.b),
        str(t.c),
        str(t.unit_N),
        "" if r.half_steps is None else str(r.half_steps),
        r.classification.value,
        "true" if r.certified else "false",
        r.theta_estimate.to_string(THETA_DECIMAL_DIGITS),
    ]


def report_to_csv(report: SearchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.solutions:
        writer.writerow(_record_row(r))
    return buf.getvalue()


def _record_to_dict(r: SearchRecord) -> dict:
    t = r.triplet
    return {
        "triplet": {"a": t.a, "b": t.b, "c": t.c, "unit_N": t.unit_N},
        "theta_estimate": str(r.theta_estimate),
        "classification": r.classification.value,
        "half_steps": r.half_steps,
        "certified": r.certified,
    }


def report_to_json(report: SearchReport) -> str:
    # workers and elapsed time are left out so exports stay byte-stable
    payload = {
        "convention": report.convention.name,
        "total_enumerated": report.total_enumerated,
        "integral_count": report.integral_count,
        "half_integral_count": report.half_integral_count,
        "prefilter_candidates": report.prefilter_candidates,
        "rejected_candidates": report.rejected_candidates,
        "digits": report.digits,
        "tol": str(report.tol),
        "solutions": [_record_to_dict(r) for r in report.solutions],
    }
    return json.dumps(payload, indent=2) + "\n"


def report_from_json(text: str) -> SearchReport:
    data = json.loads(text)
    digits = data["digits"]
    solutions = [
        SearchRecord(
            triplet=Triplet(**s["triplet"]),
            theta_estimate=HPReal.parse(s["theta_estimate"], digits),
            classification=Classification(s["classification"]),
            half_steps=s["half_steps"],
            certified=s["certified"],
        )
        for s in data["solutions"]
    ]
    return SearchReport(
        convention=Convention.parse(data["convention"]),
        total_enumerated=data["total_enumerated"],
        integral_count=data["integral_count"],
        half_integral_count=data["half_integral_count"],
        solutions=solutions,
        digits=digits,
        tol=Fraction(data["tol"]),
        prefilter_candidates=data["prefilter_candidates"],
        rejected_candidates=data["rejected_candidates"],
    )


def export(report: SearchReport, fmt: str, path: str | Path) -> None:
    if fmt == "csv":
        text = report_to_csv(report)
    elif fmt == "json":
        text = report_to_json(report)
    else:
        raise ValueError(f"unknown export format {fmt!r}")
    with open(path, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
