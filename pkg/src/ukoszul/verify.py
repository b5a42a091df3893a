"""Corpus-wide cross-checks and the JSON/CSV verification report."""

from __future__ import annotations

import csv
import io
import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Iterable

from .betti import RATIONALS, FieldSpec, betti_table, froberg_check
from .classify import Verdict, classification_to_dict, classify
from .corpus import Mode, enumerate_graphs
from .errors import UKoszulError
from .formats import emit_graph6
from .graph import Graph, induced, join, relabel
from .ideal import edge_ideal, fiber_product
from .recognize import Join, certificate_vertices, complement_equivalence_check

REPORT_SCHEMA_VERSION = 1
FIBER_CHECK_MAX_N = 8
JOBS_ENV = "UKOSZUL_JOBS"

CHECKS = (
    "classification_consistency",
    "complement_equivalence",
    "froberg_equivalence",
    "uk_implies_linear",
    "fiber_product_identity",
    "field_agreement",
)
PHASES = ("classify", "complement", "betti", "fiber_product")


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get(JOBS_ENV, "1")))
    except ValueError:
        return 1


@dataclass
class CorpusReport:
    n_min: int
    n_max: int
    mode: str
    field: str
    betti_up_to: int
    cross_field: str | None = None
    graphs: int = 0
    counts: dict[str, int] = field(default_factory=lambda: {v.value: 0 for v in Verdict})
    per_n: dict[int, dict[str, int]] = field(default_factory=dict)
    checks: dict[str, dict[str, int]] = field(
        default_factory=lambda: {c: {"passed": 0, "failed": 0, "skipped": 0} for c in CHECKS})
    anomalies: list[dict[str, Any]] = field(default_factory=list)
    timings: dict[str, float] = field(default_factory=lambda: {p: 0.0 for p in PHASES})
    wall_clock: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.anomalies

    def to_dict(self, *, include_timings: bool = True) -> dict[str, Any]:
        d = {
            "schema_version": REPORT_SCHEMA_VERSION,
            "n_range": [self.n_min, self.n_max],
            "mode": self.mode,
            "field": self.field,
            "betti_up_to": self.betti_up_to,
            "cross_field": self.cross_field,
            "graphs": self.graphs,
            "counts": self.counts,
            "per_n": {str(n): c for n, c in sorted(self.per_n.items())},
            "checks": self.checks,
            "anomalies": self.anomalies,
        }
        if include_timings:
            d["timings_seconds"] = {k: round(v, 4) for k, v in self.timings.items()}
            d["wall_clock_seconds"] = round(self.wall_clock, 4)
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(**kw), indent=2, sort_keys=True)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "graphs", "universally_koszul", "not_universally_koszul", "anomalies"])
        for n, c in sorted(self.per_n.items()):
            w.writerow([n, c["graphs"], c[Verdict.UK.value], c[Verdict.NOT_UK.value], c["anomalies"]])
        return buf.getvalue()

    def _add(self, result: dict[str, Any]) -> None:
        n = result["n"]
        row = self.per_n.setdefault(
            n, {"graphs": 0, Verdict.UK.value: 0, Verdict.NOT_UK.value: 0, "anomalies": 0})
        self.graphs += 1
        row["graphs"] += 1
        verdict = result["verdict"]
        if verdict is not None:
            self.counts[verdict] += 1
            row[verdict] += 1
        for name, outcome in result["checks"].items():
            key = {True: "passed", False: "failed", None: "skipped"}[outcome]
            self.checks[name][key] += 1
        for phase, t in result["timings"].items():
            self.timings[phase] += t
        row["anomalies"] += len(result["anomalies"])
        self.anomalies.extend(result["anomalies"])


def _fiber_checks(g: Graph, cert) -> bool:
    # the two halves of the vertex range
    half = g.n // 2
    g1, _ = induced(g, range(half))
    g2, _ = induced(g, range(half, g.n))
    ok = fiber_product(edge_ideal(g1), edge_ideal(g2)) == edge_ideal(join(g1, g2))
    # the top split of a join certificate, relabelled left block first
    if isinstance(cert, Join):
        left = sorted(certificate_vertices(cert.left))
        right = sorted(certificate_vertices(cert.right))
        h1, _ = induced(g, left)
        h2, _ = induced(g, right)
        pos = {v: i for i, v in enumerate(left + right)}
        relabelled = relabel(g, [pos[v] for v in range(g.n)])
        ok = ok and fiber_product(edge_ideal(h1), edge_ideal(h2)) == edge_ideal(relabelled)
    return ok


def check_graph(g: Graph, fld: FieldSpec = RATIONALS, with_betti: bool = True,
                fiber: bool = True, cross_field: FieldSpec | None = None) -> dict[str, Any]:
    """Run every cross-check on one graph.  Failures become anomaly records.

    With ``cross_field`` set, the Betti table is recomputed over that field
    and any difference from ``fld`` (torsion) is reported.
    """
    g6 = emit_graph6(g)
    checks: dict[str, bool | None] = {c: None for c in CHECKS}
    anomalies: list[dict[str, Any]] = []
    timings = {p: 0.0 for p in PHASES}
    verdict = None
    cert = None

    def anomaly(check: str, exc: BaseException, **extra) -> None:
        rec = {"graph6": g6, "n": g.n, "check": check,
               "error": type(exc).__name__, "message": str(exc)}
        details = getattr(exc, "details", None)
        if details:
            rec["details"] = _jsonable(details)
        rec.update(extra)
        anomalies.append(rec)

    t = time.perf_counter()
    try:
        c = classify(g)
        verdict = c.verdict.value
        cert = c.certificate
        checks["classification_consistency"] = True
    except (UKoszulError, AssertionError) as exc:
        checks["classification_consistency"] = False
        anomaly("classification_consistency", exc)
    timings["classify"] = time.perf_counter() - t

    t = time.perf_counter()
    try:
        complement_equivalence_check(g)
        checks["complement_equivalence"] = True
    except UKoszulError as exc:
        checks["complement_equivalence"] = False
        anomaly("complement_equivalence", exc)
    timings["complement"] = time.perf_counter() - t

    if with_betti:
        t = time.perf_counter()
        try:
            report = froberg_check(g, fld)
            checks["froberg_equivalence"] = True
            if verdict is not None:
                holds = verdict != Verdict.UK.value or report.linear
                checks["uk_implies_linear"] = holds
                if not holds:
                    anomalies.append({"graph6": g6, "n": g.n, "check": "uk_implies_linear",
                                      "message": "universally Koszul but resolution not linear",
                                      "classification": classification_to_dict(c),
                                      "betti": report.table.to_dict()})
            if cross_field is not None:
                other = betti_table(g, cross_field)
                agree = other.entries == report.table.entries
                checks["field_agreement"] = agree
                if not agree:
                    anomalies.append({"graph6": g6, "n": g.n, "check": "field_agreement",
                                      "message": f"Betti tables differ over {fld} and {cross_field}",
                                      "betti": report.table.to_dict(), "betti_other": other.to_dict()})
        except UKoszulError as exc:
            checks["froberg_equivalence"] = False
            anomaly("froberg_equivalence", exc)
        timings["betti"] = time.perf_counter() - t

    if fiber and g.n <= FIBER_CHECK_MAX_N:
        t = time.perf_counter()
        holds = _fiber_checks(g, cert)
        checks["fiber_product_identity"] = holds
        if not holds:
            anomalies.append({"graph6": g6, "n": g.n, "check": "fiber_product_identity",
                              "message": "fiber product of edge ideals differs from the join's"})
        timings["fiber_product"] = time.perf_counter() - t

    return {"n": g.n, "graph6": g6, "verdict": verdict, "checks": checks,
            "anomalies": anomalies, "timings": timings}


def _jsonable(obj):
    try:
        json.dumps(obj)
        return obj
    except TypeError:
        return repr(obj)


def _job(args):
    g, fld, betti_up_to, cross_field = args
    return check_graph(g, fld, with_betti=g.n <= betti_up_to, cross_field=cross_field)


def run_verification(n_min: int, n_max: int, mode: Mode | str = Mode.LABELED,
                     fld: FieldSpec = RATIONALS, betti_up_to: int = 0, *,
                     jobs: int | None = None, k: int | None = None,
                     seed: int | None = None,
                     cross_field: FieldSpec | None = None) -> CorpusReport:
    """Classify and cross-check every graph of the corpus for ``n_min <= n <= n_max``.

    Results are merged in enumeration order whatever the worker count, so
    the report (timings aside) does not depend on ``jobs``.
    """
    mode = Mode(mode)
    jobs = default_jobs() if jobs is None else jobs
    report = CorpusReport(n_min, n_max, mode.value, str(fld), betti_up_to,
                          None if cross_field is None else str(cross_field))
    start = time.perf_counter()

    def tasks() -> Iterable:
        for n in range(n_min, n_max + 1):
            for g in enumerate_graphs(n, mode, k=k, seed=seed):
                yield g, fld, betti_up_to, cross_field

    if jobs <= 1:
        for result in map(_job, tasks()):
            report._add(result)
    else:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(_job, tasks(), chunksize=256):
                report._add(result)
    report.wall_clock = time.perf_counter() - start
    return report
