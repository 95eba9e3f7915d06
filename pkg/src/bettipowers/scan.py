"""Randomized conjecture scans with deterministic, replayable JSONL records.

Each record is generated from (seed, index) alone: the per-record RNG is
random.Random(seed * 1_000_003 + index), so any line of the stream can be
reproduced in isolation.  Violations of the checked statements are emitted
as separate finding records; computation failures are recorded in place and
never abort the stream.
"""
from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Optional, TextIO

from .asymptotics import (
    KodiyalamProfile,
    NotStabilized,
    ProfileInvariantError,
    betti_series,
    kodiyalam_profile,
    profile_to_json,
)
from .monomial_core import MonomialIdeal
from .resolution_engine import RATIONALS, CoefficientField, betti_table
from .verdicts import FAILS, VerdictReport, full_report

RECORD_SEED_STRIDE = 1_000_003


@dataclass(frozen=True)
class ScanParameters:
    """Generator model: ngens exponent vectors uniform in {0..max_exp}^nvars
    excluding zero, minimalized; artinian additionally prepends every
    x_i^(max_exp+1)."""

    nvars: int
    ngens: int
    max_exp: int
    count: int
    seed: int
    artinian: bool = False
    kmax: Optional[int] = None
    guard: int = 3
    field: CoefficientField = RATIONALS

    def __post_init__(self):
        if min(self.nvars, self.ngens, self.max_exp) < 1 or self.count < 0:
            raise ValueError("scan parameters must be positive (count may be 0)")


@dataclass
class ScanRecord:
    index: int
    seed: int
    params: ScanParameters
    generators: tuple[tuple[int, ...], ...]
    kmax: int
    profile: dict
    verdicts: dict[str, str]
    findings: list[dict] = field(default_factory=list)
    timing: float = 0.0

    def to_json(self, include_timing: bool = False) -> dict:
        out = {
            "type": "record",
            "index": self.index,
            "seed": self.seed,
            "parameters": {
                "nvars": self.params.nvars,
                "ngens": self.params.ngens,
                "max_exp": self.params.max_exp,
                "artinian": self.params.artinian,
            },
            "generators": [list(g) for g in self.generators],
            "field": str(self.params.field),
            "kmax": self.kmax,
            "profile": self.profile,
            "verdicts": self.verdicts,
        }
        if include_timing:
            out["timing_seconds"] = round(self.timing, 6)
        return out


def random_ideal(rng: random.Random, params: ScanParameters) -> MonomialIdeal:
    vectors = []
    if params.artinian:
        e = params.max_exp + 1
        vectors.extend(
            tuple(e if j == i else 0 for j in range(params.nvars))
            for i in range(params.nvars)
        )
    drawn = 0
    while drawn < params.ngens:
        v = tuple(rng.randint(0, params.max_exp) for _ in range(params.nvars))
        if any(v):
            vectors.append(v)
            drawn += 1
    return MonomialIdeal.from_generators(
        tuple(f"x{i + 1}" for i in range(params.nvars)), vectors
    )


def _finding(kind: str, index: int, seed: int, detail: dict) -> dict:
    return {"type": "finding", "kind": kind, "index": index, "seed": seed, **detail}


def scan_record(params: ScanParameters, index: int) -> ScanRecord:
    """Compute one fully deterministic record for (params.seed, index)."""
    rng = random.Random(params.seed * RECORD_SEED_STRIDE + index)
    ideal = random_ideal(rng, params)
    kmax = params.kmax if params.kmax is not None else ideal.nvars + 6
    record = ScanRecord(
        index=index,
        seed=params.seed,
        params=params,
        generators=ideal.generators,
        kmax=kmax,
        profile={},
        verdicts={},
    )
    start = time.perf_counter()
    try:
        series = betti_series(ideal, kmax, params.field)
        result = kodiyalam_profile(series, guard=params.guard)
        record.profile = profile_to_json(result)
        if isinstance(result, KodiyalamProfile):
            table = betti_table(ideal, params.field)
            report = full_report(ideal, table, series, result)
            record.verdicts = report.statuses()
            record.findings.extend(_report_findings(report, record))
    except ProfileInvariantError as exc:
        record.profile = {"status": "invariant-error", "message": str(exc)}
        record.findings.append(
            _finding(
                "invariant-violation",
                index,
                params.seed,
                {"message": str(exc), "generators": [list(g) for g in ideal.generators]},
            )
        )
    except Exception as exc:
        record.profile = {"status": "error", "error": f"{type(exc).__name__}: {exc}"}
    record.timing = time.perf_counter() - start
    return record


def _report_findings(report: VerdictReport, record: ScanRecord) -> list[dict]:
    # A failed statement on a random ideal is a reportable counterexample.
    out = []
    for entry in report.entries:
        if entry.status == FAILS:
            out.append(
                _finding(
                    f"{entry.statement}-violation",
                    record.index,
                    record.seed,
                    {
                        "statement": entry.statement,
                        "witness": entry.witness,
                        "generators": [list(g) for g in record.generators],
                    },
                )
            )
    return out


def run_scan(params: ScanParameters) -> Iterator[ScanRecord]:
    for index in range(params.count):
        yield scan_record(params, index)


def write_jsonl(
    records: Iterator[ScanRecord], stream: TextIO, include_timing: bool = False
) -> tuple[int, int]:
    """Serialize records (and their findings) one JSON object per line.

    Returns (record_count, finding_count).  Output is byte-deterministic
    unless include_timing is set.
    """
    n_records = n_findings = 0
    for record in records:
        stream.write(json.dumps(record.to_json(include_timing), sort_keys=True) + "\n")
        n_records += 1
        for finding in record.findings:
            stream.write(json.dumps(finding, sort_keys=True) + "\n")
            n_findings += 1
    return n_records, n_findings
