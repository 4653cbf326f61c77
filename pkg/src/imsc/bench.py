"""Benchmark harness: sweep the maintenance threshold, timing the incremental
update against a full re-mine and recording scan-ledger deltas so the
scan-avoidance claims stay testable even when wall-clock numbers are noisy."""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from statistics import median
from typing import Sequence

from .apriori import mine_apriori
from .errors import ResultMismatch
from .maintenance import Scenario, maintain
from .model import FrequentSetStore, Threshold, TransactionDB


@dataclass
class BenchRow:
    """One sweep point; equality with the baseline is asserted before a row exists."""

    s_prime: Threshold
    cpt: Fraction
    scenario: Scenario
    imsc_ms: float
    apriori_ms: float
    imsc_bd_passes: int
    imsc_inc_passes: int
    candidates_generated: int
    candidates_pruned: int
    frequent_count: int


def run_bench(
    big_db: TransactionDB,
    inc_db: TransactionDB,
    s: Fraction,
    sweep: Sequence[Fraction],
    repeats: int = 3,
    base_store: FrequentSetStore | None = None,
) -> list[BenchRow]:
    """Run the sweep and return one row per point, in sweep order.

    The original store is mined once up front (or passed in) and excluded from
    the timed region; each point times ``maintain`` and a full re-mine of the
    merged database ``repeats`` times and reports medians. Store validation is
    off inside the timed call so the ledger columns reflect the algorithm
    alone. A disagreement between the two results raises ResultMismatch.
    """
    if not sweep:
        raise ValueError("sweep must not be empty")
    if any(b <= a for a, b in zip(sweep, sweep[1:])):
        raise ValueError("sweep points must be strictly ascending")
    if repeats < 1:
        raise ValueError("repeats must be >= 1")

    f = base_store if base_store is not None else mine_apriori(big_db, s)
    if f.base_threshold != Fraction(s):
        raise ValueError("base store was mined at a different threshold")
    merged = big_db.union(inc_db)

    rows = []
    for s_prime in sweep:
        imsc_times = []
        apriori_times = []
        result = plan = baseline = None
        bd_passes = inc_passes = 0
        for _ in range(repeats):
            bd_before = big_db.scan_passes
            inc_before = inc_db.scan_passes
            start = time.perf_counter()
            result, plan = maintain(f, big_db, inc_db, s_prime, validate=False)
            imsc_times.append(time.perf_counter() - start)
            bd_passes = big_db.scan_passes - bd_before
            inc_passes = inc_db.scan_passes - inc_before

            start = time.perf_counter()
            baseline = mine_apriori(merged, s_prime)
            apriori_times.append(time.perf_counter() - start)
        if result != baseline:
            raise ResultMismatch(
                f"incremental result disagrees with the re-mine at threshold {s_prime}"
            )
        rows.append(
            BenchRow(
                s_prime=Threshold(s_prime),
                cpt=plan.cpt,
                scenario=plan.scenario,
                imsc_ms=median(imsc_times) * 1000,
                apriori_ms=median(apriori_times) * 1000,
                imsc_bd_passes=bd_passes,
                imsc_inc_passes=inc_passes,
                candidates_generated=plan.stats.candidates_generated,
                candidates_pruned=plan.stats.candidates_pruned,
                frequent_count=len(result),
            )
        )
    return rows
