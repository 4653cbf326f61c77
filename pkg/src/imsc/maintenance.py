"""Incremental maintenance of a mined frequent-itemset store when new
transactions are inserted and the support threshold changes.

Given the frequent itemsets of an original database (with exact counts), a
batch of inserted transactions, and a new threshold, :func:`maintain` computes
the frequent itemsets of the combined database at the new threshold without
re-mining. Stored itemsets only need their counts topped up from the
increment; brand-new candidates must show up in the increment often enough to
have any chance of reaching the new bound, so they are pruned before the
original database is touched, and whole phases are skipped when the threshold
change makes winners or losers impossible.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil

from .apriori import apriori_gen
from .errors import InconsistentStore
from .model import (
    FrequentSetStore,
    Itemset,
    TransactionDB,
    count_items,
    count_supports,
    render_itemset,
)


class Scenario(enum.Enum):
    """Maintenance regime, selected from the pruning threshold and increment size."""

    NO_LOSERS = "no_losers"  # every stored itemset stays frequent
    MIXED = "mixed"  # winners and losers both possible
    NO_WINNERS = "no_winners"  # no new itemset can become frequent


@dataclass
class MaintenanceStats:
    """Candidate bookkeeping filled in by the maintenance procedures."""

    candidates_generated: int = 0
    candidates_pruned: int = 0


@dataclass(frozen=True)
class MaintenancePlan:
    """Computed dispatch decision for one maintenance run.

    ``cpt`` and ``scenario`` are the nominal closed-form values. The closed
    form takes the largest support of an itemset missing from the old store to
    be ``s*D - 1``, which is only the true integer bound when ``s*D`` is a
    whole number; ``candidate_floor`` and ``effective_scenario`` use the
    integer-tight bound instead and are what the procedures actually run on.
    The two pairs agree exactly whenever ``s*D`` is a positive integer.
    """

    cpt: Fraction
    min_supp: Fraction
    scenario: Scenario
    s: Fraction
    s_prime: Fraction
    big_d: int
    little_d: int
    candidate_floor: Fraction
    effective_scenario: Scenario
    stats: MaintenanceStats = field(default_factory=MaintenanceStats)


@dataclass(frozen=True)
class ItemsetClassification:
    """Partition of old/new store membership into winners, persistents, losers."""

    winners: frozenset[Itemset]
    persistents: frozenset[Itemset]
    losers: frozenset[Itemset]


def compute_cpt(s: Fraction, s_prime: Fraction, big_d: int, little_d: int) -> Fraction:
    """Closed-form candidate pruning threshold ``s'*d + (s' - s)*D + 1``.

    May be negative (then nothing can be pruned) or exceed the increment size
    (then nothing can win).
    """
    return Fraction(s_prime) * little_d + (Fraction(s_prime) - Fraction(s)) * big_d + 1


def classify_scenario(cpt: Fraction, little_d: int) -> Scenario:
    """Nominal regime from the closed-form threshold: <=0, >d, or in between."""
    if cpt <= 0:
        return Scenario.NO_LOSERS
    if cpt > little_d:
        return Scenario.NO_WINNERS
    return Scenario.MIXED


def candidate_floor(s: Fraction, s_prime: Fraction, big_d: int, little_d: int) -> Fraction:
    """Tightest provable increment-count floor for any newly frequent itemset.

    An itemset absent from the old frequent set has at most
    ``max(ceil(s*D) - 1, 0)`` occurrences in the original database, so it can
    only reach ``s'*(D+d)`` overall if the increment contributes at least the
    difference. Never larger than :func:`compute_cpt`, and equal to it when
    ``s*D`` is a positive integer.
    """
    below_bound = max(ceil(Fraction(s) * big_d) - 1, 0)
    return Fraction(s_prime) * (big_d + little_d) - below_bound


def build_plan(s: Fraction, s_prime: Fraction, big_d: int, little_d: int) -> MaintenancePlan:
    """Assemble the full plan: nominal values plus the effective dispatch."""
    cpt = compute_cpt(s, s_prime, big_d, little_d)
    floor = candidate_floor(s, s_prime, big_d, little_d)
    if floor > little_d:
        effective = Scenario.NO_WINNERS
    elif floor <= 0:
        effective = Scenario.NO_LOSERS
    else:
        effective = Scenario.MIXED
    return MaintenancePlan(
        cpt=cpt,
        min_supp=Fraction(s_prime) * (big_d + little_d),
        scenario=classify_scenario(cpt, little_d),
        s=s,
        s_prime=s_prime,
        big_d=big_d,
        little_d=little_d,
        candidate_floor=floor,
        effective_scenario=effective,
    )


def _require(plan: MaintenancePlan, scenario: Scenario):
    if plan.effective_scenario is not scenario:
        raise ValueError(
            f"plan dispatches to {plan.effective_scenario.value}, not {scenario.value}"
        )


def _fresh_store(f: FrequentSetStore, plan: MaintenancePlan) -> FrequentSetStore:
    return FrequentSetStore(plan.big_d + plan.little_d, plan.s_prime, f.dictionary)


def maintain_mixed(
    f: FrequentSetStore,
    big_db: TransactionDB,
    inc_db: TransactionDB,
    plan: MaintenancePlan,
) -> FrequentSetStore:
    """Regime where winners and losers are both possible.

    Per level: one increment pass re-counts the stored itemsets (prune by the
    new bound) and counts the fresh candidates, which then must clear the
    candidate floor in the increment alone; only survivors earn one pass over
    the original database, skipped entirely when none survive.
    """
    _require(plan, Scenario.MIXED)
    result = _fresh_store(f, plan)
    min_supp = plan.min_supp
    floor = plan.candidate_floor
    stats = plan.stats

    # Level 1: a single increment pass both updates stored items and
    # discovers candidate items that were never frequent before.
    inc_items = count_items(inc_db)
    stored = f.level(1)
    current: dict[Itemset, int] = {}
    for itemset, base in stored.items():
        total = base + inc_items.get(itemset[0], 0)
        if total >= min_supp:
            current[itemset] = total
    fresh = {(item,): n for item, n in inc_items.items() if (item,) not in stored}
    stats.candidates_generated += len(fresh)
    survivors = {x: n for x, n in fresh.items() if n >= floor}
    stats.candidates_pruned += len(fresh) - len(survivors)
    if survivors:
        base_counts = count_supports(big_db, survivors)
        for x, n in survivors.items():
            total = n + base_counts[x]
            if total >= min_supp:
                current[x] = total

    k = 1
    while current:
        for itemset, n in current.items():
            result.add(itemset, n)
        k += 1
        generated = apriori_gen(current.keys()).candidates
        stored = f.level(k)
        fresh = {x: 0 for x in generated if x not in stored}
        stats.candidates_generated += len(fresh)
        targets = list(stored) + list(fresh)
        if not targets:
            break
        inc_counts = count_supports(inc_db, targets)
        current = {}
        for itemset, base in stored.items():
            total = base + inc_counts[itemset]
            if total >= min_supp:
                current[itemset] = total
        surviving = [x for x in fresh if inc_counts[x] >= floor]
        stats.candidates_pruned += len(fresh) - len(surviving)
        if surviving:
            base_counts = count_supports(big_db, surviving)
            for x in surviving:
                total = inc_counts[x] + base_counts[x]
                if total >= min_supp:
                    current[x] = total
    return result


def maintain_no_losers(
    f: FrequentSetStore,
    big_db: TransactionDB,
    inc_db: TransactionDB,
    plan: MaintenancePlan,
) -> FrequentSetStore:
    """Regime where every stored itemset is guaranteed to stay frequent.

    Stored itemsets keep their membership and only get their counts topped up
    from the increment. Nothing can be pruned by increment count here (the
    floor is non-positive), so every candidate is counted over both databases;
    at level 1 the original database is scanned once to surface items it alone
    makes frequent, including items that never occur in the increment.
    """
    _require(plan, Scenario.NO_LOSERS)
    result = _fresh_store(f, plan)
    min_supp = plan.min_supp
    stats = plan.stats

    inc_items = count_items(inc_db)
    stored = f.level(1)
    current: dict[Itemset, int] = {
        itemset: base + inc_items.get(itemset[0], 0) for itemset, base in stored.items()
    }
    base_items = count_items(big_db)
    fresh: dict[Itemset, int] = {}
    for item, n in inc_items.items():
        if (item,) not in stored:
            fresh[(item,)] = n
    for item, n in base_items.items():
        if (item,) not in stored:
            fresh[(item,)] = fresh.get((item,), 0) + n
    stats.candidates_generated += len(fresh)
    for x, total in fresh.items():
        if total >= min_supp:
            current[x] = total

    k = 1
    while current:
        for itemset, n in current.items():
            result.add(itemset, n)
        k += 1
        generated = apriori_gen(current.keys()).candidates
        stored = f.level(k)
        fresh_list = [x for x in generated if x not in stored]
        stats.candidates_generated += len(fresh_list)
        targets = list(stored) + fresh_list
        if not targets:
            break
        inc_counts = count_supports(inc_db, targets)
        current = {
            itemset: base + inc_counts[itemset] for itemset, base in stored.items()
        }
        if fresh_list:
            base_counts = count_supports(big_db, fresh_list)
            for x in fresh_list:
                total = inc_counts[x] + base_counts[x]
                if total >= min_supp:
                    current[x] = total
    return result


def maintain_no_winners(
    f: FrequentSetStore,
    big_db: TransactionDB,
    inc_db: TransactionDB,
    plan: MaintenancePlan,
) -> FrequentSetStore:
    """Regime where no new itemset can become frequent.

    Each stored level gets one increment pass to update counts, then the new
    bound filters it. The original database is never touched. Stops at the
    first empty result level or when the stored levels run out.
    """
    _require(plan, Scenario.NO_WINNERS)
    result = _fresh_store(f, plan)
    min_supp = plan.min_supp

    k = 1
    while True:
        stored = f.level(k)
        if not stored:
            break
        inc_counts = count_supports(inc_db, stored)
        current = {}
        for itemset, base in stored.items():
            total = base + inc_counts[itemset]
            if total >= min_supp:
                current[itemset] = total
        if not current:
            break
        for itemset, n in current.items():
            result.add(itemset, n)
        k += 1
    return result


_PROCEDURES = {
    Scenario.NO_LOSERS: maintain_no_losers,
    Scenario.MIXED: maintain_mixed,
    Scenario.NO_WINNERS: maintain_no_winners,
}

_SPOT_CHECK_SIZE = 32


def _spot_check(f: FrequentSetStore, big_db: TransactionDB):
    """Recount a bounded sample of stored itemsets against the database."""
    population = sorted(f.itemsets(), key=lambda x: (len(x), x))
    if not population:
        return
    if len(population) > _SPOT_CHECK_SIZE:
        population = random.Random(0x5EED).sample(population, _SPOT_CHECK_SIZE)
    counts = count_supports(big_db, population)
    for itemset in population:
        stored = f.count(itemset)
        if counts[itemset] != stored:
            raise InconsistentStore(
                f"stored count for {render_itemset(itemset, f.dictionary)} is "
                f"{stored}, but the database holds {counts[itemset]}"
            )


def maintain(
    f: FrequentSetStore,
    big_db: TransactionDB,
    inc_db: TransactionDB,
    s_prime: Fraction,
    *,
    validate: bool = True,
) -> tuple[FrequentSetStore, MaintenancePlan]:
    """Update ``f`` for the insertion of ``inc_db`` at the new threshold.

    Returns the frequent-itemset store of ``big_db.union(inc_db)`` at
    ``s_prime`` -- identical, counts included, to re-mining from scratch --
    plus the plan that drove the run. With ``validate`` on, a sample of the
    stored counts is first recounted against ``big_db`` (one extra full pass);
    pass ``validate=False`` when measuring the scan contract or when the store
    is trusted.
    """
    if big_db.dictionary is not inc_db.dictionary:
        raise ValueError("databases use different item dictionaries")
    if f.dictionary is not big_db.dictionary:
        raise ValueError("store and database use different item dictionaries")
    if f.base_cardinality != big_db.cardinality:
        raise InconsistentStore(
            f"store was mined from {f.base_cardinality} transactions, "
            f"database holds {big_db.cardinality}"
        )
    if validate:
        _spot_check(f, big_db)
    plan = build_plan(f.base_threshold, s_prime, big_db.cardinality, inc_db.cardinality)
    result = _PROCEDURES[plan.effective_scenario](f, big_db, inc_db, plan)
    return result, plan


def classify_itemsets(
    f_old: FrequentSetStore, f_new: FrequentSetStore
) -> ItemsetClassification:
    """Set-difference the two stores into winners, persistents, and losers."""
    old = set(f_old.itemsets())
    new = set(f_new.itemsets())
    return ItemsetClassification(
        winners=frozenset(new - old),
        persistents=frozenset(new & old),
        losers=frozenset(old - new),
    )
