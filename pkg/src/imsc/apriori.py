"""Level-wise candidate generation, the baseline miner, and a brute-force
oracle miner used to cross-check every other mining path."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Collection

from .errors import UniverseTooLarge
from .model import (
    FrequentSetStore,
    Itemset,
    TransactionDB,
    count_items,
    count_supports,
    meets_threshold,
)


@dataclass
class CandidateSet:
    """Size-``level`` candidate itemsets with running support counts."""

    level: int
    candidates: dict[Itemset, int]


def apriori_gen(prev_frequent: Collection[Itemset]) -> CandidateSet:
    """Join-and-prune candidate generation from the previous frequent level.

    Join: two members sharing their first k-2 items produce their k-item
    union. Prune: a joined itemset survives only if all of its (k-1)-subsets
    are in the input. Counts start at 0.
    """
    prev_set = set(prev_frequent)
    sizes = {len(x) for x in prev_set}
    if len(sizes) > 1:
        raise ValueError(f"mixed itemset sizes in candidate generation input: {sorted(sizes)}")

    groups: dict[Itemset, list[int]] = {}
    for itemset in prev_set:
        groups.setdefault(itemset[:-1], []).append(itemset[-1])

    out: dict[Itemset, int] = {}
    for prefix, lasts in groups.items():
        lasts.sort()
        for i, a in enumerate(lasts):
            for b in lasts[i + 1 :]:
                cand = prefix + (a, b)
                for drop in range(len(cand)):
                    if cand[:drop] + cand[drop + 1 :] not in prev_set:
                        break
                else:
                    out[cand] = 0
    level = (sizes.pop() + 1) if sizes else 0
    return CandidateSet(level, out)


def mine_apriori(db: TransactionDB, min_supp: Fraction) -> FrequentSetStore:
    """Mine all frequent itemsets of ``db`` at ``min_supp`` with exact counts.

    Level-1 candidates are the items occurring in the database; mining stops
    at the first empty frequent level.
    """
    store = FrequentSetStore(db.cardinality, min_supp, db.dictionary)
    total = db.cardinality
    item_counts = count_items(db)
    level = {
        (item,): n for item, n in item_counts.items() if meets_threshold(n, min_supp, total)
    }
    while level:
        for itemset, n in level.items():
            store.add(itemset, n)
        generated = apriori_gen(level.keys())
        if not generated.candidates:
            break
        counts = count_supports(db, generated.candidates)
        level = {x: n for x, n in counts.items() if meets_threshold(n, min_supp, total)}
    return store


def mine_bruteforce(db: TransactionDB, min_supp: Fraction, max_items: int = 24) -> FrequentSetStore:
    """Oracle miner: enumerate every itemset occurring in some transaction.

    Counts come from exhaustive per-transaction subset enumeration, a code
    path fully independent of candidate generation. Guarded by the size of
    the item universe since the enumeration is exponential.
    """
    universe = {item for t in db.transactions for item in t.items}
    if len(universe) > max_items:
        raise UniverseTooLarge(
            f"{len(universe)} distinct items exceed the brute-force guard of {max_items}"
        )
    counts: Counter[Itemset] = Counter()
    for t in db.transactions:
        items = t.items
        for k in range(1, len(items) + 1):
            counts.update(combinations(items, k))
    db._record_scan()

    store = FrequentSetStore(db.cardinality, min_supp, db.dictionary)
    total = db.cardinality
    for itemset, n in counts.items():
        if meets_threshold(n, min_supp, total):
            store.add(itemset, n)
    return store
