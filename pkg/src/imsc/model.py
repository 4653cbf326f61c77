"""Core data model: interned items, canonical itemsets, transaction databases,
exact thresholds, and support counting.

An itemset is a plain tuple of item ids in strictly ascending order; the empty
tuple is the empty itemset and is contained in every transaction. Support
counts are absolute integers, and every frequency comparison is done in exact
rational arithmetic so boundaries like 4.55 never degrade through floats.
"""

from __future__ import annotations

import math
import threading
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvariantViolation

Itemset = tuple[int, ...]


class Threshold(Fraction):
    """A relative frequency bound in [0, 1], kept in lowest terms."""

    def __new__(cls, numerator=0, denominator=None):
        self = super().__new__(cls, numerator, denominator)
        if self < 0 or self > 1:
            raise ValueError(f"threshold must lie in [0, 1], got {self}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Threshold":
        """Parse "30%", "0.30", or "3/10" into an exact threshold.

        Decimal strings convert exactly (digits over a power of ten), never
        through binary floating point.
        """
        body = text.strip()
        percent = body.endswith("%")
        if percent:
            body = body[:-1].strip()
        try:
            value = Fraction(body)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse threshold {text!r}") from exc
        if percent:
            value /= 100
        return cls(value)


class ItemDictionary:
    """Bijective token <-> id interning; ids are dense in first-seen order."""

    def __init__(self):
        self._ids: dict[str, int] = {}
        self._tokens: list[str] = []

    def intern(self, token: str) -> int:
        """Return the id for ``token``, assigning the next dense id if unseen."""
        item_id = self._ids.get(token)
        if item_id is None:
            item_id = len(self._tokens)
            self._ids[token] = item_id
            self._tokens.append(token)
        return item_id

    def id_of(self, token: str) -> int:
        return self._ids[token]

    def token(self, item_id: int) -> str:
        return self._tokens[item_id]

    def tokens(self, itemset: Itemset) -> tuple[str, ...]:
        return tuple(self._tokens[i] for i in itemset)

    def __contains__(self, token: str) -> bool:
        return token in self._ids

    def __len__(self) -> int:
        return len(self._tokens)


def canonical_itemset(tokens: Iterable[str], dictionary: ItemDictionary) -> Itemset:
    """Intern ``tokens`` (deduplicating) and return the ascending id tuple."""
    return tuple(sorted({dictionary.intern(t) for t in tokens}))


def render_itemset(itemset: Itemset, dictionary: ItemDictionary) -> str:
    return "{" + " ".join(dictionary.token(i) for i in itemset) + "}"


@dataclass(frozen=True)
class Transaction:
    """One transaction: an optional opaque label and a canonical itemset."""

    tid: str | None
    items: Itemset


class TransactionDB:
    """Ordered multiset of transactions plus a ledger of full passes.

    The transaction sequence is immutable after construction. The scan ledger
    is the only mutable piece: every counting helper bumps it exactly once per
    full pass, which is what the scan-contract tests key on. The ledger update
    is guarded by a lock so shared databases can be counted from several
    threads.
    """

    def __init__(self, transactions: Iterable[Transaction], dictionary: ItemDictionary):
        self._transactions = tuple(transactions)
        self._dictionary = dictionary
        self._ledger_lock = threading.Lock()
        self._scan_passes = 0

    @classmethod
    def from_token_rows(
        cls,
        rows: Iterable[Sequence[str]],
        dictionary: ItemDictionary | None = None,
        tids: Sequence[str] | None = None,
    ) -> "TransactionDB":
        """Build a database from rows of item tokens, canonicalizing each row."""
        dictionary = dictionary if dictionary is not None else ItemDictionary()
        transactions = []
        for idx, row in enumerate(rows):
            tid = tids[idx] if tids is not None else None
            transactions.append(Transaction(tid, canonical_itemset(row, dictionary)))
        return cls(transactions, dictionary)

    @property
    def transactions(self) -> tuple[Transaction, ...]:
        return self._transactions

    @property
    def dictionary(self) -> ItemDictionary:
        return self._dictionary

    @property
    def cardinality(self) -> int:
        return len(self._transactions)

    @property
    def scan_passes(self) -> int:
        return self._scan_passes

    def _record_scan(self):
        with self._ledger_lock:
            self._scan_passes += 1

    def union(self, other: "TransactionDB") -> "TransactionDB":
        """Concatenate two databases sharing one item dictionary."""
        if other.dictionary is not self._dictionary:
            raise ValueError("cannot union databases built on different item dictionaries")
        return TransactionDB(self._transactions + other.transactions, self._dictionary)

    def __iter__(self) -> Iterator[Transaction]:
        return iter(self._transactions)

    def __len__(self) -> int:
        return len(self._transactions)


def is_subset(x: Itemset, t: Itemset) -> bool:
    """Merge-walk subset test over two canonical itemsets, O(|x| + |t|)."""
    pos = 0
    n = len(t)
    for xi in x:
        while pos < n and t[pos] < xi:
            pos += 1
        if pos >= n or t[pos] != xi:
            return False
        pos += 1
    return True


def count_items(db: TransactionDB) -> dict[int, int]:
    """Occurrence count of every item in ``db``; exactly one full pass."""
    counts: Counter[int] = Counter()
    for t in db.transactions:
        counts.update(t.items)
    db._record_scan()
    return dict(counts)


def count_supports(db: TransactionDB, targets: Iterable[Itemset]) -> dict[Itemset, int]:
    """Support counts of ``targets`` in ``db``, in exactly one full pass.

    Targets may span several sizes. Every requested itemset appears in the
    result, with count 0 if nothing contains it; the empty itemset is counted
    as the cardinality. Per transaction and size the cheaper of two membership
    strategies is used: enumerating the transaction's subsets of that size, or
    testing each target against the transaction.
    """
    counts: dict[Itemset, int] = dict.fromkeys(targets, 0)
    by_size: dict[int, list[Itemset]] = {}
    for itemset in counts:
        by_size.setdefault(len(itemset), []).append(itemset)

    if set(by_size) == {1}:
        # Pure item targets: bulk-count occurrences, then project.
        occurrences: Counter[int] = Counter()
        for t in db.transactions:
            occurrences.update(t.items)
        for itemset in counts:
            counts[itemset] = occurrences[itemset[0]]
        db._record_scan()
        return counts

    sized = [(k, group, set(group)) for k, group in sorted(by_size.items())]
    for t in db.transactions:
        items = t.items
        n = len(items)
        members: set[int] | None = None
        for k, group, lookup in sized:
            if k > n:
                continue
            if math.comb(n, k) <= len(group):
                for sub in combinations(items, k):
                    if sub in lookup:
                        counts[sub] += 1
            else:
                if members is None:
                    members = set(items)
                for target in group:
                    for i in target:
                        if i not in members:
                            break
                    else:
                        counts[target] += 1
    db._record_scan()
    return counts


def meets_threshold(count: int, thr: Fraction, total: int) -> bool:
    """Exact frequency test: ``count / total >= thr`` by cross-multiplication.

    The comparison is inclusive at the bound.
    """
    return count * thr.denominator >= thr.numerator * total


class FrequentSetStore:
    """Leveled map itemset -> absolute support count for one (db, threshold) pair.

    Level ``k`` holds only size-``k`` itemsets. A well-formed store is downward
    closed (every subset of a member is a member), every count clears the
    store's own threshold, and subset counts dominate superset counts;
    :meth:`validate` re-checks all of that and is run on every load from disk.
    """

    def __init__(self, base_cardinality: int, base_threshold: Fraction, dictionary: ItemDictionary):
        self.base_cardinality = base_cardinality
        self.base_threshold = base_threshold
        self._dictionary = dictionary
        self._levels: dict[int, dict[Itemset, int]] = {}

    @property
    def dictionary(self) -> ItemDictionary:
        return self._dictionary

    @property
    def levels(self) -> Mapping[int, dict[Itemset, int]]:
        return self._levels

    def add(self, itemset: Itemset, count: int):
        self._levels.setdefault(len(itemset), {})[itemset] = count

    def level(self, k: int) -> dict[Itemset, int]:
        return self._levels.get(k, {})

    def max_level(self) -> int:
        return max((k for k, lvl in self._levels.items() if lvl), default=0)

    def count(self, itemset: Itemset) -> int | None:
        return self._levels.get(len(itemset), {}).get(itemset)

    def itemsets(self) -> Iterator[Itemset]:
        for level in self._levels.values():
            yield from level

    def __contains__(self, itemset: Itemset) -> bool:
        return itemset in self._levels.get(len(itemset), {})

    def __len__(self) -> int:
        return sum(len(level) for level in self._levels.values())

    def __eq__(self, other) -> bool:
        """Content equality: same base metadata, same itemsets, same counts.

        Item ids are compared raw, so equality is only meaningful for stores
        built over the same dictionary.
        """
        if not isinstance(other, FrequentSetStore):
            return NotImplemented
        return (
            self.base_cardinality == other.base_cardinality
            and self.base_threshold == other.base_threshold
            and {k: lvl for k, lvl in self._levels.items() if lvl}
            == {k: lvl for k, lvl in other._levels.items() if lvl}
        )

    __hash__ = None  # mutable container

    def validate(self):
        """Re-check every structural invariant; raise InvariantViolation if broken."""
        for k, level in self._levels.items():
            if k < 1:
                raise InvariantViolation(f"level {k} is not a positive size")
            for itemset, count in level.items():
                name = render_itemset(itemset, self._dictionary)
                if len(itemset) != k:
                    raise InvariantViolation(f"{name} stored at level {k}")
                if any(a >= b for a, b in zip(itemset, itemset[1:])):
                    raise InvariantViolation(f"{name} is not in canonical ascending order")
                if count < 0:
                    raise InvariantViolation(f"{name} has negative count {count}")
                if not meets_threshold(count, self.base_threshold, self.base_cardinality):
                    raise InvariantViolation(
                        f"{name} has count {count}, below threshold "
                        f"{self.base_threshold} of {self.base_cardinality}"
                    )
                if k >= 2:
                    parents = self._levels.get(k - 1, {})
                    for drop in range(k):
                        sub = itemset[:drop] + itemset[drop + 1 :]
                        sub_count = parents.get(sub)
                        if sub_count is None:
                            raise InvariantViolation(
                                f"{name} is stored but its subset "
                                f"{render_itemset(sub, self._dictionary)} is not"
                            )
                        if sub_count < count:
                            raise InvariantViolation(
                                f"{render_itemset(sub, self._dictionary)} has count "
                                f"{sub_count}, below its superset {name} at {count}"
                            )
