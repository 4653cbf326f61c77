"""Shared fixtures: the 10-transaction demo database, its two increments, and
store-building helpers."""

from __future__ import annotations

from fractions import Fraction

import pytest

from imsc import (
    FrequentSetStore,
    ItemDictionary,
    Threshold,
    TransactionDB,
    canonical_itemset,
)

# Ten transactions whose supports realize every count the golden scenarios
# rely on: A=7 B=5 C=6 D=4 AB=4 AC=4 AD=1 BC=4 BD=2 CD=3 ABC=3.
BD10_ROWS = ["ABC", "ABC", "ABCD", "AB", "AC", "BCD", "CD", "D", "A", "A"]
INC1_ROWS = ["ABD", "BD", "BCD"]
INC23_ROWS = ["AB", "BC", "C"]


def db_from_rows(rows, dictionary=None, first_tid=1):
    return TransactionDB.from_token_rows(
        [list(row) for row in rows],
        dictionary,
        tids=[str(first_tid + i) for i in range(len(rows))],
    )


@pytest.fixture
def bd10():
    return db_from_rows(BD10_ROWS)


@pytest.fixture
def inc1(bd10):
    return db_from_rows(INC1_ROWS, bd10.dictionary, first_tid=11)


@pytest.fixture
def inc23(bd10):
    return db_from_rows(INC23_ROWS, bd10.dictionary, first_tid=11)


def iset(dictionary: ItemDictionary, tokens: str):
    return canonical_itemset(list(tokens), dictionary)


def store_from(counts: dict[str, int], cardinality, threshold, dictionary):
    """Build a store from {"ABC": 3, ...} style token-string counts."""
    store = FrequentSetStore(cardinality, Threshold(Fraction(threshold)), dictionary)
    for tokens, count in counts.items():
        store.add(iset(dictionary, tokens), count)
    return store


def as_token_counts(store: FrequentSetStore) -> dict[str, int]:
    """Render a store as {"ABC": 3, ...} for readable comparisons."""
    out = {}
    for itemset in store.itemsets():
        out["".join(sorted(store.dictionary.tokens(itemset)))] = store.count(itemset)
    return out
