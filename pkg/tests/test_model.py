import random
from fractions import Fraction

import pytest

from imsc import (
    FrequentSetStore,
    InvariantViolation,
    ItemDictionary,
    Threshold,
    TransactionDB,
    canonical_itemset,
    count_items,
    count_supports,
    is_subset,
    meets_threshold,
)

from conftest import db_from_rows, iset, store_from


def brute_count(db, itemset):
    return sum(1 for t in db.transactions if set(itemset) <= set(t.items))


class TestCanonicalItemset:
    def test_dedup_and_sort(self):
        d = ItemDictionary()
        result = canonical_itemset(["B", "A", "A"], d)
        assert result == tuple(sorted(result))
        assert set(d.tokens(result)) == {"A", "B"}

    def test_empty(self):
        assert canonical_itemset([], ItemDictionary()) == ()

    def test_sort_only(self):
        d = ItemDictionary()
        result = canonical_itemset(["C", "A", "B"], d)
        assert result == tuple(sorted(result))
        assert len(result) == 3

    def test_interning_is_bijective_and_dense(self):
        d = ItemDictionary()
        ids = [d.intern(t) for t in ["x", "y", "x", "z"]]
        assert ids == [0, 1, 0, 2]
        assert [d.token(i) for i in range(3)] == ["x", "y", "z"]
        assert len(d) == 3


class TestIsSubset:
    def test_basic(self):
        d = ItemDictionary()
        assert is_subset(iset(d, "AB"), iset(d, "ABC"))
        assert not is_subset(iset(d, "AD"), iset(d, "ABC"))

    def test_empty_subset_of_everything(self):
        d = ItemDictionary()
        assert is_subset((), iset(d, "ABC"))
        assert is_subset((), ())

    def test_superset_not_subset(self):
        d = ItemDictionary()
        assert not is_subset(iset(d, "ABC"), iset(d, "AB"))


class TestCountSupports:
    def test_fixture_counts(self, bd10):
        d = bd10.dictionary
        counts = count_supports(bd10, [iset(d, "A"), iset(d, "ABC")])
        assert counts[iset(d, "A")] == 7 == brute_count(bd10, iset(d, "A"))
        assert counts[iset(d, "ABC")] == 3 == brute_count(bd10, iset(d, "ABC"))

    def test_empty_itemset_counts_cardinality(self, bd10):
        assert count_supports(bd10, [()]) == {(): 10}

    def test_exactly_one_ledger_increment(self, bd10):
        before = bd10.scan_passes
        count_supports(bd10, [iset(bd10.dictionary, "A"), iset(bd10.dictionary, "AB")])
        assert bd10.scan_passes == before + 1
        count_items(bd10)
        assert bd10.scan_passes == before + 2

    def test_order_invariance(self, bd10):
        d = bd10.dictionary
        targets = [iset(d, t) for t in ["A", "B", "AB", "CD", "ABC", "BD"]]
        baseline = count_supports(bd10, targets)
        rng = random.Random(5)
        for _ in range(3):
            shuffled = list(bd10.transactions)
            rng.shuffle(shuffled)
            assert count_supports(TransactionDB(shuffled, d), targets) == baseline

    def test_union_additivity(self, bd10, inc1):
        d = bd10.dictionary
        targets = [iset(d, t) for t in ["A", "D", "BD", "ABD", "ABCD"]]
        merged = bd10.union(inc1)
        left = count_supports(bd10, targets)
        right = count_supports(inc1, targets)
        total = count_supports(merged, targets)
        assert all(total[x] == left[x] + right[x] for x in targets)

    def test_anti_monotonicity(self, bd10):
        d = bd10.dictionary
        pairs = [("A", "AB"), ("AB", "ABC"), ("C", "BCD"), ("", "A")]
        for small, large in pairs:
            counts = count_supports(bd10, [iset(d, small), iset(d, large)])
            assert counts[iset(d, small)] >= counts[iset(d, large)]

    def test_zero_for_absent_targets(self, bd10):
        d = bd10.dictionary
        ghost = canonical_itemset(["Z"], d)
        assert count_supports(bd10, [ghost]) == {ghost: 0}

    def test_mixed_sizes_one_pass(self, bd10):
        d = bd10.dictionary
        targets = [iset(d, "A"), iset(d, "AB"), iset(d, "ABC"), ()]
        before = bd10.scan_passes
        counts = count_supports(bd10, targets)
        assert bd10.scan_passes == before + 1
        assert counts == {iset(d, "A"): 7, iset(d, "AB"): 4, iset(d, "ABC"): 3, (): 10}


class TestMeetsThreshold:
    def test_above_fractional_bound(self):
        assert meets_threshold(5, Threshold(Fraction(35, 100)), 13)

    def test_below_fractional_bound(self):
        assert not meets_threshold(4, Threshold(Fraction(35, 100)), 13)

    def test_inclusive_at_exact_boundary(self):
        assert meets_threshold(5, Threshold(Fraction(50, 100)), 10)
        assert not meets_threshold(4, Threshold(Fraction(50, 100)), 10)

    def test_zero_accepts_everything(self):
        assert meets_threshold(0, Threshold(0), 100)

    def test_one_accepts_only_total(self):
        assert meets_threshold(100, Threshold(1), 100)
        assert not meets_threshold(99, Threshold(1), 100)


class TestThreshold:
    @pytest.mark.parametrize(
        "text,expected",
        [
            ("30%", Fraction(3, 10)),
            ("0.30", Fraction(3, 10)),
            ("3/10", Fraction(3, 10)),
            ("2.5%", Fraction(1, 40)),
            (" 100% ", Fraction(1)),
            ("0", Fraction(0)),
        ],
    )
    def test_parse(self, text, expected):
        assert Threshold.parse(text) == expected

    @pytest.mark.parametrize("text", ["150%", "-1/2", "3/2", "abc", "", "1/0"])
    def test_parse_rejects(self, text):
        with pytest.raises(ValueError):
            Threshold.parse(text)

    def test_lowest_terms(self):
        t = Threshold(Fraction(30, 100))
        assert (t.numerator, t.denominator) == (3, 10)

    def test_range_check(self):
        with pytest.raises(ValueError):
            Threshold(Fraction(11, 10))


class TestTransactionDB:
    def test_ingest_canonicalizes(self):
        db = db_from_rows(["BAA"])
        assert db.transactions[0].items == iset(db.dictionary, "AB")

    def test_cardinality_and_tids(self, bd10):
        assert bd10.cardinality == len(bd10.transactions) == 10
        assert bd10.transactions[0].tid == "1"

    def test_union_requires_shared_dictionary(self, bd10):
        other = db_from_rows(["A"])
        with pytest.raises(ValueError):
            bd10.union(other)

    def test_union_preserves_order(self, bd10, inc1):
        merged = bd10.union(inc1)
        assert merged.cardinality == 13
        assert [t.tid for t in merged][:3] == ["1", "2", "3"]
        assert [t.tid for t in merged][-3:] == ["11", "12", "13"]
        assert merged.scan_passes == 0


class TestFrequentSetStore:
    def test_validate_passes_on_good_store(self, bd10):
        store = store_from(
            {"A": 7, "B": 5, "C": 6, "D": 4, "AB": 4, "AC": 4, "BC": 4, "CD": 3, "ABC": 3},
            10,
            Fraction(3, 10),
            bd10.dictionary,
        )
        store.validate()

    def test_validate_rejects_below_threshold(self, bd10):
        store = store_from({"A": 2}, 10, Fraction(3, 10), bd10.dictionary)
        with pytest.raises(InvariantViolation, match="below threshold"):
            store.validate()

    def test_validate_rejects_broken_closure(self, bd10):
        store = store_from({"A": 7, "AB": 4}, 10, Fraction(3, 10), bd10.dictionary)
        with pytest.raises(InvariantViolation, match="subset"):
            store.validate()

    def test_validate_rejects_count_domination_breach(self, bd10):
        store = store_from({"A": 4, "B": 5, "AB": 5}, 10, Fraction(3, 10), bd10.dictionary)
        with pytest.raises(InvariantViolation, match="below its superset"):
            store.validate()

    def test_equality_is_content_based(self, bd10):
        a = store_from({"A": 7, "B": 5}, 10, Fraction(1, 2), bd10.dictionary)
        b = store_from({"B": 5, "A": 7}, 10, Fraction(1, 2), bd10.dictionary)
        c = store_from({"A": 7}, 10, Fraction(1, 2), bd10.dictionary)
        assert a == b
        assert a != c
        assert a != store_from({"A": 7, "B": 5}, 11, Fraction(1, 2), bd10.dictionary)

    def test_level_access_and_len(self, bd10):
        store = store_from({"A": 7, "AB": 4, "AC": 4}, 10, Fraction(3, 10), bd10.dictionary)
        assert len(store) == 3
        assert len(store.level(2)) == 2
        assert store.level(5) == {}
        assert store.max_level() == 2
