from fractions import Fraction

import pytest

from imsc import (
    GenParams,
    InvalidParams,
    Threshold,
    generate_db,
    mine_apriori,
)


def signature(db):
    return [(t.tid, t.items) for t in db.transactions]


class TestGenerateDb:
    def test_deterministic_for_fixed_seed(self):
        params = GenParams(n_transactions=300, avg_tx_len=5, avg_pattern_len=2, seed=42)
        assert signature(generate_db(params)) == signature(generate_db(params))

    def test_distinct_seeds_differ(self):
        a = GenParams(n_transactions=300, avg_tx_len=5, avg_pattern_len=2, seed=1)
        b = GenParams(n_transactions=300, avg_tx_len=5, avg_pattern_len=2, seed=2)
        assert signature(generate_db(a)) != signature(generate_db(b))

    def test_empty_request(self):
        db = generate_db(GenParams(n_transactions=0, avg_tx_len=5, avg_pattern_len=2))
        assert db.cardinality == 0

    def test_transaction_count_and_mean_length(self):
        params = GenParams(n_transactions=2000, avg_tx_len=5, avg_pattern_len=2, seed=42)
        db = generate_db(params)
        assert db.cardinality == 2000
        mean = sum(len(t.items) for t in db.transactions) / 2000
        assert 5 * 0.85 <= mean <= 5 * 1.15
        assert all(len(t.items) >= 1 for t in db.transactions)

    def test_items_within_configured_universe(self):
        params = GenParams(
            n_transactions=200, avg_tx_len=4, avg_pattern_len=2, n_items=30, seed=3
        )
        db = generate_db(params)
        assert len(db.dictionary) == 30
        assert all(0 <= i < 30 for t in db.transactions for i in t.items)

    def test_generated_data_is_minable(self):
        params = GenParams(n_transactions=2000, avg_tx_len=5, avg_pattern_len=2, seed=42)
        db = generate_db(params)
        store = mine_apriori(db, Threshold(Fraction(1, 100)))
        assert len(store.level(1)) > 0
        assert store.max_level() >= 2

    def test_itemsets_are_canonical(self):
        db = generate_db(GenParams(n_transactions=100, avg_tx_len=5, avg_pattern_len=2, seed=9))
        for t in db.transactions:
            assert list(t.items) == sorted(set(t.items))


class TestGenParams:
    @pytest.mark.parametrize(
        "kwargs",
        [
            dict(n_transactions=-1, avg_tx_len=5, avg_pattern_len=2),
            dict(n_transactions=10, avg_tx_len=0, avg_pattern_len=2),
            dict(n_transactions=10, avg_tx_len=5, avg_pattern_len=0),
            dict(n_transactions=10, avg_tx_len=5, avg_pattern_len=2, n_patterns=0),
            dict(n_transactions=10, avg_tx_len=5, avg_pattern_len=2, n_items=0),
            dict(n_transactions=10, avg_tx_len=5, avg_pattern_len=2, corruption_mean=1.5),
        ],
    )
    def test_rejects_bad_params(self, kwargs):
        with pytest.raises(InvalidParams):
            generate_db(GenParams(**kwargs))

    def test_warns_when_patterns_exceed_transactions(self):
        with pytest.warns(UserWarning):
            GenParams(n_transactions=10, avg_tx_len=2, avg_pattern_len=5).validate()
