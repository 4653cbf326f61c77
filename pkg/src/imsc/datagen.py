"""Seeded synthetic transaction generator in the classic market-basket style.

The model: a pool of "potential pattern" itemsets is drawn first (sizes
Poisson-distributed around the configured average, items uniform, each pattern
partially overlapping the previous one), and each pattern gets an
exponentially decaying pick weight by index. Transactions are then filled by
weighted pattern picks, each pick corrupted by dropping a random suffix
fraction, until the transaction reaches its own Poisson-drawn target length.

Simplifications versus the full lineage of such generators, on purpose: no
item taxonomy, a single suffix-drop corruption mechanism, transaction lengths
clamped to at least one item and trimmed exactly to target, and deterministic
index-based pattern weights instead of randomly drawn ones.

Randomness comes from ``random.Random`` (the Mersenne Twister MT19937) seeded
from the params, using only ``random()``, ``randint``, ``sample`` and
``shuffle``; identical params give byte-identical output.
"""

from __future__ import annotations

import math
import random
import warnings
from bisect import bisect_left
from dataclasses import dataclass
from itertools import accumulate

from .errors import InvalidParams
from .model import ItemDictionary, Transaction, TransactionDB

# Decay constant for pattern pick weights: weight(i) = exp(-_WEIGHT_DECAY * i / n_patterns),
# concentrating picks on an effective head of roughly n_patterns / _WEIGHT_DECAY patterns.
_WEIGHT_DECAY = 8.0


@dataclass(frozen=True)
class GenParams:
    """Knobs of the generator; the naming mirrors the usual Txx.Iyy.Dzz scheme
    (avg transaction length, avg pattern length, transaction count)."""

    n_transactions: int
    avg_tx_len: float
    avg_pattern_len: float
    n_patterns: int = 2000
    n_items: int = 1000
    corruption_mean: float = 0.5
    seed: int = 0

    def validate(self):
        if self.n_transactions < 0:
            raise InvalidParams(f"n_transactions must be >= 0, got {self.n_transactions}")
        if not self.avg_tx_len > 0:
            raise InvalidParams(f"avg_tx_len must be positive, got {self.avg_tx_len}")
        if not self.avg_pattern_len > 0:
            raise InvalidParams(
                f"avg_pattern_len must be positive, got {self.avg_pattern_len}"
            )
        if self.n_patterns < 1:
            raise InvalidParams(f"n_patterns must be >= 1, got {self.n_patterns}")
        if self.n_items < 1:
            raise InvalidParams(f"n_items must be >= 1, got {self.n_items}")
        if not 0 <= self.corruption_mean <= 1:
            raise InvalidParams(
                f"corruption_mean must lie in [0, 1], got {self.corruption_mean}"
            )
        if self.avg_pattern_len > self.avg_tx_len:
            warnings.warn(
                "avg_pattern_len exceeds avg_tx_len; most picks will be trimmed",
                stacklevel=2,
            )


def _poisson(rng: random.Random, lam: float) -> int:
    # Knuth's product method; fine for the small means used here.
    limit = math.exp(-lam)
    k = 0
    p = 1.0
    while True:
        p *= rng.random()
        if p <= limit:
            return k
        k += 1


def _build_patterns(rng: random.Random, params: GenParams) -> list[tuple[int, ...]]:
    patterns: list[tuple[int, ...]] = []
    prev: tuple[int, ...] = ()
    for _ in range(params.n_patterns):
        size = min(max(1, _poisson(rng, params.avg_pattern_len)), params.n_items)
        carry_max = min(len(prev), size)
        chosen = set(rng.sample(prev, rng.randint(0, carry_max)) if carry_max else ())
        while len(chosen) < size:
            chosen.add(rng.randrange(params.n_items))
        pattern = list(chosen)
        rng.shuffle(pattern)  # suffix corruption needs a meaningful item order
        patterns.append(tuple(pattern))
        prev = patterns[-1]
    return patterns


def generate_db(params: GenParams, dictionary: ItemDictionary | None = None) -> TransactionDB:
    """Generate a transaction database; deterministic for fixed params."""
    params.validate()
    rng = random.Random(params.seed)
    dictionary = dictionary if dictionary is not None else ItemDictionary()
    item_ids = [dictionary.intern(str(i)) for i in range(params.n_items)]

    patterns = _build_patterns(rng, params)
    cum_weights = list(
        accumulate(
            math.exp(-_WEIGHT_DECAY * i / params.n_patterns)
            for i in range(params.n_patterns)
        )
    )
    total_weight = cum_weights[-1]

    transactions = []
    for _ in range(params.n_transactions):
        target = min(max(1, _poisson(rng, params.avg_tx_len)), params.n_items)
        chosen: set[int] = set()
        stalls = 0
        while len(chosen) < target:
            if stalls > 4 * target + 16:
                # Pattern picks stopped contributing new items; fall back to
                # uniform fill so generation always terminates.
                chosen.add(rng.randrange(params.n_items))
                continue
            idx = bisect_left(cum_weights, rng.random() * total_weight)
            pattern = patterns[idx]
            drop = min(1.0, rng.random() * 2 * params.corruption_mean)
            keep = max(1, len(pattern) - int(drop * len(pattern) + 0.5))
            before = len(chosen)
            for raw in pattern[:keep]:
                chosen.add(raw)
                if len(chosen) >= target:
                    break
            if len(chosen) == before:
                stalls += 1
        items = tuple(sorted(item_ids[raw] for raw in chosen))
        transactions.append(Transaction(None, items))
    return TransactionDB(transactions, dictionary)
