"""Association-rule generation from a frequent-itemset store."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import MissingSubsetCount
from .model import FrequentSetStore, Itemset, render_itemset

# Naive subset enumeration is exponential in the itemset size; desk-scale
# stores never get close to this.
MAX_RULE_ITEMSET = 20


@dataclass(frozen=True)
class Rule:
    """antecedent -> consequent with the combined support count and exact confidence."""

    antecedent: Itemset
    consequent: Itemset
    support_count: int
    confidence: Fraction


def generate_rules(f: FrequentSetStore, minconf: Fraction) -> set[Rule]:
    """All rules ``X -> Z\\X`` over stored itemsets Z with confidence >= minconf.

    Both sides are nonempty and disjoint; confidence is count(Z)/count(X) with
    both counts read from the store, compared exactly and inclusively at the
    bound. A store that lost a subset count (broken downward closure) raises
    MissingSubsetCount.
    """
    out: set[Rule] = set()
    for k in sorted(f.levels):
        if k < 2:
            continue
        for full, full_count in f.level(k).items():
            if len(full) > MAX_RULE_ITEMSET:
                raise ValueError(
                    f"itemset of size {len(full)} exceeds the rule-enumeration guard "
                    f"of {MAX_RULE_ITEMSET}"
                )
            for r in range(1, k):
                for antecedent in combinations(full, r):
                    ante_count = f.count(antecedent)
                    if ante_count is None:
                        raise MissingSubsetCount(
                            f"store has {render_itemset(full, f.dictionary)} but not its "
                            f"subset {render_itemset(antecedent, f.dictionary)}"
                        )
                    confidence = Fraction(full_count, ante_count)
                    if confidence >= minconf:
                        remaining = set(full) - set(antecedent)
                        out.add(
                            Rule(
                                antecedent=antecedent,
                                consequent=tuple(sorted(remaining)),
                                support_count=full_count,
                                confidence=confidence,
                            )
                        )
    return out
