"""Frequent-itemset mining with incremental maintenance under support-threshold
change, plus rule generation, synthetic data, file formats, and a benchmark
harness."""

from .apriori import CandidateSet, apriori_gen, mine_apriori, mine_bruteforce
from .bench import BenchRow, run_bench
from .datagen import GenParams, generate_db
from .errors import (
    ImscError,
    InconsistentStore,
    InvalidParams,
    InvariantViolation,
    MalformedLine,
    MissingSubsetCount,
    ResultMismatch,
    UniverseTooLarge,
)
from .formats import (
    load_fis,
    load_transactions,
    save_fis,
    save_rules,
    save_transactions,
    write_bench_csv,
)
from .maintenance import (
    ItemsetClassification,
    MaintenancePlan,
    MaintenanceStats,
    Scenario,
    build_plan,
    candidate_floor,
    classify_itemsets,
    classify_scenario,
    compute_cpt,
    maintain,
    maintain_mixed,
    maintain_no_losers,
    maintain_no_winners,
)
from .model import (
    FrequentSetStore,
    ItemDictionary,
    Itemset,
    Threshold,
    Transaction,
    TransactionDB,
    canonical_itemset,
    count_items,
    count_supports,
    is_subset,
    meets_threshold,
    render_itemset,
)
from .rules import Rule, generate_rules

__all__ = [
    "BenchRow",
    "CandidateSet",
    "FrequentSetStore",
    "GenParams",
    "ImscError",
    "InconsistentStore",
    "InvalidParams",
    "InvariantViolation",
    "ItemDictionary",
    "Itemset",
    "ItemsetClassification",
    "MaintenancePlan",
    "MaintenanceStats",
    "MalformedLine",
    "MissingSubsetCount",
    "ResultMismatch",
    "Rule",
    "Scenario",
    "Threshold",
    "Transaction",
    "TransactionDB",
    "UniverseTooLarge",
    "apriori_gen",
    "build_plan",
    "candidate_floor",
    "canonical_itemset",
    "classify_itemsets",
    "classify_scenario",
    "compute_cpt",
    "count_items",
    "count_supports",
    "generate_db",
    "generate_rules",
    "is_subset",
    "load_fis",
    "load_transactions",
    "maintain",
    "maintain_mixed",
    "maintain_no_losers",
    "maintain_no_winners",
    "meets_threshold",
    "mine_apriori",
    "mine_bruteforce",
    "render_itemset",
    "run_bench",
    "save_fis",
    "save_rules",
    "save_transactions",
    "write_bench_csv",
]
