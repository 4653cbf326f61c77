"""Text file formats: transaction databases, frequent-itemset stores, rule
lists, and the benchmark CSV.

Transactions: UTF-8 text, one transaction per line, items as whitespace
separated tokens. Lines starting with ``#`` and blank lines are ignored. An
optional leading token ending in ``:`` carries the transaction label, e.g.
``11: A B D``. Saving then loading reproduces the database up to
canonicalization (duplicate items collapse, items sort).

Stores: three header lines ``!version 1``, ``!D <int>``, ``!minsup <num>/<den>``
followed by one body line per itemset, ``<count><TAB><tokens single-space
separated>``. Tokens within a line sort lexicographically and body lines sort
by (size, tokens), so a store's file is a canonical function of its content
and round-trips byte-exactly. Loading re-verifies every store invariant.
"""

from __future__ import annotations

import csv
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable

from .errors import InvariantViolation, MalformedLine
from .model import (
    FrequentSetStore,
    ItemDictionary,
    Threshold,
    Transaction,
    TransactionDB,
    canonical_itemset,
)

if TYPE_CHECKING:
    from .bench import BenchRow
    from .rules import Rule

BENCH_CSV_COLUMNS = [
    "s_prime_num",
    "s_prime_den",
    "cpt_num",
    "cpt_den",
    "scenario",
    "imsc_ms",
    "apriori_ms",
    "imsc_bd_passes",
    "imsc_inc_passes",
    "candidates_generated",
    "candidates_pruned",
    "frequent_count",
]


def load_transactions(path, dictionary: ItemDictionary | None = None) -> TransactionDB:
    """Read a transaction file; pass ``dictionary`` to share an id space."""
    dictionary = dictionary if dictionary is not None else ItemDictionary()
    transactions = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            tokens = line.split()
            tid = None
            if tokens[0].endswith(":"):
                tid = tokens[0][:-1]
                if not tid:
                    raise MalformedLine(lineno, "empty transaction label before ':'")
                tokens = tokens[1:]
            for token in tokens:
                if token.endswith(":"):
                    raise MalformedLine(
                        lineno, f"label token {token!r} after the first position"
                    )
            transactions.append(Transaction(tid, canonical_itemset(tokens, dictionary)))
    return TransactionDB(transactions, dictionary)


def save_transactions(db: TransactionDB, path):
    with open(path, "w", encoding="utf-8") as fh:
        for t in db.transactions:
            tokens = db.dictionary.tokens(t.items)
            if t.tid is not None:
                fh.write(f"{t.tid}:" + ("" if not tokens else " " + " ".join(tokens)) + "\n")
            elif tokens:
                fh.write(" ".join(tokens) + "\n")
            else:
                # A bare empty line would be skipped on load, silently changing
                # the cardinality.
                raise ValueError(
                    "an empty transaction without a label is not representable"
                )


def _parse_header_line(line: str, lineno: int, key: str) -> str:
    parts = line.split(maxsplit=1)
    if len(parts) != 2 or parts[0] != key:
        raise MalformedLine(lineno, f"expected '{key} <value>', got {line!r}")
    return parts[1].strip()


def load_fis(path, dictionary: ItemDictionary | None = None) -> FrequentSetStore:
    """Read a store file, re-verifying every invariant before returning."""
    dictionary = dictionary if dictionary is not None else ItemDictionary()
    with open(path, "r", encoding="utf-8") as fh:
        lines = [line.rstrip("\n") for line in fh]
    if len(lines) < 3:
        raise MalformedLine(len(lines) + 1, "missing store header")
    version = _parse_header_line(lines[0], 1, "!version")
    if version != "1":
        raise MalformedLine(1, f"unsupported format version {version!r}")
    try:
        cardinality = int(_parse_header_line(lines[1], 2, "!D"))
    except ValueError as exc:
        raise MalformedLine(2, str(exc)) from exc
    minsup_text = _parse_header_line(lines[2], 3, "!minsup")
    try:
        num_text, den_text = minsup_text.split("/")
        threshold = Threshold(Fraction(int(num_text), int(den_text)))
    except ValueError as exc:
        raise MalformedLine(3, f"bad threshold {minsup_text!r}: {exc}") from exc

    store = FrequentSetStore(cardinality, threshold, dictionary)
    for lineno, line in enumerate(lines[3:], 4):
        if not line:
            continue
        count_text, sep, token_text = line.partition("\t")
        tokens = token_text.split()
        if not sep or not tokens:
            raise MalformedLine(lineno, f"expected '<count><TAB><tokens>', got {line!r}")
        try:
            count = int(count_text)
        except ValueError as exc:
            raise MalformedLine(lineno, f"bad count {count_text!r}") from exc
        itemset = canonical_itemset(tokens, dictionary)
        if itemset in store:
            raise InvariantViolation(f"duplicate itemset {{{' '.join(sorted(tokens))}}}")
        store.add(itemset, count)
    store.validate()
    return store


def save_fis(store: FrequentSetStore, path):
    body = []
    for level in store.levels.values():
        for itemset, count in level.items():
            tokens = sorted(store.dictionary.tokens(itemset))
            body.append((len(itemset), tokens, count))
    body.sort(key=lambda entry: (entry[0], entry[1]))
    thr = store.base_threshold
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("!version 1\n")
        fh.write(f"!D {store.base_cardinality}\n")
        fh.write(f"!minsup {thr.numerator}/{thr.denominator}\n")
        for _, tokens, count in body:
            fh.write(f"{count}\t{' '.join(tokens)}\n")


def save_rules(rules: Iterable["Rule"], dictionary: ItemDictionary, path):
    """One rule per line: ``X -> Y<TAB>support=n<TAB>confidence=num/den``."""
    rendered = []
    for rule in rules:
        ante = " ".join(dictionary.tokens(rule.antecedent))
        cons = " ".join(dictionary.tokens(rule.consequent))
        conf = rule.confidence
        rendered.append(
            (
                len(rule.antecedent) + len(rule.consequent),
                ante,
                cons,
                f"{ante} -> {cons}\tsupport={rule.support_count}"
                f"\tconfidence={conf.numerator}/{conf.denominator}",
            )
        )
    rendered.sort()
    with open(path, "w", encoding="utf-8") as fh:
        for entry in rendered:
            fh.write(entry[3] + "\n")


def write_bench_csv(rows: Iterable["BenchRow"], path):
    """Materialize benchmark rows with the pinned column layout."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(BENCH_CSV_COLUMNS)
        for row in rows:
            writer.writerow(
                [
                    row.s_prime.numerator,
                    row.s_prime.denominator,
                    row.cpt.numerator,
                    row.cpt.denominator,
                    row.scenario.value,
                    f"{row.imsc_ms:.3f}",
                    f"{row.apriori_ms:.3f}",
                    row.imsc_bd_passes,
                    row.imsc_inc_passes,
                    row.candidates_generated,
                    row.candidates_pruned,
                    row.frequent_count,
                ]
            )
