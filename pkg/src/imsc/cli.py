"""Command-line interface: mine, maintain, rules, gen, and bench subcommands.

Exit codes: 0 on success, 1 on a usage error, 2 on a data or invariant error.
Threshold arguments accept "30%", "0.30", or "3/10", all parsed exactly.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from typing import Sequence

from .apriori import mine_apriori
from .bench import run_bench
from .datagen import GenParams, generate_db
from .errors import ImscError
from .formats import (
    load_fis,
    load_transactions,
    save_fis,
    save_rules,
    save_transactions,
    write_bench_csv,
)
from .maintenance import classify_itemsets, maintain
from .model import Threshold, render_itemset
from .rules import generate_rules


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _threshold(text: str) -> Threshold:
    try:
        return Threshold.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _sweep(text: str) -> list[Threshold]:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("sweep must look like LO:HI:STEP")
    try:
        lo, hi, step = (Threshold.parse(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))
    if step <= 0:
        raise argparse.ArgumentTypeError("sweep step must be positive")
    if hi < lo:
        raise argparse.ArgumentTypeError("sweep upper bound is below the lower bound")
    points = []
    current = Fraction(lo)
    while current <= hi:
        points.append(Threshold(current))
        current += step
    return points


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="imsc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    mine = sub.add_parser("mine", help="mine frequent itemsets from a transaction file")
    mine.add_argument("--db", required=True, help="transaction file")
    mine.add_argument("--minsup", required=True, type=_threshold)
    mine.add_argument("--out", required=True, help="store file to write")
    mine.set_defaults(handler=_cmd_mine)

    upd = sub.add_parser(
        "maintain", help="update a mined store for inserted transactions and a new threshold"
    )
    upd.add_argument("--db", required=True, help="original transaction file")
    upd.add_argument("--inc", required=True, help="inserted transaction file")
    upd.add_argument("--fis", required=True, help="store mined from --db")
    upd.add_argument("--minsup", required=True, type=_threshold, help="new threshold")
    upd.add_argument("--out", required=True, help="store file to write")
    upd.add_argument(
        "--report",
        action="store_true",
        help="print the plan plus winner/persistent/loser itemsets",
    )
    upd.add_argument(
        "--no-validate",
        action="store_true",
        help="skip the sampled recount of the input store",
    )
    upd.set_defaults(handler=_cmd_maintain)

    rls = sub.add_parser("rules", help="generate association rules from a store")
    rls.add_argument("--fis", required=True)
    rls.add_argument("--minconf", required=True, type=_threshold)
    rls.add_argument("--out", required=True)
    rls.set_defaults(handler=_cmd_rules)

    gen = sub.add_parser("gen", help="generate a synthetic transaction file")
    gen.add_argument("--transactions", required=True, type=int)
    gen.add_argument("--avg-len", required=True, type=float)
    gen.add_argument("--avg-pattern-len", required=True, type=float)
    gen.add_argument("--patterns", type=int, default=2000)
    gen.add_argument("--items", type=int, default=1000)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", required=True)
    gen.set_defaults(handler=_cmd_gen)

    bench = sub.add_parser(
        "bench", help="sweep maintenance thresholds against a full re-mine"
    )
    bench.add_argument("--db", required=True)
    bench.add_argument("--inc", required=True)
    bench.add_argument("--minsup-old", required=True, type=_threshold)
    bench.add_argument("--sweep", required=True, type=_sweep, help="LO:HI:STEP")
    bench.add_argument("--csv", required=True)
    bench.add_argument("--repeats", type=int, default=3)
    bench.set_defaults(handler=_cmd_bench)

    return parser


def _cmd_mine(args) -> int:
    db = load_transactions(args.db)
    store = mine_apriori(db, args.minsup)
    save_fis(store, args.out)
    print(f"mined {len(store)} itemsets from {db.cardinality} transactions -> {args.out}")
    return 0


def _sorted_render(itemsets, dictionary):
    keyed = sorted(itemsets, key=lambda x: (len(x), dictionary.tokens(x)))
    return " ".join(render_itemset(x, dictionary) for x in keyed)


def _cmd_maintain(args) -> int:
    db = load_transactions(args.db)
    inc = load_transactions(args.inc, db.dictionary)
    store = load_fis(args.fis, db.dictionary)
    result, plan = maintain(store, db, inc, args.minsup, validate=not args.no_validate)
    save_fis(result, args.out)
    if args.report:
        print(f"scenario={plan.scenario.value}")
        print(f"cpt={plan.cpt}")
        print(f"min_supp={plan.min_supp}")
        split = classify_itemsets(store, result)
        print(f"winners={_sorted_render(split.winners, db.dictionary)}")
        print(f"persistents={_sorted_render(split.persistents, db.dictionary)}")
        print(f"losers={_sorted_render(split.losers, db.dictionary)}")
    print(f"maintained {len(result)} itemsets -> {args.out}")
    return 0


def _cmd_rules(args) -> int:
    store = load_fis(args.fis)
    rules = generate_rules(store, args.minconf)
    save_rules(rules, store.dictionary, args.out)
    print(f"wrote {len(rules)} rules -> {args.out}")
    return 0


def _cmd_gen(args) -> int:
    params = GenParams(
        n_transactions=args.transactions,
        avg_tx_len=args.avg_len,
        avg_pattern_len=args.avg_pattern_len,
        n_patterns=args.patterns,
        n_items=args.items,
        seed=args.seed,
    )
    db = generate_db(params)
    save_transactions(db, args.out)
    print(f"generated {db.cardinality} transactions -> {args.out}")
    return 0


def _cmd_bench(args) -> int:
    db = load_transactions(args.db)
    inc = load_transactions(args.inc, db.dictionary)
    rows = run_bench(db, inc, args.minsup_old, args.sweep, repeats=args.repeats)
    write_bench_csv(rows, args.csv)
    print(f"wrote {len(rows)} sweep rows -> {args.csv}")
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    try:
        return args.handler(args)
    except (ImscError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
