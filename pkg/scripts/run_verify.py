#!/usr/bin/env python3
"""Run the full property battery over configurable corpora and print a report.

This is the long-form version of `p7cover verify`: every corpus knob is a
flag, so it can reproduce the acceptance-scale runs or push past them, e.g.

    python scripts/run_verify.py --exhaustive-max-n 6 --samples 1000 --workers 4
    python scripts/run_verify.py --samples 5000 --probs 0.12,0.2,0.3 --no-t
    python scripts/run_verify.py --samples 500 --t 6 --n-min 4 --n-max 12 --only p6-search

Exit status is 0 on a clean report and 1 if any check failed.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from itertools import chain

sys.path.insert(0, "src")

from p7cover.verify import (  # noqa: E402
    CheckConfig,
    exhaustive_connected_graphs,
    random_corpus,
    verify_graphs,
)


def parse_args() -> argparse.Namespace:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--exhaustive-max-n", type=int, default=0,
                    help="also sweep all connected graphs up to this n (0 = skip)")
    ap.add_argument("--samples", type=int, default=1000)
    ap.add_argument("--n-min", type=int, default=7)
    ap.add_argument("--n-max", type=int, default=14)
    ap.add_argument("--seed", type=int, default=101)
    ap.add_argument("--t", type=int, default=7,
                    help="repair random graphs to be P_t-free (see --no-t)")
    ap.add_argument("--no-t", action="store_true",
                    help="keep raw random draws, P7s and all")
    ap.add_argument("--probs", default="0.25,0.4,0.55",
                    help="comma separated edge probability palette")
    ap.add_argument("--only", choices=["covers", "p5-pairs", "p6-search"],
                    help="restrict to one check group instead of the full battery")
    ap.add_argument("--oracle-max-n", type=int, default=7,
                    help="brute-force cross checks on graphs up to this n")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--json", action="store_true")
    return ap.parse_args()


def build_config(args: argparse.Namespace) -> CheckConfig:
    if args.only == "p5-pairs":
        return CheckConfig(separator_covers=False, pmc_covers=False,
                           classification=False, nd_check=False, p5_pairs=True)
    if args.only == "p6-search":
        return CheckConfig(separator_covers=False, pmc_covers=False,
                           classification=False, nd_check=False, p6_search=True)
    if args.only == "covers":
        return CheckConfig(classification=False, nd_check=False)
    return CheckConfig(
        p5_pairs=True,
        p6_search=True,
        oracle_separators_max_n=args.oracle_max_n,
        oracle_pmcs_max_n=min(6, args.oracle_max_n),
    )


def main() -> int:
    args = parse_args()
    probs = tuple(float(p) for p in args.probs.split(","))
    t = None if args.no_t else args.t

    corpora = []
    for n in range(1, args.exhaustive_max_n + 1):
        corpora.append(exhaustive_connected_graphs(n))
    if args.samples:
        corpora.append(random_corpus(args.samples, args.n_min, args.n_max,
                                     seed=args.seed, t=t, probs=probs))

    start = time.time()
    rep = verify_graphs(chain.from_iterable(corpora), build_config(args),
                        workers=args.workers)
    elapsed = time.time() - start

    if args.json:
        print(json.dumps(rep.to_dict(), indent=2, sort_keys=True))
    else:
        print(f"graphs              {rep.graphs}")
        print(f"minimal separators  {rep.separators}")
        print(f"pmcs                {rep.pmcs}")
        print(f"covers produced     {rep.covers}  (max sep {rep.max_separator_cover}, "
              f"max pmc {rep.max_pmc_cover})")
        print(f"witnesses produced  {rep.witnesses}")
        print(f"elapsed             {elapsed:.1f}s")
        if rep.ok:
            print("all checks passed")
        else:
            print(f"{len(rep.violations)} VIOLATIONS")
            for v in rep.violations[:20]:
                print(f"  {v.graph6} [{v.check}] {v.detail}")
            if len(rep.violations) > 20:
                print(f"  ... and {len(rep.violations) - 20} more")
    return 0 if rep.ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
