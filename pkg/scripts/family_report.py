#!/usr/bin/env python3
"""Tabulate the two counterexample families as n grows.

For each size the table reports the longest induced path present, the size of
a minimum dominating set of the block S (drawn from the pool the family is
tight against), and how long the exact domination computation took.  The
point of the families is visible in the last columns: the cover size grows
linearly with n while the forbidden path length stays put.

    python scripts/family_report.py --n-max 8
    python scripts/family_report.py --variant 2 --n-max 6 --emit out/fam2
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

sys.path.insert(0, "src")

from p7cover.families import FamilyInstance, build_example  # noqa: E402
from p7cover.graph import to_edge_list, to_graph6  # noqa: E402
from p7cover.oracle import min_dominating_set_of  # noqa: E402
from p7cover.paths import find_induced_pt  # noqa: E402


def emit_instance(fam: FamilyInstance, prefix: str) -> tuple[str, str]:
    edge_path = Path(prefix + ".edges")
    sidecar_path = Path(prefix + ".json")
    edge_path.parent.mkdir(parents=True, exist_ok=True)
    edge_path.write_text(to_edge_list(fam.graph))
    sidecar = {
        "variant": fam.variant,
        "n": fam.n,
        "graph6": to_graph6(fam.graph),
        "s": list(fam.s),
        "a1": list(fam.a1),
        "a2": list(fam.a2),
        "labels": {str(v): name for v, name in sorted(fam.labels.items())},
    }
    sidecar_path.write_text(json.dumps(sidecar, indent=2, sort_keys=True) + "\n")
    return str(edge_path), str(sidecar_path)


def longest_induced_path(g, cap: int = 9) -> int:
    best = 0
    for t in range(2, cap + 1):
        if find_induced_pt(g, t) is None:
            break
        best = t
    return best


def report(variant: int, n_max: int, emit: str | None) -> None:
    print(f"variant {variant}")
    print(f"{'n':>3} {'|V|':>5} {'|E|':>6} {'longest P_t':>12} {'dom(S)':>7} {'secs':>7}")
    for n in range(1, n_max + 1):
        fam = build_example(variant, n)
        g = fam.graph
        pool = range(g.n) if variant == 1 else [v for v in range(g.n) if v not in fam.s]
        start = time.time()
        dom = len(min_dominating_set_of(g, fam.s, pool=pool))
        secs = time.time() - start
        print(f"{n:>3} {g.n:>5} {len(g.edges()):>6} {longest_induced_path(g):>12} "
              f"{dom:>7} {secs:>7.2f}")
        if emit:
            edge_path, sidecar_path = emit_instance(fam, f"{emit}_v{variant}_n{n}")
            print(f"      wrote {edge_path} and {sidecar_path}")


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--variant", type=int, choices=(1, 2), default=0,
                    help="default: both")
    ap.add_argument("--n-max", type=int, default=6)
    ap.add_argument("--emit", help="write edge lists and json sidecars with this prefix")
    args = ap.parse_args()
    for variant in ((args.variant,) if args.variant else (1, 2)):
        report(variant, args.n_max, args.emit)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
