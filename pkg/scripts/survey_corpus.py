#!/usr/bin/env python3
"""Classification census over the enumerated small-instance corpora.

Classifies every solvable poset up to --poset-size (bdl) and every
solvable involutive poset up to --inv-size (demorgan, and kleene where
applicable), then prints a type-by-variety table.  A quick way to see
how rare each unification type is at desk scale.
"""

from __future__ import annotations

import argparse
import time
from collections import Counter

from morgan_unify import (
    classify,
    enumerate_invposets_upto,
    enumerate_posets_upto,
    is_solvable,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--poset-size", type=int, default=5)
    parser.add_argument("--inv-size", type=int, default=4)
    args = parser.parse_args()

    start = time.time()
    census: Counter[tuple[str, str]] = Counter()
    families: Counter[tuple[str, str]] = Counter()

    for p in enumerate_posets_upto(args.poset_size):
        if is_solvable(p, "bdl"):
            result = classify(p, "bdl")
            census["bdl", result.utype] += 1
            if result.utype == "nullary":
                families["bdl", result.certificate.family] += 1

    for iv in enumerate_invposets_upto(args.inv_size):
        for variety in ("demorgan", "kleene"):
            if variety == "kleene" and not iv.is_kleene:
                continue
            if not is_solvable(iv, variety):
                continue
            result = classify(iv, variety)
            census[variety, result.utype] += 1
            if result.utype == "nullary":
                families[variety, result.certificate.family] += 1

    print(f"{'variety':<10} {'unitary':>8} {'finitary':>9} {'nullary':>8}")
    for variety in ("bdl", "kleene", "demorgan"):
        row = [census[variety, t] for t in ("unitary", "finitary", "nullary")]
        print(f"{variety:<10} {row[0]:>8} {row[1]:>9} {row[2]:>8}")
    if families:
        print("\nnullary certificate families:")
        for (variety, family), count in sorted(families.items()):
            print(f"  {variety:<10} {family:<4} {count}")
    print(f"\nelapsed: {time.time() - start:.1f}s")


if __name__ == "__main__":
    main()
