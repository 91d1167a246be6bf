#!/usr/bin/env python3
"""Generate a random LOT corpus and batch-certify it, printing a summary.

Usage: python scripts/certify_corpus.py [n] [count] [seed]
"""

import sys
from collections import Counter

from lotcert import certify_lof, certify_relative
from lotcert.oracle import random_reduced_injective_lot


def main() -> int:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    count = int(sys.argv[2]) if len(sys.argv) > 2 else 100
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 0
    outcomes = Counter()
    for i in range(count):
        log = random_reduced_injective_lot(n, seed * 1_000_003 + i)
        cert = certify_lof(log)
        if cert.verdicts["DR_claim"] is True:
            outcomes["plain: DR"] += 1
            continue
        rel = certify_relative(log)
        verdict = rel.verdicts["relative_coloring_test"]
        if verdict is True:
            outcomes["relative: certified"] += 1
        else:
            outcomes[f"relative: {verdict}"] += 1
    width = max(len(k) for k in outcomes)
    for key, value in sorted(outcomes.items()):
        print(f"{key:<{width}}  {value:4d}  ({100.0 * value / count:.1f}%)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
