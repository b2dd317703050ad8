#!/usr/bin/env python3
"""Sweep the three-condition equivalence over a prime range and summarize.

Usage: python3 scripts/run_theorem_sweep.py [START] [STOP]

Prints one line per prime and a final summary of every (p, m) where the
condition triple is not uniform.  Within the default range the only
non-uniform triples are (13, 12) and (17, 16): zero-free orbits of period
2(p+1) whose values cover all of F_p^x satisfy the literal value-set
condition at m = p - 1 while the period and order conditions fail.
"""

import sys

sys.path.insert(0, "src")

from fibfield.modarith import is_prime
from fibfield.theorem import verify_main


def main() -> int:
    start = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    stop = int(sys.argv[2]) if len(sys.argv) > 2 else 1000
    nonuniform = []
    for p in range(start, stop + 1):
        if not is_prime(p) or p in (2, 5):
            continue
        r = verify_main(p)
        bad = [m for m, t in r.triples.items() if not t.uniform]
        flag = "consistent" if r.consistent else f"NON-UNIFORM at m in {bad}"
        true_ms = [m for m, t in r.triples.items() if t.cond_period]
        print(f"p = {p:5d}  {flag:30s}  star periods dividing p-1: {true_ms}")
        nonuniform.extend((p, m) for m in bad)
    print()
    if nonuniform:
        print(f"non-uniform (p, m) pairs: {nonuniform}")
    else:
        print("all condition triples uniform")
    return 0


if __name__ == "__main__":
    sys.exit(main())
