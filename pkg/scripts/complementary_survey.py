#!/usr/bin/env python3
"""Survey the complementary (norm-subgroup) sweep over inert primes.

Usage: python3 scripts/complementary_survey.py [STOP]

For each prime p <= STOP this records whether "some zero-free sequence has
minimal period m" and "some eigenvalue has order m in F_{p^2}^x" agree for
every m | 2(p+1), and lists the zero-free periods found.  Small inert primes
with no zero-free sequences at all (3, 7, 23, ...) are the interesting
disagreements.
"""

import sys

sys.path.insert(0, "src")

from fibfield.modarith import is_prime
from fibfield.theorem import verify_complementary


def main() -> int:
    stop = int(sys.argv[1]) if len(sys.argv) > 1 else 200
    disagreements = []
    for p in range(3, stop + 1):
        if not is_prime(p) or p in (2, 5):
            continue
        r = verify_complementary(p)
        star_ms = [m for m, e in r.entries.items() if e.cond_period]
        print(f"p = {p:4d}  equivalence_23 = {str(r.equivalence_23):5s}  "
              f"star periods: {star_ms}  notes: {len(r.notes)}")
        if not r.equivalence_23:
            disagreements.append(p)
    print()
    print(f"primes with period/order disagreement: {disagreements}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
