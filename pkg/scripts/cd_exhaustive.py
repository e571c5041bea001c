#!/usr/bin/env python3
"""Exhaustive Cauchy-Davenport sweep over small prime fields.

Enumerates every pair of multisets with support in F_p and size up to the cap,
checks d(A+B) >= min(p, d(A)+d(B)-1) together with the excess-degree
inequality, and reports the equality cases.
"""

import argparse
import time

from nullgrid import FieldSpec, cauchy_davenport_check, iter_multisets, multiset_deg, sumset


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", default="2,3,5,7", help="comma-separated primes")
    parser.add_argument("--max-size", type=int, default=4)
    parser.add_argument("--show-equality", type=int, default=5, metavar="N",
                        help="print the first N equality cases per prime")
    args = parser.parse_args()

    grand_total = 0
    start = time.time()
    for p in (int(v) for v in args.primes.split(",")):
        spec = FieldSpec.prime(p)
        pool = list(iter_multisets(spec, args.max_size))
        total = 0
        equalities = []
        for a in pool:
            for b in pool:
                chk = cauchy_davenport_check(a, b)
                assert chk.holds, f"bound violated: A={a} B={b}"
                s = sumset(a, b)
                assert multiset_deg(s) >= multiset_deg(a) + multiset_deg(b), \
                    f"excess-degree violated: A={a} B={b}"
                if chk.lhs == chk.rhs:
                    equalities.append((a, b, chk.lhs))
                total += 1
        grand_total += total
        print(f"p={p}: {len(pool)} multisets, {total} pairs, "
              f"{len(equalities)} equality cases")
        for a, b, v in equalities[: args.show_equality]:
            print(f"    d(A+B) = {v} = min(p, d(A)+d(B)-1)  A={a}  B={b}")
    print(f"all {grand_total} pairs satisfy both inequalities "
          f"({time.time() - start:.1f}s)")


if __name__ == "__main__":
    main()
