#!/usr/bin/env python3
"""Survey the prime superset across a range of imaginary quadratic fields.

Runs the full pipeline for every fundamental discriminant in a range with
class number > 1 and tabulates the outcome: class data, chosen generators,
component sizes, and the union.

    python3 scripts/survey_fields.py --min -100 [--s0-count 4] [--mazur-bound 100000]
"""

import argparse
import time

from quatbound.bound import BoundParams, assemble_bound
from quatbound.classgroup import fill_class_data
from quatbound.quadfield import is_fundamental, make_field


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--min", type=int, default=-100, help="most negative discriminant")
    ap.add_argument("--s0-count", type=int, default=4)
    ap.add_argument("--mazur-bound", type=int, default=10**5)
    args = ap.parse_args()

    params = BoundParams(s0_count=args.s0_count, mazur_bound=args.mazur_bound)
    print(f"{'D':>6} {'h_k':>4} {'h':>3} {'S':<12} {'|union|':>7} "
          f"{'cert':>5} {'time':>6}  union")
    for D in range(-3, args.min - 1, -1):
        if not is_fundamental(D):
            continue
        ctx = make_field(D)
        fill_class_data(ctx)
        if ctx.class_number == 1:
            continue
        t0 = time.monotonic()
        rep = assemble_bound(ctx, params)
        dt = time.monotonic() - t0
        S = ",".join(str(q.l) for q in rep.S)
        union = ",".join(str(p) for p in sorted(rep.union))
        print(f"{D:>6} {ctx.class_number:>4} {ctx.exponent_h:>3} {S:<12} "
              f"{len(rep.union):>7} {str(rep.certified):>5} {dt:>5.1f}s  {union}")


if __name__ == "__main__":
    main()
