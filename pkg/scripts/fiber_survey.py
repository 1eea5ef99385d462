#!/usr/bin/env python3
"""Survey random constant covers over F_p: class frequencies and the
resolution law.

For each sampled (a, b, c, d) the script enumerates both fibers, checks
that the line map and the resolution map are mutually inverse away from
fat points, and tallies ramification classes against the discriminant.

    python3 scripts/fiber_survey.py --p 7 --samples 500 --seed 0
"""

import argparse
import collections
import random
import sys

sys.path.insert(0, "src")

from triplecover import (
    CoverData,
    PrimeField,
    RamificationClass,
    branch_discriminant,
    fiber_report,
)


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--p", type=int, default=7)
    parser.add_argument("--samples", type=int, default=500)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    field = PrimeField(args.p)
    rng = random.Random(args.seed)
    classes = collections.Counter()
    fiber_sizes = collections.Counter()
    law_violations = 0
    disc_mismatches = 0

    for _ in range(args.samples):
        cover = CoverData.from_constants(field, [rng.randrange(args.p) for _ in range(4)])
        report = fiber_report(cover, {})
        classes[str(report.ram_class)] += 1
        fiber_sizes[len(report.x_points)] += 1
        if report.fat:
            if len(report.x_points) != 1 or len(report.z_points) != args.p + 1:
                law_violations += 1
        else:
            if not report.bijection_ok:
                law_violations += 1
            disc = branch_discriminant(cover).constant_value()
            unramified = report.ram_class is RamificationClass.UNRAMIFIED
            if unramified != (disc != 0):
                disc_mismatches += 1

    print(f"p = {args.p}, samples = {args.samples}, seed = {args.seed}")
    print("ramification classes:")
    for name, count in sorted(classes.items()):
        print(f"  {name:18s} {count:6d}  ({count / args.samples:.3f})")
    print("rational fiber sizes:", dict(sorted(fiber_sizes.items())))
    print(f"resolution-law violations: {law_violations}")
    print(f"discriminant/class mismatches: {disc_mismatches}")


if __name__ == "__main__":
    main()
