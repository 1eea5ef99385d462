#!/usr/bin/env python3
"""Run both cone censuses over a range of primes and print count tables.

    python3 scripts/census_sweep.py --primes 5,7,11
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from triplecover import cone_census, quadric_cone, segre_cone, smoothness_probe


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", default="5,7", help="comma separated primes >= 5")
    parser.add_argument("--probe", action="store_true", help="also run the Jacobian probe")
    args = parser.parse_args()
    primes = [int(x) for x in args.primes.split(",") if x.strip()]

    header = f"{'example':14s} {'p':>4s} {'|X|':>8s} {'|Graph|':>8s} {'vertex':>7s} {'ok':>4s} {'sec':>7s}"
    print(header)
    for p in primes:
        for maker in (quadric_cone, segre_cone):
            example = maker()
            start = time.perf_counter()
            census = cone_census(example, p)
            elapsed = time.perf_counter() - start
            print(
                f"{example.name:14s} {p:4d} {census.x_count:8d} {census.graph_count:8d} "
                f"{census.vertex_fiber:7d} {'yes' if census.ok else 'NO':>4s} {elapsed:7.2f}"
            )
            if args.probe:
                probe = smoothness_probe(example, p)
                status = "smooth" if probe.graph_deficient == () else "DEFICIENT"
                vertex_only = probe.x_singular_is_vertex(example)
                print(
                    f"{'':14s} graph {status}; X singular exactly at vertex: "
                    f"{'yes' if vertex_only else 'NO'}"
                )


if __name__ == "__main__":
    main()
