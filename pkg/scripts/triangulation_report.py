#!/usr/bin/env python3
"""Summarize placing triangulations of the homogenized hive cone.

For each requested rank the script builds the triangulation under the default
insertion order (the recorded unimodular one where the natural order falls
short), reports cell counts and determinant spectra, and times a batch of
integral-vertex witnesses.  With --explore it also shuffles the insertion
order a few times to show how the cell count and determinant spectrum move
with the order.

Usage:
    python3 scripts/triangulation_report.py --ranks 2 3 4
    python3 scripts/triangulation_report.py --ranks 4 --explore 5 --witnesses 10
"""

import argparse
import random
import sys
import time
from collections import Counter

from hivecount import hive_matrix, hive_triangulation, placing_triangulation
from hivecount.linalg import dot
from hivecount.triangulation import hive_matrix_rows, integral_vertex_witness


def spectrum(tri):
    return dict(sorted(Counter(abs(cell.det) for cell in tri.cells).items()))


def describe(tag, tri, elapsed):
    dets = spectrum(tri)
    uni = "unimodular" if set(dets) == {1} else f"NOT unimodular, |det| counts {dets}"
    print(f"  {tag}: {len(tri.cells)} cells, span dim {tri.span_dim}, "
          f"{uni}  [{elapsed:.2f}s]")


def witness_batch(rank, count, rng):
    rows = hive_matrix_rows(rank)
    n = len(rows[0])
    t0 = time.perf_counter()
    for _ in range(count):
        x = [rng.randint(0, 6) for _ in range(n)]
        b = tuple(dot(r, x) for r in rows)
        w = integral_vertex_witness(b, rank)
        assert w is not None
    per = (time.perf_counter() - t0) / count
    print(f"  {count} integral vertex witnesses, {per * 1000:.0f} ms each")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ranks", type=int, nargs="+", default=[2, 3, 4])
    parser.add_argument("--explore", type=int, default=0, metavar="K",
                        help="also try K random insertion orders per rank")
    parser.add_argument("--witnesses", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rng = random.Random(args.seed)
    for rank in args.ranks:
        print(f"rank {rank}:")
        t0 = time.perf_counter()
        tri = hive_triangulation(rank)
        describe("default order", tri, time.perf_counter() - t0)

        cfg = hive_matrix(rank)
        t0 = time.perf_counter()
        natural = placing_triangulation(cfg)
        describe("natural order", natural, time.perf_counter() - t0)

        for k in range(args.explore):
            order = list(range(len(cfg)))
            rng.shuffle(order)
            t0 = time.perf_counter()
            shuffled = placing_triangulation(cfg, order=order)
            describe(f"random order {k}", shuffled, time.perf_counter() - t0)

        if args.witnesses:
            witness_batch(rank, args.witnesses, rng)
    return 0


if __name__ == "__main__":
    sys.exit(main())
