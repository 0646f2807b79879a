#!/usr/bin/env python3
"""Fit stretched-coefficient quasi-polynomials on random triples.

For each sampled triple the script computes e(n) = c(n*lambda, n*mu; n*nu) up
to the number of dilations the fitter needs, fits a quasi-polynomial, verifies
it against two held-out dilations, and reports the period and whether every
coefficient is nonnegative.  Coefficient nonnegativity is an observation, not
a theorem, so it is counted rather than enforced.

Usage:
    python3 scripts/stretch_experiments.py --count 20 --rank 3 --max-entry 6
    python3 scripts/stretch_experiments.py --triple "2,1 2,1 3,2,1" --json
"""

import argparse
import json
import os
import random
import sys
import time

from hivecount import conjecture2_report, make_triple, report_to_json
from hivecount.weights import parse_weight

_REPO = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, os.path.join(_REPO, "tests"))


def sample_triples(seed, count, rank, max_entry):
    from _samplers import random_tensor_triples, random_triple_corpus

    rng = random.Random(seed)
    half = count // 2
    triples = random_triple_corpus(rng, count - half, rank, max_entry)
    triples += random_tensor_triples(rng, half, rank, max_entry)
    return triples


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=20)
    parser.add_argument("--rank", type=int, default=3)
    parser.add_argument("--max-entry", type=int, default=6)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--triple", metavar="'L M N'",
                        help="single triple, three comma-separated weights")
    parser.add_argument("--json", action="store_true",
                        help="emit one JSON report per line")
    args = parser.parse_args()

    if args.triple:
        lam, mu, nu = (parse_weight(w) for w in args.triple.split())
        triples = [make_triple(lam, mu, nu)]
    else:
        triples = sample_triples(args.seed, args.count, args.rank, args.max_entry)

    nonneg = 0
    periods = set()
    t0 = time.perf_counter()
    for triple in triples:
        report = conjecture2_report(triple)
        nonneg += report.all_coeffs_nonnegative
        periods.add(report.quasi.period)
        if args.json:
            print(json.dumps(report_to_json(report)))
        else:
            print(f"{triple.lam} {triple.mu} {triple.nu}: "
                  f"period={report.quasi.period} degree={report.quasi.degree} "
                  f"e(1)={report.verified_points[0][1]} "
                  f"nonnegative={'yes' if report.all_coeffs_nonnegative else 'no'}")
    elapsed = time.perf_counter() - t0
    print(f"\n{len(triples)} fits in {elapsed:.1f}s; periods seen: {sorted(periods)}; "
          f"nonnegative coefficient vectors: {nonneg}/{len(triples)}",
          file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
