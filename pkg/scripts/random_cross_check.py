#!/usr/bin/env python3
"""Randomized agreement sweep over small hypergraphs.

Checks, on seeded random instances:
  - beta by enumeration == interference degree sigma,
  - chi_f <= B <= sigma * chi_f for nonzero demands,
  - the greedy pass succeeds under random orders whenever the weighted
    condition holds, and its output converts to a valid schedule,
  - the per-step accounting inequality never fails.

Exits nonzero if any check fails.
"""

import argparse
import random
import sys
from fractions import Fraction

from hypersched import (
    DemandVector,
    ScheduleStuck,
    b_bound,
    beta_by_enumeration,
    check_delta_condition,
    delta_matrix,
    fractional_chromatic_number,
    greedy_schedule,
    greedy_step_bound,
    interference_metrics,
    intervals_to_schedule,
    minimalize,
    validate_schedule,
)


def random_hypergraph(rng, max_links, max_edges):
    n = rng.randint(2, max_links)
    raw = []
    for _ in range(rng.randint(0, max_edges)):
        size = rng.randint(2, min(5, n))
        raw.append(rng.sample(range(n), size))
    return minimalize(n, raw)


def random_demand(rng, n):
    den = rng.choice([2, 3, 4, 6, 12])
    return DemandVector(tuple(Fraction(rng.randint(0, den), den) for _ in range(n)))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-links", type=int, default=8)
    ap.add_argument("--max-edges", type=int, default=6)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    failures = 0
    greedy_runs = 0
    for k in range(args.count):
        h = random_hypergraph(rng, args.max_links, args.max_edges)
        tau = random_demand(rng, h.num_links)

        beta = beta_by_enumeration(h).beta
        sigma = interference_metrics(h).sigma
        if beta != sigma:
            print(f"[{k}] beta {beta} != sigma {sigma} on {h}")
            failures += 1

        chi = fractional_chromatic_number(h, tau).value
        bound = b_bound(h, tau).value
        if chi > bound or (not tau.is_zero and bound > sigma * chi):
            print(f"[{k}] ratio sandwich broken: chi={chi} B={bound} sigma={sigma}")
            failures += 1

        if check_delta_condition(h, tau).holds:
            greedy_runs += 1
            w = delta_matrix(h)
            order = tuple(rng.sample(range(h.num_links), h.num_links))
            steps = []
            try:
                assigned = greedy_schedule(
                    h, w, tau, order,
                    step_callback=lambda link, a: steps.append(
                        greedy_step_bound(h, w, a, link)
                    ),
                )
                validate_schedule(h, intervals_to_schedule(assigned), tau)
            except ScheduleStuck as e:
                print(f"[{k}] greedy stuck despite condition: {e}")
                failures += 1
            if any(lhs > rhs for lhs, rhs in steps):
                print(f"[{k}] step accounting violated")
                failures += 1

    print(
        f"{args.count} instances checked, {greedy_runs} greedy runs, "
        f"{failures} failures"
    )
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
