"""Agreement statistics between multiplier certificates and the dominance oracle.

    python scripts/random_agreement.py --seed 0 --count 1000
"""

import argparse
import collections
import time

from epscert import (
    efficient_dominates_check,
    find_interior_certificate,
    find_weak_certificate,
    weak_dominates_check,
)
from epscert.instances import instance_stream


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--count", type=int, default=500)
    args = parser.parse_args()

    start = time.perf_counter()
    outcomes = collections.Counter()
    disagreements = 0
    for problem, query in instance_stream(args.seed, args.count):
        weak = find_weak_certificate(problem, query) is not None
        interior = find_interior_certificate(problem, query) is not None
        weak_eff = weak_dominates_check(problem, query) is None
        eff = efficient_dominates_check(problem, query) is None
        disagreements += weak != weak_eff or (interior and not eff) or (eff and not weak)
        if not weak:
            outcomes["not eps-weakly efficient"] += 1
        elif interior:
            outcomes["interior certificate"] += 1
        elif eff:
            outcomes["eps-efficient, boundary certificate only"] += 1
        else:
            outcomes["eps-weakly efficient only"] += 1
    elapsed = time.perf_counter() - start
    print(f"{args.count} instances in {elapsed:.1f}s, {disagreements} disagreements")
    for key, n in outcomes.most_common():
        print(f"  {key:>42}: {n}")


if __name__ == "__main__":
    main()
