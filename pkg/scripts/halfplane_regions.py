"""Grid data for the eps-efficient and eps-weakly efficient regions of the half-plane instance.

K = {x1 >= 0}, f(x) = (x1, x2).  Writes one CSV per tolerance with the
verdict at every grid point, ready for plotting elsewhere.

    python scripts/halfplane_regions.py --eps1 1 --out-dir regions/
"""

import argparse
from fractions import Fraction
from pathlib import Path

from epscert import GridSpec, LinearFractionalObjective, PolyhedralSet, Problem, sweep
from epscert.cli import sweep_csv


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--eps1", default="1")
    parser.add_argument("--eps2", default="0")
    parser.add_argument("--steps", type=int, default=11)
    parser.add_argument("--out-dir", default=".")
    args = parser.parse_args()

    problem = Problem(
        (LinearFractionalObjective.linear([1, 0]), LinearFractionalObjective.linear([0, 1])),
        PolyhedralSet([[-1, 0]], [0], 2),
    )
    eps = (Fraction(args.eps1), Fraction(args.eps2))
    grid = GridSpec.from_box([-Fraction(1, 2), -1], [2 * eps[0] or 2, 1], [args.steps, args.steps])
    rows = sweep(problem, eps, grid)
    out = Path(args.out_dir) / f"halfplane_eps_{args.eps1.replace('/', '_')}_{args.eps2.replace('/', '_')}.csv"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(sweep_csv(problem, rows))

    counts = {}
    for r in rows:
        key = r.classification.verdict.value if r.classification else r.status
        counts[key] = counts.get(key, 0) + 1
    print(f"wrote {out}")
    for key, n in sorted(counts.items()):
        print(f"  {key:>24}: {n}")


if __name__ == "__main__":
    main()
