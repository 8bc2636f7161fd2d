"""Direct dominance checks, independent of the multiplier certificates.

Because every denominator is positive on K, ``f_i(y) < c_i`` is equivalent
there to the linear inequality ``(a_i - c_i b_i).y < c_i beta_i - alpha_i``.
A system of strict linear inequalities over K is solvable iff the largest
uniform slack ``t`` is positive, so each decision is one exact LP with the
slack capped at 1 to keep it bounded.
"""

from __future__ import annotations

import enum
import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .core import ONE, ZERO, Problem, Query, as_vector, check_query, evaluate
from .errors import EpsCertError
from .simplex import FREE, LE, LinearProgram, Status, solve


class WitnessKind(enum.Enum):
    STRICT_ALL = "StrictAll"
    WEAK_WITH_STRICT_INDEX = "WeakWithStrictIndex"


@dataclass(frozen=True)
class DominanceWitness:
    """A point of K dominating ``f(x_bar) - eps``.

    ``strict_index`` is the 0-based objective that is strictly improved when
    ``kind`` is WEAK_WITH_STRICT_INDEX, else None.
    """

    y: tuple
    kind: WitnessKind
    strict_index: Optional[int] = None

    def holds(self, problem: Problem, query: Query) -> bool:
        """Exact re-verification under :func:`evaluate`."""
        if not problem.feasible_set.contains(self.y):
            return False
        fx = problem.f(query.x_bar)
        levels = [v - e for v, e in zip(fx, query.epsilon)]
        fy = [evaluate(o, self.y) for o in problem.objectives]
        if self.kind is WitnessKind.STRICT_ALL:
            return all(u < c for u, c in zip(fy, levels))
        j = self.strict_index
        return all(u <= c for u, c in zip(fy, levels)) and fy[j] < levels[j]


def _levels(problem: Problem, query: Query):
    check_query(problem, query)
    fx = problem.f(query.x_bar)
    return [v - e for v, e in zip(fx, query.epsilon)]


def _slack_lp(problem: Problem, levels, strict) -> LinearProgram:
    # variables: y (n, free), t (free); maximize t
    K = problem.feasible_set
    n = problem.n
    rows, rhs, kinds = [], [], []
    for i, (obj, c) in enumerate(zip(problem.objectives, levels)):
        coeffs = [ai - c * bi for ai, bi in zip(obj.a, obj.b)]
        rows.append(coeffs + [ONE if i in strict else ZERO])
        rhs.append(c * obj.beta - obj.alpha)
        kinds.append(LE)
    for row, di in zip(K.C, K.d):
        rows.append(list(row) + [ZERO])
        rhs.append(di)
        kinds.append(LE)
    rows.append([ZERO] * n + [ONE])
    rhs.append(ONE)
    kinds.append(LE)
    return LinearProgram([ZERO] * n + [-ONE], rows, rhs, kinds, [FREE] * (n + 1))


def _max_slack_point(problem, levels, strict):
    out = solve(_slack_lp(problem, levels, strict))
    if out.status is Status.INFEASIBLE and len(strict) < problem.m:
        # the non-strict rows alone already have no solution in K
        return None
    if out.status is not Status.OPTIMAL:
        # with every row slackened the LP is feasible, and t <= 1 bounds it
        raise RuntimeError(f"slack LP returned {out.status.value}")
    *y, t = out.x
    return tuple(y) if t > 0 else None


def weak_dominates_check(problem: Problem, query: Query) -> Optional[DominanceWitness]:
    """A ``y`` in K with ``f(y) < f(x_bar) - eps``, or None if x_bar is eps-weakly efficient."""
    levels = _levels(problem, query)
    y = _max_slack_point(problem, levels, set(range(problem.m)))
    if y is None:
        return None
    return DominanceWitness(y, WitnessKind.STRICT_ALL)


def efficient_dominates_check(problem: Problem, query: Query) -> Optional[DominanceWitness]:
    """A ``y`` with ``f(y) <= f(x_bar) - eps`` strictly in some coordinate, or None.

    Coordinates are tried in ascending order; the first one that can be made
    strict is reported.
    """
    levels = _levels(problem, query)
    for j in range(problem.m):
        y = _max_slack_point(problem, levels, {j})
        if y is not None:
            return DominanceWitness(y, WitnessKind.WEAK_WITH_STRICT_INDEX, j)
    return None


@dataclass(frozen=True)
class FinitePointSet:
    points: tuple

    def __post_init__(self):
        pts = tuple(as_vector(p) for p in self.points)
        if not pts:
            raise ValueError("point set must be nonempty")
        if len({len(p) for p in pts}) != 1:
            raise ValueError("points must share one dimension")
        object.__setattr__(self, "points", pts)

    @property
    def dim(self) -> int:
        return len(self.points[0])


def cone_lemma_check(omega, generated: str = "conic") -> tuple:
    """``(prop_i, prop_ii)`` for a finite set Omega.

    prop_i: no point of Omega is strictly negative.

    prop_ii: the closed cone generated by Omega misses the open negative
    orthant.  With ``generated="conic"`` the cone is the set of nonnegative
    combinations, and prop_ii fails iff ``theta >= 0, sum_j theta_j w_j <= -1``
    is feasible.  With ``generated="rays"`` it is the union of the rays
    ``{t w : t >= 0}``, tested one generator at a time.  Both cones are closed
    for finite Omega, so no closure step is needed.

    prop_ii implies prop_i in either mode; the converse is guaranteed only for
    rays (two points such as (-1, 1) and (1, -2) have a strictly negative
    conic combination while neither is negative).
    """
    if not isinstance(omega, FinitePointSet):
        omega = FinitePointSet(tuple(omega))
    if generated not in ("conic", "rays"):
        raise ValueError(f"unknown cone kind {generated!r}")
    pts = omega.points
    prop_i = not any(all(v < 0 for v in w) for w in pts)
    groups = [pts] if generated == "conic" else [(w,) for w in pts]
    prop_ii = True
    for group in groups:
        rows = [[w[k] for w in group] for k in range(omega.dim)]
        lp = LinearProgram([ZERO] * len(group), rows, [-ONE] * omega.dim)
        if solve(lp).status is not Status.INFEASIBLE:
            prop_ii = False
            break
    return prop_i, prop_ii


@dataclass(frozen=True)
class GridSpec:
    """Axis-aligned grid: the Cartesian product of per-axis value lists."""

    axes: tuple

    def __post_init__(self):
        object.__setattr__(self, "axes", tuple(as_vector(a) for a in self.axes))

    @classmethod
    def from_box(cls, lo: Sequence, hi: Sequence, steps: Sequence[int]) -> "GridSpec":
        """``steps[k]`` evenly spaced values from ``lo[k]`` to ``hi[k]`` inclusive.

        An axis with ``lo > hi`` or zero steps is empty, and so is the grid.
        One step yields just ``lo``.
        """
        if not len(lo) == len(hi) == len(steps):
            raise ValueError("lo, hi and steps must have equal length")
        axes = []
        for l, h, k in zip(as_vector(lo), as_vector(hi), steps):
            if k < 0:
                raise ValueError("steps must be nonnegative")
            if l > h or k == 0:
                axes.append(())
            elif k == 1:
                axes.append((l,))
            else:
                axes.append(tuple(l + (h - l) * Fraction(j, k - 1) for j in range(k)))
        return cls(tuple(axes))

    def points(self):
        # row-major: last axis varies fastest
        return [tuple(p) for p in itertools.product(*self.axes)]


@dataclass(frozen=True)
class SweepRow:
    point: tuple
    status: str  # "ok", "skipped" (outside K) or an error class name
    classification: Optional[object] = None
    message: str = ""


def sweep(problem: Problem, epsilon, grid: GridSpec, workers: int = 1) -> list:
    """Classify every grid point; points outside K are skipped, errors are recorded."""
    from .certify import classify

    epsilon = as_vector(epsilon)

    def run(point):
        if not problem.feasible_set.contains(point):
            return SweepRow(point, "skipped")
        try:
            return SweepRow(point, "ok", classify(problem, Query(point, epsilon)))
        except EpsCertError as exc:
            return SweepRow(point, type(exc).__name__, None, str(exc))

    points = grid.points()
    if workers > 1:
        with ThreadPoolExecutor(workers) as pool:
            return list(pool.map(run, points))
    return [run(p) for p in points]
