"""Seeded random instances for the property suites and ``epscert selftest``.

Feasible sets are built around an anchor point so they are never empty.
Every coordinate gets a lower bound unless all denominators ignore it, and
denominator data is nonnegative with ``beta`` large enough to stay positive
above the lower bounds; the standing condition therefore holds by
construction (callers still run :func:`validate_problem`).
"""

from __future__ import annotations

import random
from fractions import Fraction

from .core import (
    ONE,
    ZERO,
    LinearFractionalObjective,
    PolyhedralSet,
    Problem,
    Query,
    validate_problem,
)
from .simplex import EQ, FREE, GE, LE, NONNEG, LinearProgram, Status, solve

EPS_CHOICES = (Fraction(0), Fraction(1, 4), Fraction(1))
_HALVES = [Fraction(k, 2) for k in range(-6, 7)]


def _coef(rng):
    return rng.choice(_HALVES) if rng.random() < 0.3 else Fraction(rng.randint(-3, 3))


def random_problem(rng: random.Random, n=None, m=None, bounded=None, max_p=5) -> Problem:
    n = n or rng.randint(1, 3)
    m = m or rng.randint(1, 3)
    if bounded is None:
        bounded = rng.random() < 0.5
    free_axes = {j for j in range(n) if rng.random() < 0.25}
    lower = [rng.choice((ZERO, -ONE)) for _ in range(n)]
    anchor = [lower[j] + Fraction(rng.randint(0, 4), 2) for j in range(n)]
    C, d = [], []
    for j in range(n):
        if j not in free_axes:
            row = [ZERO] * n
            row[j] = -ONE
            C.append(row)
            d.append(-lower[j])
    if bounded:
        # a box on the free axes plus a simplex-type cap on the rest
        for j in sorted(free_axes):
            for sign in (ONE, -ONE):
                row = [ZERO] * n
                row[j] = sign
                C.append(row)
                d.append(sign * anchor[j] + rng.randint(0, 2))
        row = [ZERO if j in free_axes else ONE for j in range(n)]
        if any(row):
            C.append(row)
            d.append(sum(anchor[j] for j in range(n) if j not in free_axes) + rng.randint(0, 3))
    while len(C) < max_p and rng.random() < 0.6:
        row = [_coef(rng) for _ in range(n)]
        C.append(row)
        d.append(sum(r * a for r, a in zip(row, anchor)) + rng.choice((ZERO, Fraction(1, 2), ONE)))
    if len(C) > max_p:
        C, d = C[:max_p], d[:max_p]
    objectives = []
    for _ in range(m):
        a = [_coef(rng) for _ in range(n)]
        alpha = _coef(rng)
        if rng.random() < 0.5:
            objectives.append(LinearFractionalObjective.linear(a, alpha))
            continue
        b = [ZERO if j in free_axes else rng.choice((ZERO, Fraction(1, 2), ONE, Fraction(2)))
             for j in range(n)]
        beta = ONE + rng.randint(0, 2) + sum(bj * abs(lj) for bj, lj in zip(b, lower))
        objectives.append(LinearFractionalObjective(a, alpha, b, beta))
    return Problem(tuple(objectives), PolyhedralSet(C, d, n)), tuple(anchor)


def random_candidate(rng: random.Random, problem: Problem, anchor) -> tuple:
    """A point of K: the anchor, an LP vertex, or a mix of the two."""
    K = problem.feasible_set
    roll = rng.random()
    if roll < 0.2:
        return tuple(anchor)
    weights = [Fraction(rng.randint(1, 3)) for _ in range(problem.m)]
    c = [sum(w * o.a[k] for w, o in zip(weights, problem.objectives)) for k in range(problem.n)]
    if rng.random() < 0.3:
        c = [_coef(rng) for _ in range(problem.n)]
    out = solve(K.lp(c))
    if out.status is not Status.OPTIMAL:
        return tuple(anchor)
    if roll < 0.7:
        return out.x
    s = Fraction(rng.randint(1, 3), 4)
    return tuple(s * a + (1 - s) * v for a, v in zip(anchor, out.x))


def random_epsilon(rng: random.Random, m: int, choices=EPS_CHOICES) -> tuple:
    return tuple(rng.choice(choices) for _ in range(m))


def instance_stream(seed: int, count: int, eps_choices=EPS_CHOICES):
    """Yield ``count`` validated ``(problem, query)`` pairs, reproducibly."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        problem, anchor = random_problem(rng)
        if not validate_problem(problem).ok:
            continue
        x = random_candidate(rng, problem, anchor)
        yield problem, Query(x, random_epsilon(rng, problem.m, eps_choices))
        produced += 1


def random_objective_and_points(rng: random.Random, n=None):
    """Objective with positive denominators at two random points ``x, y``."""
    n = n or rng.randint(1, 4)
    while True:
        a = [_coef(rng) for _ in range(n)]
        b = [_coef(rng) for _ in range(n)]
        obj = LinearFractionalObjective(a, _coef(rng), b, _coef(rng))
        x = tuple(_coef(rng) for _ in range(n))
        y = tuple(_coef(rng) for _ in range(n))
        if obj.denominator(x) > 0 and obj.denominator(y) > 0:
            return obj, x, y


def random_point_set(rng: random.Random, max_dim=4, max_points=6) -> list:
    dim = rng.randint(1, max_dim)
    return [tuple(Fraction(rng.randint(-4, 4)) for _ in range(dim))
            for _ in range(rng.randint(1, max_points))]


def random_lp(rng: random.Random) -> LinearProgram:
    """Random LP with mixed row kinds and bounds, feasible by construction."""
    nvar = rng.randint(1, 5)
    nrow = rng.randint(1, 5)
    bounds = [FREE if rng.random() < 0.3 else NONNEG for _ in range(nvar)]
    x0 = [Fraction(rng.randint(0 if b == NONNEG else -3, 3)) for b in bounds]
    rows, rhs, kinds = [], [], []
    for _ in range(nrow):
        row = [Fraction(rng.randint(-3, 3)) for _ in range(nvar)]
        val = sum(r * x for r, x in zip(row, x0))
        kind = rng.choice((LE, LE, GE, EQ))
        slack = rng.randint(0, 2)
        rows.append(row)
        rhs.append(val + slack if kind == LE else val - slack if kind == GE else val)
        kinds.append(kind)
    objective = [Fraction(rng.randint(-2, 4)) for _ in range(nvar)]
    return LinearProgram(objective, rows, rhs, kinds, bounds)


def dual_lp(lp: LinearProgram) -> LinearProgram:
    """Dual of ``lp`` written as a minimization (its optimum is minus the dual value).

    Primal: min c.x, rows a_i.x (<=,=,>=) r_i, bounds.  Dual multipliers
    u_i >= 0 on >= rows, <= 0 on <= rows (stored as -w_i, w_i >= 0), free on
    = rows; maximize r.u subject to A^T u <= c_j (x_j >= 0) or = c_j (x_j free).
    """
    signs = [ONE if k == GE else -ONE if k == LE else ONE for k in lp.row_kinds]
    ubounds = [FREE if k == EQ else NONNEG for k in lp.row_kinds]
    rows, rhs, kinds = [], [], []
    for j, bound in enumerate(lp.bounds):
        rows.append([s * row[j] for s, row in zip(signs, lp.matrix)])
        rhs.append(lp.objective[j])
        kinds.append(LE if bound == NONNEG else EQ)
    objective = [-s * r for s, r in zip(signs, lp.rhs)]
    return LinearProgram(objective, rows, rhs, kinds, ubounds)
