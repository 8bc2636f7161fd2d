"""Exact data model for linear fractional vector problems.

Scalars are :class:`fractions.Fraction` throughout; vectors are tuples of
fractions and matrices are tuples of row tuples.  Constructors accept ints,
``Fraction``, ``Decimal`` and rational strings such as ``"3/4"`` or
``"0.25"``; binary floats are rejected so nothing inexact leaks in.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Optional, Sequence

from .errors import (
    DimensionMismatch,
    DomainViolation,
    EmptyFeasibleSet,
    InfeasibleCandidate,
    NegativeEpsilon,
    ZeroDenominator,
)
from .simplex import FREE, LinearProgram, Status, feasible_point, solve

ZERO = Fraction(0)
ONE = Fraction(1)


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"refusing inexact or boolean value {value!r}")
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot convert {type(value).__name__} to Fraction")


def as_vector(values) -> tuple:
    return tuple(as_fraction(v) for v in values)


def as_matrix(rows) -> tuple:
    return tuple(as_vector(r) for r in rows)


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(u, v) if x and y), ZERO)


def fmt(q: Fraction) -> str:
    """Canonical ``p/q`` rendering used in every report."""
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class LinearFractionalObjective:
    """``x -> (a.x + alpha) / (b.x + beta)``."""

    a: tuple
    alpha: Fraction
    b: tuple
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_vector(self.a))
        object.__setattr__(self, "b", as_vector(self.b))
        object.__setattr__(self, "alpha", as_fraction(self.alpha))
        object.__setattr__(self, "beta", as_fraction(self.beta))
        if len(self.a) != len(self.b):
            raise DimensionMismatch(f"len(a)={len(self.a)} but len(b)={len(self.b)}")

    @classmethod
    def linear(cls, a, alpha=0):
        a = as_vector(a)
        return cls(a, alpha, (ZERO,) * len(a), ONE)

    @property
    def n(self) -> int:
        return len(self.a)

    @property
    def is_linear(self) -> bool:
        return self.beta == 1 and not any(self.b)

    def numerator(self, x) -> Fraction:
        return dot(self.a, x) + self.alpha

    def denominator(self, x) -> Fraction:
        return dot(self.b, x) + self.beta


@dataclass(frozen=True)
class PolyhedralSet:
    """``{x in R^n : C x <= d}``.  ``p = 0`` describes all of R^n."""

    C: tuple
    d: tuple
    n: int

    def __post_init__(self):
        C, d = as_matrix(self.C), as_vector(self.d)
        if self.n < 1:
            raise DimensionMismatch("dimension n must be positive")
        if len(C) != len(d):
            raise DimensionMismatch(f"C has {len(C)} rows but d has {len(d)} entries")
        for i, row in enumerate(C):
            if len(row) != self.n:
                raise DimensionMismatch(f"row {i} of C has {len(row)} entries, expected {self.n}")
        object.__setattr__(self, "C", C)
        object.__setattr__(self, "d", d)

    @property
    def p(self) -> int:
        return len(self.C)

    def contains(self, x) -> bool:
        if len(x) != self.n:
            raise DimensionMismatch(f"point has {len(x)} coordinates, expected {self.n}")
        return all(dot(row, x) <= di for row, di in zip(self.C, self.d))

    def lp(self, objective) -> LinearProgram:
        """``min objective.y`` over the set, ``y`` free."""
        return LinearProgram(objective, self.C, self.d, bounds=(FREE,) * self.n)

    def is_empty(self) -> bool:
        return feasible_point(self.lp((ZERO,) * self.n)).status is Status.INFEASIBLE


@dataclass(frozen=True)
class Problem:
    objectives: tuple
    feasible_set: PolyhedralSet

    def __post_init__(self):
        objs = tuple(self.objectives)
        if not objs:
            raise DimensionMismatch("at least one objective is required")
        for i, obj in enumerate(objs):
            if obj.n != self.feasible_set.n:
                raise DimensionMismatch(
                    f"objective {i} has dimension {obj.n}, feasible set has {self.feasible_set.n}")
        object.__setattr__(self, "objectives", objs)

    @property
    def m(self) -> int:
        return len(self.objectives)

    @property
    def n(self) -> int:
        return self.feasible_set.n

    @property
    def is_linear(self) -> bool:
        return all(o.is_linear for o in self.objectives)

    def f(self, x) -> tuple:
        return tuple(evaluate(o, x) for o in self.objectives)


@dataclass(frozen=True)
class Query:
    x_bar: tuple
    epsilon: tuple

    def __post_init__(self):
        object.__setattr__(self, "x_bar", as_vector(self.x_bar))
        object.__setattr__(self, "epsilon", as_vector(self.epsilon))


def _checked_denominator(obj, x) -> Fraction:
    if len(x) != obj.n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, expected {obj.n}")
    den = obj.denominator(x)
    if den == 0:
        raise ZeroDenominator(f"denominator vanishes at {tuple(map(fmt, x))}")
    return den


def evaluate(obj: LinearFractionalObjective, x) -> Fraction:
    den = _checked_denominator(obj, x)
    return obj.numerator(x) / den


def gradient(obj: LinearFractionalObjective, x) -> tuple:
    """Quotient rule: ``[a (b.x+beta) - b (a.x+alpha)] / (b.x+beta)^2``."""
    den = _checked_denominator(obj, x)
    num = obj.numerator(x)
    sq = den * den
    return tuple((ai * den - bi * num) / sq for ai, bi in zip(obj.a, obj.b))


def fractional_identity_residual(obj: LinearFractionalObjective, x, y) -> Fraction:
    """``phi(y) - phi(x) - (b.x+beta)/(b.y+beta) * <grad phi(x), y - x>``.

    Identically zero wherever both denominators are nonzero.
    """
    den_x = _checked_denominator(obj, x)
    den_y = _checked_denominator(obj, y)
    step = tuple(yi - xi for xi, yi in zip(x, y))
    lhs = evaluate(obj, y) - evaluate(obj, x)
    return lhs - den_x / den_y * dot(gradient(obj, x), step)


class ValidationStatus(enum.Enum):
    VALID = "Valid"
    EMPTY_FEASIBLE_SET = "EmptyFeasibleSet"
    STANDING_CONDITION_VIOLATED = "StandingConditionViolated"


@dataclass(frozen=True)
class ValidationReport:
    status: ValidationStatus
    # minimum of each denominator over K; None when unbounded below
    minima: tuple = ()
    violated: tuple = ()

    @property
    def ok(self) -> bool:
        return self.status is ValidationStatus.VALID


def validate_problem(problem: Problem) -> ValidationReport:
    """Decide the positivity of every denominator on K by LP."""
    K = problem.feasible_set
    if K.is_empty():
        return ValidationReport(ValidationStatus.EMPTY_FEASIBLE_SET)
    minima, violated = [], []
    for i, obj in enumerate(problem.objectives):
        out = solve(K.lp(obj.b))
        if out.status is Status.UNBOUNDED:
            minima.append(None)
            violated.append(i)
            continue
        low = out.value + obj.beta
        minima.append(low)
        if low <= 0:
            violated.append(i)
    status = (ValidationStatus.STANDING_CONDITION_VIOLATED if violated
              else ValidationStatus.VALID)
    return ValidationReport(status, tuple(minima), tuple(violated))


def check_query(problem: Problem, query: Query) -> tuple:
    """Raise on a malformed query; return the denominators at ``x_bar``."""
    x, eps = query.x_bar, query.epsilon
    if len(x) != problem.n:
        raise DimensionMismatch(f"point has {len(x)} coordinates, expected {problem.n}")
    if len(eps) != problem.m:
        raise DimensionMismatch(f"epsilon has {len(eps)} entries, expected {problem.m}")
    if any(e < 0 for e in eps):
        raise NegativeEpsilon(f"epsilon must be componentwise nonnegative, got {tuple(map(fmt, eps))}")
    K = problem.feasible_set
    if not K.contains(x):
        if K.is_empty():
            raise EmptyFeasibleSet("the feasible set is empty")
        raise InfeasibleCandidate(f"point {tuple(map(fmt, x))} is not in the feasible set")
    dens = tuple(o.denominator(x) for o in problem.objectives)
    bad = [i for i, den in enumerate(dens) if den <= 0]
    if bad:
        raise DomainViolation(f"denominator of objective(s) {bad} is not positive at the candidate")
    return dens


def minimize_over(K: PolyhedralSet, c, constant=ZERO) -> Optional[Fraction]:
    """``min c.y + constant`` over K; None if unbounded below.

    Raises EmptyFeasibleSet when K is empty.
    """
    out = solve(K.lp(c))
    if out.status is Status.INFEASIBLE:
        raise EmptyFeasibleSet("the feasible set is empty")
    if out.status is Status.UNBOUNDED:
        return None
    return out.value + constant
