from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from epscert import (
    LinearFractionalObjective,
    PolyhedralSet,
    Problem,
    Query,
    evaluate,
    fractional_identity_residual,
    gradient,
    validate_problem,
)
from epscert.core import ValidationStatus, as_fraction, check_query, fmt
from epscert.errors import (
    DimensionMismatch,
    DomainViolation,
    EmptyFeasibleSet,
    InfeasibleCandidate,
    NegativeEpsilon,
    ZeroDenominator,
)

from strategies import objective_with_points, positive


def central_difference(obj, x, h=1e-6):
    """Float finite-difference gradient, independent of the quotient-rule formula."""
    def phi(z):
        num = sum(float(a) * v for a, v in zip(obj.a, z)) + float(obj.alpha)
        den = sum(float(b) * v for b, v in zip(obj.b, z)) + float(obj.beta)
        return num / den

    xf = [float(v) for v in x]
    out = []
    for j in range(len(xf)):
        up, dn = list(xf), list(xf)
        up[j] += h
        dn[j] -= h
        out.append((phi(up) - phi(dn)) / (2 * h))
    return out


def test_evaluate_linear_coordinate():
    obj = LinearFractionalObjective([1, 0], 0, [0, 0], 1)
    assert evaluate(obj, (2, 3)) == 2


@pytest.mark.parametrize("x, expected", [((0, 0), 0), ((2, 2), 1)])
def test_evaluate_ratio(ratio_objective, x, expected):
    assert evaluate(ratio_objective, x) == expected


def test_evaluate_zero_denominator(ratio_objective):
    with pytest.raises(ZeroDenominator):
        evaluate(ratio_objective, (-2, 5))
    with pytest.raises(ZeroDenominator):
        gradient(ratio_objective, (-2, 5))


def test_gradient_ratio_at_origin(ratio_objective):
    g = gradient(ratio_objective, (0, 0))
    assert g == (F(1, 2), F(1, 2))
    fd = central_difference(ratio_objective, (0, 0))
    assert all(abs(a - float(b)) < 1e-8 for a, b in zip(fd, g))


def test_gradient_linear():
    obj = LinearFractionalObjective.linear([1, 0])
    assert gradient(obj, (5, 7)) == (1, 0)
    obj = LinearFractionalObjective.linear([F(3, 2), -4, 7])
    assert gradient(obj, (1, F(1, 3), -9)) == obj.a


def test_identity_hand_case(ratio_objective):
    assert fractional_identity_residual(ratio_objective, (0, 0), (2, 2)) == 0
    assert fractional_identity_residual(ratio_objective, (1, 1), (1, 1)) == 0


@given(objective_with_points())
def test_identity_residual_vanishes(case):
    obj, x, y = case
    assert fractional_identity_residual(obj, x, y) == 0


@given(objective_with_points(count=1, min_den=F(1, 2)))
def test_gradient_matches_finite_differences(case):
    obj, x = case
    exact = [float(g) for g in gradient(obj, x)]
    approx = central_difference(obj, x)
    scale = max(1.0, max(abs(g) for g in exact))
    for a, g in zip(approx, exact):
        assert abs(a - g) <= 1e-6 * scale


@given(objective_with_points(count=1), st.integers(1, 50))
def test_evaluate_invariant_under_common_scaling(case, k):
    obj, x = case
    scaled = LinearFractionalObjective(
        [k * v for v in obj.a], k * obj.alpha, [k * v for v in obj.b], k * obj.beta)
    assert evaluate(scaled, x) == evaluate(obj, x)
    assert gradient(scaled, x) == gradient(obj, x)


def test_fractions_stay_normalized():
    q = as_fraction("-6/4")
    assert (q.numerator, q.denominator) == (-3, 2)
    assert fmt(as_fraction("0.25")) == "1/4"
    with pytest.raises(TypeError):
        as_fraction(0.1)


def test_validate_constant_denominators(halfplane):
    rep = validate_problem(halfplane)
    assert rep.status is ValidationStatus.VALID
    assert rep.minima == (1, 1)


def test_validate_unbounded_denominator():
    K = PolyhedralSet([[-1, 0]], [0], 2)
    P = Problem((LinearFractionalObjective([1, 0], 0, [0, 1], 0),), K)
    rep = validate_problem(P)
    assert rep.status is ValidationStatus.STANDING_CONDITION_VIOLATED
    assert rep.violated == (0,)
    assert rep.minima == (None,)


def test_validate_attained_nonpositive_minimum():
    # x in [0, 1], denominator x: minimum 0 is attained
    K = PolyhedralSet([[1], [-1]], [1, 0], 1)
    P = Problem((LinearFractionalObjective([1], 0, [1], 0),), K)
    rep = validate_problem(P)
    assert rep.status is ValidationStatus.STANDING_CONDITION_VIOLATED
    assert rep.minima == (0,)


def test_validate_empty():
    K = PolyhedralSet([[1], [-1]], [-1, 0], 1)
    P = Problem((LinearFractionalObjective.linear([1]),), K)
    assert validate_problem(P).status is ValidationStatus.EMPTY_FEASIBLE_SET


def test_validate_positive_fractional():
    # x in [0, 2], denominator x + 1/2 -> minimum 1/2
    K = PolyhedralSet([[1], [-1]], [2, 0], 1)
    P = Problem((LinearFractionalObjective([1], 0, [1], F(1, 2)),), K)
    rep = validate_problem(P)
    assert rep.ok and rep.minima == (F(1, 2),)


@given(objective_with_points(count=3, min_den=F(0)), positive)
def test_valid_problems_never_hit_zero_denominator(case, pad):
    # K = box around the sampled points, shrunk so the denominator stays positive
    obj, *pts = case
    n = obj.n
    lo = [min(p[j] for p in pts) for j in range(n)]
    hi = [max(p[j] for p in pts) for j in range(n)]
    C, d = [], []
    for j in range(n):
        e = [0] * n
        e[j] = 1
        C.append(e)
        d.append(hi[j])
        C.append([-v for v in e])
        d.append(-lo[j])
    P = Problem((obj,), PolyhedralSet(C, d, n))
    rep = validate_problem(P)
    if rep.ok:
        for p in pts:
            evaluate(obj, p)


def test_dimension_checks():
    with pytest.raises(DimensionMismatch):
        LinearFractionalObjective([1, 2], 0, [1], 1)
    with pytest.raises(DimensionMismatch):
        PolyhedralSet([[1, 2]], [0, 1], 2)
    with pytest.raises(DimensionMismatch):
        Problem((LinearFractionalObjective.linear([1]),), PolyhedralSet([[1, 0]], [0], 2))


def test_check_query_errors(halfplane):
    with pytest.raises(NegativeEpsilon):
        check_query(halfplane, Query((0, 0), (-1, 0)))
    with pytest.raises(InfeasibleCandidate):
        check_query(halfplane, Query((-1, 0), (0, 0)))
    with pytest.raises(DimensionMismatch):
        check_query(halfplane, Query((0, 0, 0), (0, 0)))
    empty = Problem(halfplane.objectives, PolyhedralSet([[1, 0], [-1, 0]], [-1, 0], 2))
    with pytest.raises(EmptyFeasibleSet):
        check_query(empty, Query((0, 0), (0, 0)))
    neg = Problem((LinearFractionalObjective([1], 0, [1], 0),), PolyhedralSet([[-1]], [1], 1))
    with pytest.raises(DomainViolation):
        check_query(neg, Query((-1,), (0,)))
