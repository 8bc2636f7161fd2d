import random
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from epscert import (
    FinitePointSet,
    GridSpec,
    LinearFractionalObjective,
    PolyhedralSet,
    Problem,
    Query,
    Verdict,
    classify,
    cone_lemma_check,
    efficient_dominates_check,
    find_weak_certificate,
    sweep,
    weak_dominates_check,
)
from epscert.instances import instance_stream, random_point_set
from epscert.oracle import WitnessKind

V = Verdict


def test_weak_witness_halfplane(halfplane):
    q = Query((2, 0), (1, 0))
    w = weak_dominates_check(halfplane, q)
    assert w.kind is WitnessKind.STRICT_ALL
    assert w.holds(halfplane, q)
    assert all(fy < fx - e for fy, fx, e in zip(halfplane.f(w.y), halfplane.f(q.x_bar), q.epsilon))


def test_no_weak_witness_at_origin(halfplane):
    assert weak_dominates_check(halfplane, Query((0, 0), (1, 0))) is None


def test_huge_eps_has_no_dominator(corner):
    q = Query((3, 3), (10**6, 10**6))
    assert weak_dominates_check(corner, q) is None
    assert efficient_dominates_check(corner, q) is None


def test_efficient_witness_halfplane(halfplane):
    q = Query((1, 0), (1, 0))
    w = efficient_dominates_check(halfplane, q)
    assert w.kind is WitnessKind.WEAK_WITH_STRICT_INDEX
    assert w.strict_index == 1
    assert w.holds(halfplane, q)
    assert efficient_dominates_check(halfplane, Query((0, 0), (1, 0))) is None


@pytest.mark.parametrize("eps", [(0, 0), (1, 0), (F(1, 4), 3)])
def test_singleton_set_has_no_dominator(eps):
    K = PolyhedralSet([[1, 0], [0, 1], [-1, 0], [0, -1]], [1, 2, -1, -2], 2)
    P = Problem((LinearFractionalObjective([1, 1], 0, [1, 0], 1),
                 LinearFractionalObjective.linear([0, -1])), K)
    q = Query((1, 2), eps)
    assert weak_dominates_check(P, q) is None
    assert efficient_dominates_check(P, q) is None


def test_witness_kinds_reject_bad_points(halfplane):
    from epscert.oracle import DominanceWitness

    q = Query((1, 0), (1, 0))
    assert not DominanceWitness((0, 0), WitnessKind.WEAK_WITH_STRICT_INDEX, 1).holds(halfplane, q)
    assert not DominanceWitness((-1, -5), WitnessKind.STRICT_ALL).holds(halfplane, q)


@pytest.mark.parametrize("points, expected", [
    ([(1, -1)], (True, True)),
    ([(-1, -2)], (False, False)),
    ([(-1, 3), (3, -1)], (True, True)),
])
def test_cone_lemma_examples(points, expected):
    assert cone_lemma_check(FinitePointSet(points)) == expected
    assert cone_lemma_check(points, generated="rays") == expected


def test_conic_hull_can_reach_negative_orthant():
    # neither point is negative, 3/2 * first + second = (-1/2, -1/2)
    assert cone_lemma_check([(-1, 1), (1, -2)]) == (True, False)
    assert cone_lemma_check([(-1, 1), (1, -2)], generated="rays") == (True, True)


@given(st.integers(0, 10**6))
def test_cone_lemma_rays_equivalence(seed):
    omega = random_point_set(random.Random(seed))
    prop_i, prop_ii = cone_lemma_check(omega, generated="rays")
    assert prop_i == prop_ii
    conic_i, conic_ii = cone_lemma_check(omega)
    assert conic_i == prop_i
    assert conic_i or not conic_ii


def test_finite_point_set_validation():
    with pytest.raises(ValueError):
        FinitePointSet([])
    with pytest.raises(ValueError):
        FinitePointSet([(1, 2), (1,)])


def test_grid_from_box():
    g = GridSpec.from_box([0, 0], [F(3, 2), 0], [4, 1])
    assert g.points() == [(0, 0), (F(1, 2), 0), (1, 0), (F(3, 2), 0)]
    assert GridSpec.from_box([1], [0], [3]).points() == []
    assert GridSpec.from_box([0, 0], [1, 1], [2, 0]).points() == []
    # row-major: last axis fastest
    assert GridSpec.from_box([0, 0], [1, 1], [2, 2]).points() == [(0, 0), (0, 1), (1, 0), (1, 1)]


def test_sweep_halfplane(halfplane):
    grid = GridSpec.from_box([0, 0], [F(3, 2), 0], [4, 1])
    rows = sweep(halfplane, (1, 0), grid)
    assert [r.classification.verdict for r in rows] == [
        V.EPS_EFFICIENT, V.EPS_EFFICIENT, V.WEAKLY_EPS_EFFICIENT_ONLY, V.NOT_WEAKLY_EPS_EFFICIENT]


def test_sweep_zero_eps_halfplane(halfplane):
    # x1 = 0 is weakly efficient (nothing in K has y1 < 0) but never efficient
    grid = GridSpec.from_box([0, 0], [F(3, 2), 0], [4, 1])
    rows = sweep(halfplane, (0, 0), grid)
    assert [r.classification.verdict for r in rows] == [
        V.WEAKLY_EPS_EFFICIENT_ONLY] + [V.NOT_WEAKLY_EPS_EFFICIENT] * 3


def test_sweep_skips_infeasible_and_keeps_order(halfplane):
    grid = GridSpec.from_box([-1, 0], [1, 0], [3, 1])
    rows = sweep(halfplane, (1, 0), grid, workers=3)
    assert [r.status for r in rows] == ["skipped", "ok", "ok"]
    assert [r.point for r in rows] == grid.points()


def test_sweep_records_errors_per_point():
    # denominator x - 1 is negative on part of the grid; K itself is not checked by sweep
    K = PolyhedralSet([[-1]], [0], 1)
    P = Problem((LinearFractionalObjective([1], 0, [1], -1),), K)
    rows = sweep(P, (0,), GridSpec.from_box([0], [2], [3]))
    assert [r.status for r in rows] == ["DomainViolation", "DomainViolation", "ok"]


def test_singleton_grid_matches_classify(halfplane):
    q = Query((1, 0), (1, 0))
    rows = sweep(halfplane, q.epsilon, GridSpec([[1], [0]]))
    assert rows[0].classification == classify(halfplane, q)


STREAM = list(instance_stream(31337, 150))


@pytest.mark.parametrize("k", range(len(STREAM)))
def test_oracle_agrees_with_certificates(k):
    problem, query = STREAM[k]
    weak_dom = weak_dominates_check(problem, query)
    eff_dom = efficient_dominates_check(problem, query)
    assert (weak_dom is None) == (find_weak_certificate(problem, query) is not None)
    if eff_dom is None:
        assert weak_dom is None
    for w in (weak_dom, eff_dom):
        if w is not None:
            assert w.holds(problem, query)


@pytest.mark.parametrize("k", range(0, len(STREAM), 5))
def test_monotone_in_eps(k):
    problem, query = STREAM[k]
    bigger = Query(query.x_bar, tuple(e + F(1, 3) for e in query.epsilon))
    if weak_dominates_check(problem, query) is None:
        assert weak_dominates_check(problem, bigger) is None
    if efficient_dominates_check(problem, query) is None:
        assert efficient_dominates_check(problem, bigger) is None
