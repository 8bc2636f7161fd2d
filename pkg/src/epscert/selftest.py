"""Randomized consistency suites behind ``epscert selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .certify import find_interior_certificate, find_weak_certificate, verify_certificate
from .core import fractional_identity_residual, gradient
from .instances import (
    dual_lp,
    instance_stream,
    random_lp,
    random_objective_and_points,
    random_point_set,
)
from .oracle import cone_lemma_check, efficient_dominates_check, weak_dominates_check
from .simplex import solve


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, detail=None):
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            self.failures.append(detail)

    @property
    def ok(self) -> bool:
        return self.failed == 0


def certificate_suites(seed: int, count: int):
    """Certificate/oracle equivalence and the two efficiency implications, on one stream."""
    equiv = SuiteResult("weak certificate <=> no weak dominator")
    implic = SuiteResult("interior => efficient => weak certificate")
    recheck = SuiteResult("certificates and witnesses re-verify")
    for k, (problem, query) in enumerate(instance_stream(seed, count)):
        weak = find_weak_certificate(problem, query)
        weak_dom = weak_dominates_check(problem, query)
        equiv.record((weak is not None) == (weak_dom is None), k)
        interior = find_interior_certificate(problem, query)
        eff_dom = efficient_dominates_check(problem, query)
        ok = True
        if interior is not None and eff_dom is not None:
            ok = False
        if eff_dom is None and weak is None:
            ok = False
        implic.record(ok, k)
        good = True
        for cert in (weak, interior):
            if cert is not None:
                chk = verify_certificate(problem, query, cert)
                good = good and chk.valid and chk.dual_ok
        for wit in (weak_dom, eff_dom):
            if wit is not None:
                good = good and wit.holds(problem, query)
        recheck.record(good, k)
    return [equiv, implic, recheck]


def identity_suite(seed: int, count: int, fd_step=1e-6, rel_tol=1e-6):
    res = SuiteResult("fractional identity and gradient")
    rng = random.Random(seed)
    for k in range(count):
        obj, x, y = random_objective_and_points(rng)
        ok = fractional_identity_residual(obj, x, y) == 0
        ok = ok and _fd_gradient_agrees(obj, x, fd_step, rel_tol)
        res.record(ok, k)
    return res


def _fd_gradient_agrees(obj, x, h, rel_tol):
    def phi(z):
        num = sum(float(a) * v for a, v in zip(obj.a, z)) + float(obj.alpha)
        den = sum(float(b) * v for b, v in zip(obj.b, z)) + float(obj.beta)
        return num / den

    xf = [float(v) for v in x]
    exact = [float(g) for g in gradient(obj, x)]
    scale = max(1.0, max(abs(g) for g in exact))
    for j, g in enumerate(exact):
        up, down = list(xf), list(xf)
        up[j] += h
        down[j] -= h
        approx = (phi(up) - phi(down)) / (2 * h)
        if abs(approx - g) > rel_tol * scale:
            return False
    return True


def cone_suite(seed: int, count: int):
    """Ray-cone equivalence, plus the one-way implication for conic hulls."""
    res = SuiteResult("finite cone lemma")
    rng = random.Random(seed)
    for k in range(count):
        omega = random_point_set(rng)
        prop_i, prop_ii = cone_lemma_check(omega, generated="rays")
        conic_i, conic_ii = cone_lemma_check(omega)
        res.record(prop_i == prop_ii and (conic_i or not conic_ii), k)
    return res


def duality_suite(seed: int, count: int):
    """Strong duality on ``count`` random LPs that have an optimum."""
    res = SuiteResult("LP strong duality")
    rng = random.Random(seed)
    while res.passed + res.failed < count:
        lp = random_lp(rng)
        primal = solve(lp)
        if not primal.optimal:
            continue
        dual = solve(dual_lp(lp))
        ok = (dual.optimal and primal.value == -dual.value
              and lp.is_feasible_point(primal.x))
        res.record(ok, lp)
    return res


def run_all(seed: int = 0, count: int = 200):
    suites = certificate_suites(seed, count)
    suites.append(identity_suite(seed, count))
    suites.append(cone_suite(seed, count))
    suites.append(duality_suite(seed, count))
    return suites
