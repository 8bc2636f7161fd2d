"""Multiplier certificates for approximate (weak) efficiency.

For a candidate ``x_bar`` and tolerance vector ``eps`` the linearized system

    (A y + b)_i = (b_i.x_bar + beta_i) <grad f_i(x_bar), y - x_bar>
                  + eps_i (b_i.y + beta_i)

has no ``y`` in K with ``A y + b < 0`` exactly when ``x_bar`` is
eps-weakly efficient, and that in turn holds iff some ``lam >= 0, lam != 0``
keeps ``lam.(A y + b) >= 0`` on all of K.  The "for all y" part is turned
into finitely many linear conditions by LP duality: with K = {C y <= d}
nonempty,

    inf_{y in K} lam.(A y + b) >= 0   <=>   exists mu >= 0 with
    A^T lam + C^T mu = 0  and  b.lam - d.mu >= 0.

So a certificate ``(lam, mu)`` is the solution of a single exact LP.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .core import (
    ONE,
    ZERO,
    PolyhedralSet,
    Problem,
    Query,
    as_vector,
    check_query,
    dot,
    gradient,
    minimize_over,
)
from .errors import DimensionMismatch
from .simplex import EQ, FREE, GE, NONNEG, LinearProgram, Status, solve


@dataclass(frozen=True)
class CertificateSystem:
    """Affine map ``y -> A y + b`` whose sign pattern on K decides weak efficiency."""

    A: tuple
    b: tuple

    @property
    def m(self) -> int:
        return len(self.A)

    def apply(self, y) -> tuple:
        return tuple(dot(row, y) + bi for row, bi in zip(self.A, self.b))

    def scaled(self, factors) -> "CertificateSystem":
        """Row ``i`` multiplied by ``factors[i]``."""
        factors = as_vector(factors)
        return CertificateSystem(
            tuple(tuple(s * v for v in row) for s, row in zip(factors, self.A)),
            tuple(s * bi for s, bi in zip(factors, self.b)),
        )


class CertificateKind(enum.Enum):
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"


@dataclass(frozen=True)
class Certificate:
    lam: tuple
    mu: tuple
    kind: CertificateKind

    @classmethod
    def from_multipliers(cls, lam, mu):
        lam, mu = as_vector(lam), as_vector(mu)
        kind = CertificateKind.INTERIOR if all(v > 0 for v in lam) else CertificateKind.BOUNDARY
        return cls(lam, mu, kind)


@dataclass(frozen=True)
class CertificateCheck:
    valid: bool
    # min of lam.(A y + b) over K, None if unbounded below
    inner_min: Optional[object]
    # whether (lam, mu) also satisfies the dual-witness equations
    dual_ok: bool


def build_certificate_system(problem: Problem, query: Query) -> CertificateSystem:
    dens = check_query(problem, query)
    x = query.x_bar
    rows, consts = [], []
    for obj, den, eps in zip(problem.objectives, dens, query.epsilon):
        grad = gradient(obj, x)
        rows.append(tuple(den * g + eps * bj for g, bj in zip(grad, obj.b)))
        consts.append(-den * dot(grad, x) + eps * obj.beta)
    return CertificateSystem(tuple(rows), tuple(consts))


def classical_system(problem: Problem, x_bar) -> CertificateSystem:
    """Multiplier system of the exact (eps = 0) optimality condition.

    Row ``i`` is ``(b_i.x + beta_i) a_i - (a_i.x + alpha_i) b_i``, paired with
    ``y - x``.  It differs from the eps = 0 certificate system only by the
    positive row factors ``1 / (b_i.x + beta_i)``.
    """
    x = as_vector(x_bar)
    check_query(problem, Query(x, (ZERO,) * problem.m))
    rows, consts = [], []
    for obj in problem.objectives:
        den, num = obj.denominator(x), obj.numerator(x)
        row = tuple(den * ai - num * bi for ai, bi in zip(obj.a, obj.b))
        rows.append(row)
        consts.append(-dot(row, x))
    return CertificateSystem(tuple(rows), tuple(consts))


def _certificate_lp(system: CertificateSystem, K: PolyhedralSet, interior: bool) -> LinearProgram:
    # variables: lam (m), mu (p) [, t]
    m, p, n = system.m, K.p, K.n
    if any(len(row) != n for row in system.A):
        raise DimensionMismatch("certificate system and feasible set disagree on n")
    extra = 1 if interior else 0
    nvar = m + p + extra
    rows, rhs, kinds = [], [], []
    for k in range(n):
        rows.append([system.A[i][k] for i in range(m)] + [K.C[r][k] for r in range(p)] + [ZERO] * extra)
        rhs.append(ZERO)
        kinds.append(EQ)
    rows.append([ONE] * m + [ZERO] * (p + extra))
    rhs.append(ONE)
    kinds.append(EQ)
    rows.append(list(system.b) + [-v for v in K.d] + [ZERO] * extra)
    rhs.append(ZERO)
    kinds.append(GE)
    objective = [ZERO] * nvar
    bounds = [NONNEG] * nvar
    if interior:
        # lam_i - t >= 0, maximize t
        for i in range(m):
            row = [ZERO] * nvar
            row[i] = ONE
            row[-1] = -ONE
            rows.append(row)
            rhs.append(ZERO)
            kinds.append(GE)
        objective[-1] = -ONE
        bounds[-1] = FREE
    return LinearProgram(objective, rows, rhs, kinds, bounds)


def weak_certificate_for_system(system: CertificateSystem, K: PolyhedralSet) -> Optional[Certificate]:
    out = solve(_certificate_lp(system, K, interior=False))
    if out.status is not Status.OPTIMAL:
        return None
    m = system.m
    return Certificate.from_multipliers(out.x[:m], out.x[m:m + K.p])


def interior_certificate_for_system(system: CertificateSystem, K: PolyhedralSet) -> Optional[Certificate]:
    out = solve(_certificate_lp(system, K, interior=True))
    if out.status is not Status.OPTIMAL or out.x[-1] <= 0:
        return None
    m = system.m
    return Certificate(out.x[:m], out.x[m:m + K.p], CertificateKind.INTERIOR)


def find_weak_certificate(problem: Problem, query: Query) -> Optional[Certificate]:
    """Certificate with ``lam >= 0, sum(lam) = 1`` if ``x_bar`` is eps-weakly efficient, else None."""
    system = build_certificate_system(problem, query)
    return weak_certificate_for_system(system, problem.feasible_set)


def find_interior_certificate(problem: Problem, query: Query) -> Optional[Certificate]:
    """Maximize the smallest multiplier; a certificate only if it is strictly positive.

    Success proves eps-efficiency.  Failure proves nothing by itself.
    """
    system = build_certificate_system(problem, query)
    return interior_certificate_for_system(system, problem.feasible_set)


def find_classical_multiplier(problem: Problem, x_bar, interior: bool) -> Optional[Certificate]:
    system = classical_system(problem, x_bar)
    search = interior_certificate_for_system if interior else weak_certificate_for_system
    return search(system, problem.feasible_set)


def dual_witness_holds(system: CertificateSystem, K: PolyhedralSet, cert: Certificate) -> bool:
    lam, mu = cert.lam, cert.mu
    if len(lam) != system.m or len(mu) != K.p:
        return False
    if any(v < 0 for v in lam) or not any(lam) or any(v < 0 for v in mu):
        return False
    for k in range(K.n):
        col = dot(lam, [row[k] for row in system.A]) + dot(mu, [row[k] for row in K.C])
        if col != 0:
            return False
    return dot(system.b, lam) - dot(K.d, mu) >= 0


def verify_certificate(problem: Problem, query: Query, cert: Certificate) -> CertificateCheck:
    """Check ``lam.(A y + b) >= 0`` on K by minimizing it directly.

    This route ignores ``mu``; the dual equations are checked separately and
    reported as ``dual_ok``.
    """
    system = build_certificate_system(problem, query)
    K = problem.feasible_set
    lam = as_vector(cert.lam)
    if len(lam) != system.m:
        raise DimensionMismatch(f"lambda has {len(lam)} entries, expected {system.m}")
    dual_ok = dual_witness_holds(system, K, cert)
    if any(v < 0 for v in lam) or not any(lam):
        return CertificateCheck(False, None, dual_ok)
    c = tuple(dot(lam, [row[k] for row in system.A]) for k in range(K.n))
    low = minimize_over(K, c, dot(lam, system.b))
    return CertificateCheck(low is not None and low >= 0, low, dual_ok)


def reconstruct_dual_witness(problem: Problem, query: Query, lam) -> Optional[Certificate]:
    """Find ``mu`` for a given ``lam`` by LP, or None if no witness exists."""
    system = build_certificate_system(problem, query)
    K = problem.feasible_set
    lam = as_vector(lam)
    p = K.p
    rows, rhs = [], []
    for k in range(K.n):
        rows.append([row[k] for row in K.C])
        rhs.append(-dot(lam, [row[k] for row in system.A]))
    kinds = [EQ] * K.n
    rows.append([-v for v in K.d])
    rhs.append(-dot(system.b, lam))
    kinds.append(GE)
    out = solve(LinearProgram([ZERO] * p, rows, rhs, kinds))
    if out.status is not Status.OPTIMAL:
        return None
    return Certificate.from_multipliers(lam, out.x)


class Verdict(enum.Enum):
    NOT_WEAKLY_EPS_EFFICIENT = "NotWeaklyEpsEfficient"
    EPS_EFFICIENT = "EpsEfficient"
    WEAKLY_EPS_EFFICIENT_ONLY = "WeaklyEpsEfficientOnly"
    WEAK_CERTIFIED_ONLY = "WeakCertifiedOnly"


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    weak_certificate: Optional[Certificate] = None
    interior_certificate: Optional[Certificate] = None
    witness: Optional[object] = None
    # "certificate" when multipliers alone settled the verdict, "oracle" when
    # the dominance check was needed
    decided_by: str = "certificate"


def classify(problem: Problem, query: Query, refine: bool = True) -> Classification:
    """Three-way verdict from certificates, optionally refined by the dominance oracle.

    Without refinement a weak certificate with no interior one stays
    ``WeakCertifiedOnly``: the interior condition is sufficient for
    eps-efficiency but not necessary.
    """
    system = build_certificate_system(problem, query)
    K = problem.feasible_set
    weak = weak_certificate_for_system(system, K)
    if weak is None:
        witness = None
        if refine:
            from .oracle import weak_dominates_check

            witness = weak_dominates_check(problem, query)
            if witness is None:
                raise RuntimeError("certificate search and dominance oracle disagree")
        return Classification(Verdict.NOT_WEAKLY_EPS_EFFICIENT, witness=witness)
    interior = interior_certificate_for_system(system, K)
    if interior is not None:
        return Classification(Verdict.EPS_EFFICIENT, weak, interior)
    if not refine:
        return Classification(Verdict.WEAK_CERTIFIED_ONLY, weak)
    from .oracle import efficient_dominates_check

    witness = efficient_dominates_check(problem, query)
    if witness is None:
        return Classification(Verdict.EPS_EFFICIENT, weak, None, None, "oracle")
    return Classification(Verdict.WEAKLY_EPS_EFFICIENT_ONLY, weak, None, witness, "oracle")
