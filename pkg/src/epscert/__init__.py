"""Exact certificates for approximate efficiency in linear fractional vector optimization."""

from .certify import (
    Certificate,
    CertificateKind,
    CertificateSystem,
    Classification,
    Verdict,
    build_certificate_system,
    classify,
    find_interior_certificate,
    find_weak_certificate,
    verify_certificate,
)
from .core import (
    LinearFractionalObjective,
    PolyhedralSet,
    Problem,
    Query,
    evaluate,
    fractional_identity_residual,
    gradient,
    validate_problem,
)
from .oracle import (
    DominanceWitness,
    FinitePointSet,
    GridSpec,
    cone_lemma_check,
    efficient_dominates_check,
    sweep,
    weak_dominates_check,
)
from .simplex import LinearProgram, LPOutcome, Status, feasible_point, solve

__version__ = "0.1.0"
