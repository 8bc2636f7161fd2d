"""Exact two-phase primal simplex over rationals.

Every decision procedure in the package reduces to one or more calls of
:func:`solve`.  Arithmetic is done with :class:`fractions.Fraction`, so
statuses and optimal values are exact and strict comparisons against zero
are meaningful.  Pivoting follows Bland's rule (smallest eligible entering
index, ratio ties broken by the smallest basic index), which guarantees
termination on degenerate problems.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import MalformedLP

LE, EQ, GE = "<=", "=", ">="
FREE, NONNEG = "free", "nonneg"

_ZERO = Fraction(0)
_ONE = Fraction(1)


class Status(enum.Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


def _frac(v, what):
    if isinstance(v, (bool, float)):
        raise MalformedLP(f"{what}: expected an exact number, got {type(v).__name__}")
    try:
        return Fraction(v)
    except (TypeError, ValueError) as exc:
        raise MalformedLP(f"{what}: {exc}") from None


@dataclass(frozen=True)
class LinearProgram:
    """minimize ``objective . z`` subject to ``matrix[i] . z (kind_i) rhs[i]``.

    ``row_kinds`` defaults to all ``"<="`` and ``bounds`` to all ``"nonneg"``.
    """

    objective: tuple
    matrix: tuple = ()
    rhs: tuple = ()
    row_kinds: Optional[tuple] = None
    bounds: Optional[tuple] = None

    def __post_init__(self):
        obj = tuple(_frac(c, "objective") for c in self.objective)
        nvar = len(obj)
        rows = []
        for i, row in enumerate(self.matrix):
            row = tuple(_frac(c, f"matrix row {i}") for c in row)
            if len(row) != nvar:
                raise MalformedLP(f"matrix row {i} has {len(row)} entries, expected {nvar}")
            rows.append(row)
        rhs = tuple(_frac(c, "rhs") for c in self.rhs)
        if len(rhs) != len(rows):
            raise MalformedLP(f"{len(rows)} rows but {len(rhs)} right-hand sides")
        kinds = tuple(self.row_kinds) if self.row_kinds is not None else (LE,) * len(rows)
        if len(kinds) != len(rows) or any(k not in (LE, EQ, GE) for k in kinds):
            raise MalformedLP(f"bad row_kinds {kinds!r}")
        bounds = tuple(self.bounds) if self.bounds is not None else (NONNEG,) * nvar
        if len(bounds) != nvar or any(b not in (FREE, NONNEG) for b in bounds):
            raise MalformedLP(f"bad bounds {bounds!r}")
        object.__setattr__(self, "objective", obj)
        object.__setattr__(self, "matrix", tuple(rows))
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "row_kinds", kinds)
        object.__setattr__(self, "bounds", bounds)

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.matrix)

    def is_feasible_point(self, z: Sequence) -> bool:
        """Exact re-substitution check of a candidate point."""
        if len(z) != self.num_vars:
            return False
        for zj, bound in zip(z, self.bounds):
            if bound == NONNEG and zj < 0:
                return False
        for row, kind, r in zip(self.matrix, self.row_kinds, self.rhs):
            lhs = sum((a * x for a, x in zip(row, z) if a), _ZERO)
            if kind == LE and lhs > r or kind == GE and lhs < r or kind == EQ and lhs != r:
                return False
        return True

    def value_at(self, z: Sequence) -> Fraction:
        return sum((c * x for c, x in zip(self.objective, z) if c), _ZERO)


@dataclass(frozen=True)
class LPOutcome:
    status: Status
    x: Optional[tuple] = None
    value: Optional[Fraction] = None

    @property
    def optimal(self) -> bool:
        return self.status is Status.OPTIMAL


class _Tableau:
    """Dense tableau in equality form with a nonnegative right-hand side."""

    def __init__(self, rows, rhs, basis, ncols):
        self.rows = [list(r) + [b] for r, b in zip(rows, rhs)]
        self.basis = list(basis)
        self.ncols = ncols

    def reduced_costs(self, cost):
        z = list(cost) + [_ZERO]
        for row, bi in zip(self.rows, self.basis):
            cb = cost[bi]
            if cb:
                for j, v in enumerate(row):
                    if v:
                        z[j] -= cb * v
        return z

    def pivot(self, r, c, zrow):
        prow = self.rows[r]
        piv = prow[c]
        if piv != _ONE:
            for j, v in enumerate(prow):
                if v:
                    prow[j] = v / piv
        nz = [(j, v) for j, v in enumerate(prow) if v]
        for i, row in enumerate(self.rows):
            if i != r:
                _eliminate(row, c, nz)
        _eliminate(zrow, c, nz)
        self.basis[r] = c

    def run(self, zrow, allowed):
        """Bland-rule iterations; returns False iff the LP is unbounded."""
        while True:
            enter = next((j for j in allowed if zrow[j] < 0), None)
            if enter is None:
                return True
            leave = None
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = row[-1] / a
                    if (best is None or ratio < best
                            or ratio == best and self.basis[i] < self.basis[leave]):
                        best, leave = ratio, i
            if leave is None:
                return False
            self.pivot(leave, enter, zrow)


def _eliminate(row, c, nz):
    f = row[c]
    if f:
        for j, v in nz:
            row[j] -= f * v


def _standard_form(lp: LinearProgram):
    # column layout: structural (split free vars) | slack/surplus | artificial
    colmap = []
    for j, bound in enumerate(lp.bounds):
        colmap.append((j, 1))
        if bound == FREE:
            colmap.append((j, -1))
    nstruct = len(colmap)
    rows, rhs, kinds = [], [], []
    for row, kind, r in zip(lp.matrix, lp.row_kinds, lp.rhs):
        srow = [row[j] * s for j, s in colmap]
        if r < 0:
            srow = [-v for v in srow]
            r = -r
            kind = {LE: GE, GE: LE, EQ: EQ}[kind]
        rows.append(srow)
        rhs.append(r)
        kinds.append(kind)
    nslack = sum(1 for k in kinds if k != EQ)
    nart = sum(1 for k in kinds if k != LE)
    ncols = nstruct + nslack + nart
    full, basis = [], []
    s_at, a_at = nstruct, nstruct + nslack
    for srow, kind in zip(rows, kinds):
        ext = srow + [_ZERO] * (nslack + nart)
        if kind == LE:
            ext[s_at] = _ONE
            basis.append(s_at)
            s_at += 1
        else:
            if kind == GE:
                ext[s_at] = -_ONE
                s_at += 1
            ext[a_at] = _ONE
            basis.append(a_at)
            a_at += 1
        full.append(ext)
    return _Tableau(full, rhs, basis, ncols), colmap, nstruct + nslack


def _phase_one(lp: LinearProgram):
    """Returns (tableau, colmap, first_artificial) or None if infeasible."""
    tab, colmap, art0 = _standard_form(lp)
    if art0 < tab.ncols:
        cost = [_ZERO] * art0 + [_ONE] * (tab.ncols - art0)
        zrow = tab.reduced_costs(cost)
        tab.run(zrow, range(tab.ncols))
        if zrow[-1] != 0:
            return None
        # drive zero-level artificials out of the basis; drop redundant rows
        i = 0
        while i < len(tab.rows):
            if tab.basis[i] >= art0:
                row = tab.rows[i]
                j = next((j for j in range(art0) if row[j]), None)
                if j is None:
                    del tab.rows[i]
                    del tab.basis[i]
                    continue
                tab.pivot(i, j, [_ZERO] * (tab.ncols + 1))
            i += 1
    return tab, colmap, art0


def _extract(tab, colmap, nvar):
    values = [_ZERO] * tab.ncols
    for row, bi in zip(tab.rows, tab.basis):
        values[bi] = row[-1]
    x = [_ZERO] * nvar
    for col, (j, s) in enumerate(colmap):
        if values[col]:
            x[j] += s * values[col]
    return tuple(x)


def solve(lp: LinearProgram) -> LPOutcome:
    """Minimize ``lp`` exactly.

    >>> solve(LinearProgram([-1], [[1]], [3])).value
    Fraction(-3, 1)
    """
    start = _phase_one(lp)
    if start is None:
        return LPOutcome(Status.INFEASIBLE)
    tab, colmap, art0 = start
    cost = [lp.objective[j] * s for j, s in colmap] + [_ZERO] * (tab.ncols - len(colmap))
    zrow = tab.reduced_costs(cost)
    if not tab.run(zrow, range(art0)):
        return LPOutcome(Status.UNBOUNDED)
    x = _extract(tab, colmap, lp.num_vars)
    return LPOutcome(Status.OPTIMAL, x, lp.value_at(x))


def feasible_point(lp: LinearProgram) -> LPOutcome:
    """Phase one only: any exact feasible point (objective ignored, value 0)."""
    start = _phase_one(lp)
    if start is None:
        return LPOutcome(Status.INFEASIBLE)
    tab, colmap, _ = start
    return LPOutcome(Status.OPTIMAL, _extract(tab, colmap, lp.num_vars), _ZERO)
