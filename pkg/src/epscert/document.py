"""Problem documents (JSON with exact number literals) and report rendering.

A problem document looks like::

    {"n": 2,
     "objectives": [{"a": [1, 0], "alpha": 0, "b": [0, 0], "beta": 1},
                    {"a": [0, 1], "alpha": 0}],
     "constraints": {"C": [[-1, 0]], "d": [0]}}

Numbers may be JSON integers, JSON decimals (read as exact decimals, so
``0.1`` is 1/10), or strings such as ``"2/3"`` or ``"-0.25"``.  ``b`` and
``beta`` default to a zero vector and 1, i.e. a linear objective.
"""

from __future__ import annotations

import json
from decimal import Decimal
from fractions import Fraction

from .core import LinearFractionalObjective, PolyhedralSet, Problem, as_vector, fmt
from .errors import DimensionMismatch, DocumentError


def parse_number(value, where="") -> Fraction:
    if isinstance(value, bool) or value is None:
        raise DocumentError(f"expected a number, got {json.dumps(value)}", where)
    if isinstance(value, (int, Decimal)):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise DocumentError(f"not a rational literal: {value!r}", where) from None
    raise DocumentError(f"expected a number, got {type(value).__name__}", where)


def parse_number_list(text: str, where="") -> tuple:
    """``"1/2, 0, 0.25"`` -> fractions.  An empty string is an empty list."""
    parts = [s for s in (p.strip() for p in text.split(",")) if s]
    return tuple(parse_number(s, f"{where}[{i}]") for i, s in enumerate(parts))


def _vector(value, where):
    if not isinstance(value, list):
        raise DocumentError("expected a list of numbers", where)
    return tuple(parse_number(v, f"{where}[{i}]") for i, v in enumerate(value))


def _field(obj, key, where):
    if key not in obj:
        raise DocumentError(f"missing field {key!r}", where or "document")
    return obj[key]


def parse_problem(text: str) -> Problem:
    try:
        doc = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, (exc.lineno, exc.colno)) from None
    if not isinstance(doc, dict):
        raise DocumentError("top level must be an object", "document")
    n = _field(doc, "n", "")
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise DocumentError("n must be a positive integer", "n")
    raw_objs = _field(doc, "objectives", "")
    if not isinstance(raw_objs, list) or not raw_objs:
        raise DocumentError("objectives must be a nonempty list", "objectives")
    objectives = []
    for i, raw in enumerate(raw_objs):
        where = f"objectives[{i}]"
        if not isinstance(raw, dict):
            raise DocumentError("objective must be an object", where)
        a = _vector(_field(raw, "a", where), f"{where}.a")
        alpha = parse_number(raw.get("alpha", 0), f"{where}.alpha")
        b = _vector(raw.get("b", [0] * n), f"{where}.b")
        beta = parse_number(raw.get("beta", 1), f"{where}.beta")
        for key, vec in (("a", a), ("b", b)):
            if len(vec) != n:
                raise DocumentError(f"has {len(vec)} entries, expected n={n}", f"{where}.{key}")
        objectives.append(LinearFractionalObjective(a, alpha, b, beta))
    cons = doc.get("constraints", {"C": [], "d": []})
    if not isinstance(cons, dict):
        raise DocumentError("constraints must be an object", "constraints")
    raw_C = _field(cons, "C", "constraints")
    if not isinstance(raw_C, list):
        raise DocumentError("C must be a list of rows", "constraints.C")
    C = [_vector(row, f"constraints.C[{r}]") for r, row in enumerate(raw_C)]
    d = _vector(_field(cons, "d", "constraints"), "constraints.d")
    for r, row in enumerate(C):
        if len(row) != n:
            raise DocumentError(f"has {len(row)} entries, expected n={n}", f"constraints.C[{r}]")
    if len(d) != len(C):
        raise DocumentError(f"has {len(d)} entries but C has {len(C)} rows", "constraints.d")
    try:
        return Problem(tuple(objectives), PolyhedralSet(C, d, n))
    except DimensionMismatch as exc:
        raise DocumentError(str(exc), "document") from None


def load_problem(path) -> Problem:
    with open(path, encoding="utf-8") as fh:
        return parse_problem(fh.read())


def problem_to_document(problem: Problem) -> dict:
    K = problem.feasible_set
    return {
        "n": problem.n,
        "objectives": [
            {"a": vec(o.a), "alpha": fmt(o.alpha), "b": vec(o.b), "beta": fmt(o.beta)}
            for o in problem.objectives
        ],
        "constraints": {"C": [vec(row) for row in K.C], "d": vec(K.d)},
    }


def vec(values) -> list:
    return [fmt(v) for v in values]


def unvec(values) -> tuple:
    return as_vector(values)


def certificate_to_dict(cert):
    if cert is None:
        return None
    return {"lambda": vec(cert.lam), "mu": vec(cert.mu), "kind": cert.kind.value}


def witness_to_dict(witness, problem):
    if witness is None:
        return None
    return {
        "y": vec(witness.y),
        "f_y": vec(problem.f(witness.y)),
        "kind": witness.kind.value,
        "strict_index": witness.strict_index,
    }


def validation_to_dict(report):
    return {
        "status": report.status.value,
        "denominator_minima": [None if v is None else fmt(v) for v in report.minima],
        "violated": list(report.violated),
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"
