"""Command-line front end.

Exit codes: 0 classified (or selftest passed), 1 a recheck or selftest
failed, 2 bad input, 3 invalid instance (empty K or a denominator that is
not positive on K).
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

from .certify import (
    classify,
    dual_witness_holds,
    find_interior_certificate,
    find_weak_certificate,
    build_certificate_system,
    verify_certificate,
    Certificate,
    CertificateKind,
)
from .core import Query, validate_problem
from .document import (
    certificate_to_dict,
    dumps,
    load_problem,
    parse_number,
    parse_number_list,
    unvec,
    validation_to_dict,
    vec,
    witness_to_dict,
)
from .errors import (
    DimensionMismatch,
    DocumentError,
    DomainViolation,
    EmptyFeasibleSet,
    InfeasibleCandidate,
    NegativeEpsilon,
)
from .oracle import DominanceWitness, GridSpec, WitnessKind, sweep

EXIT_OK, EXIT_RECHECK, EXIT_INPUT, EXIT_INSTANCE = 0, 1, 2, 3

_INPUT_ERRORS = (DocumentError, DimensionMismatch, InfeasibleCandidate, NegativeEpsilon, OSError)
_INSTANCE_ERRORS = (EmptyFeasibleSet, DomainViolation)


class _Fail(Exception):
    def __init__(self, code, report):
        self.code = code
        self.report = report


def _error_report(exc):
    return {"error": type(exc).__name__, "message": str(exc)}


def _load_validated(path):
    try:
        problem = load_problem(path)
    except _INPUT_ERRORS as exc:
        raise _Fail(EXIT_INPUT, _error_report(exc))
    validation = validate_problem(problem)
    if not validation.ok:
        raise _Fail(EXIT_INSTANCE, {"error": validation.status.value,
                                    "validation": validation_to_dict(validation)})
    return problem, validation


def _query(problem, args):
    try:
        point = parse_number_list(args.point, "--point")
        eps = parse_number_list(args.epsilon, "--epsilon")
        query = Query(point, eps)
        build_certificate_system(problem, query)
    except _INPUT_ERRORS as exc:
        raise _Fail(EXIT_INPUT, _error_report(exc))
    except _INSTANCE_ERRORS as exc:
        raise _Fail(EXIT_INSTANCE, _error_report(exc))
    return query


def _base_report(command, problem, query, validation):
    return {
        "command": command,
        "problem": {"n": problem.n, "m": problem.m, "p": problem.feasible_set.p},
        "query": {"point": vec(query.x_bar), "epsilon": vec(query.epsilon)},
        "validation": validation_to_dict(validation),
    }


def recheck_report(problem, query, report) -> dict:
    """Re-verify every certificate and witness from its rendered ``p/q`` form."""
    system = build_certificate_system(problem, query)
    K = problem.feasible_set
    results = {}
    for key in ("weak_certificate", "interior_certificate", "certificate"):
        data = report.get(key)
        if data:
            cert = Certificate(unvec(data["lambda"]), unvec(data["mu"]), CertificateKind(data["kind"]))
            chk = verify_certificate(problem, query, cert)
            ok = chk.valid and dual_witness_holds(system, K, cert)
            if cert.kind is CertificateKind.INTERIOR:
                ok = ok and all(v > 0 for v in cert.lam)
            results[key] = ok
    data = report.get("witness")
    if data:
        wit = DominanceWitness(unvec(data["y"]), WitnessKind(data["kind"]), data["strict_index"])
        results["witness"] = wit.holds(problem, query)
    return {"passed": all(results.values()), "items": results}


def cmd_check(args):
    problem, validation = _load_validated(args.problem)
    query = _query(problem, args)
    result = classify(problem, query)
    report = _base_report("check", problem, query, validation)
    report.update({
        "verdict": result.verdict.value,
        "decided_by": result.decided_by,
        "weak_certificate": certificate_to_dict(result.weak_certificate),
        "interior_certificate": certificate_to_dict(result.interior_certificate),
        "witness": witness_to_dict(result.witness, problem),
    })
    return _finish(problem, query, report, args.recheck)


def cmd_certify(args):
    problem, validation = _load_validated(args.problem)
    query = _query(problem, args)
    search = find_interior_certificate if args.mode == "interior" else find_weak_certificate
    cert = search(problem, query)
    report = _base_report("certify", problem, query, validation)
    report.update({
        "mode": args.mode,
        "found": cert is not None,
        "certificate": certificate_to_dict(cert),
    })
    return _finish(problem, query, report, args.recheck)


def _finish(problem, query, report, recheck):
    code = EXIT_OK
    if recheck:
        report["recheck"] = recheck_report(problem, query, report)
        if not report["recheck"]["passed"]:
            code = EXIT_RECHECK
    sys.stdout.write(dumps(report))
    return code


def _parse_grid(args, n):
    boxes = args.box or []
    steps = args.steps or []
    if len(boxes) != n or len(steps) != n:
        raise _Fail(EXIT_INPUT, {"error": "DimensionMismatch",
                                 "message": f"need one --box and one --steps per axis (n={n})"})
    lo, hi = [], []
    try:
        for i, box in enumerate(boxes):
            if ".." not in box:
                raise DocumentError("expected lo..hi", f"--box[{i}]")
            a, b = box.split("..", 1)
            lo.append(parse_number(a, f"--box[{i}].lo"))
            hi.append(parse_number(b, f"--box[{i}].hi"))
    except DocumentError as exc:
        raise _Fail(EXIT_INPUT, _error_report(exc))
    if any(k < 0 for k in steps):
        raise _Fail(EXIT_INPUT, {"error": "DocumentError", "message": "--steps must be >= 0"})
    return GridSpec.from_box(lo, hi, steps)


def sweep_csv(problem, rows) -> str:
    n, m = problem.n, problem.m
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([f"x{j + 1}" for j in range(n)] + ["status", "verdict", "decided_by"]
                    + [f"lambda{i + 1}" for i in range(m)]
                    + [f"witness_y{j + 1}" for j in range(n)] + ["message"])
    for row in rows:
        c = row.classification
        lam = [""] * m
        wit = [""] * n
        verdict = decided = ""
        if c is not None:
            verdict, decided = c.verdict.value, c.decided_by
            cert = c.interior_certificate or c.weak_certificate
            if cert is not None:
                lam = vec(cert.lam)
            if c.witness is not None:
                wit = vec(c.witness.y)
        writer.writerow(vec(row.point) + [row.status, verdict, decided] + lam + wit + [row.message])
    return buf.getvalue()


def cmd_sweep(args):
    problem, _ = _load_validated(args.problem)
    try:
        eps = parse_number_list(args.epsilon, "--epsilon")
        if len(eps) != problem.m:
            raise DimensionMismatch(f"epsilon has {len(eps)} entries, expected {problem.m}")
        if any(e < 0 for e in eps):
            raise NegativeEpsilon("epsilon must be componentwise nonnegative")
    except _INPUT_ERRORS as exc:
        raise _Fail(EXIT_INPUT, _error_report(exc))
    grid = _parse_grid(args, problem.n)
    rows = sweep(problem, eps, grid)
    code = EXIT_OK
    if args.recheck:
        for row in rows:
            if row.classification is None:
                continue
            q = Query(row.point, eps)
            c = row.classification
            rep = {"weak_certificate": certificate_to_dict(c.weak_certificate),
                   "interior_certificate": certificate_to_dict(c.interior_certificate),
                   "witness": witness_to_dict(c.witness, problem)}
            if not recheck_report(problem, q, rep)["passed"]:
                code = EXIT_RECHECK
    text = sweep_csv(problem, rows)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def cmd_selftest(args):
    from .selftest import run_all

    if args.count == 0:
        print("warning: 0 cases requested; every suite passes vacuously")
    suites = run_all(args.seed, args.count)
    for s in suites:
        mark = "PASS" if s.ok else "FAIL"
        print(f"{mark}  {s.name}: {s.passed} passed, {s.failed} failed")
    ok = all(s.ok for s in suites)
    print(f"seed={args.seed} count={args.count}: {'all suites passed' if ok else 'FAILURES'}")
    return EXIT_OK if ok else EXIT_RECHECK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="epscert",
        description="Exact eps-efficiency checks for linear fractional vector problems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def query_args(p):
        p.add_argument("problem", help="problem document (JSON)")
        p.add_argument("--point", required=True, help="candidate, e.g. 0,1/2")
        p.add_argument("--epsilon", required=True, help="tolerances, e.g. 1,0")
        p.add_argument("--recheck", action="store_true",
                       help="re-verify every emitted certificate and witness")

    p = sub.add_parser("check", help="classify a candidate point")
    query_args(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("certify", help="search for a multiplier certificate")
    query_args(p)
    p.add_argument("--mode", choices=("weak", "interior"), default="weak")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("sweep", help="classify every point of a grid, CSV output")
    p.add_argument("problem")
    p.add_argument("--epsilon", required=True)
    p.add_argument("--box", action="append", help="lo..hi, once per axis")
    p.add_argument("--steps", action="append", type=int, help="grid points per axis")
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--recheck", action="store_true")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("selftest", help="run the randomized consistency suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _Fail as fail:
        sys.stdout.write(dumps(fail.report))
        return fail.code


if __name__ == "__main__":
    sys.exit(main())
