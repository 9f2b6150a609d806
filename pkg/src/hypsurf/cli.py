"""Command-line front end.

Single-query mode mirrors the library operations one flag set per
subcommand; batch mode consumes one JSON query per line and emits one JSON
result per line, isolating per-line errors.  Rationals serialize as lowest
terms strings "p/q" (bare "p" for integers) so no consumer ever rounds.

Exit status: 0 for any computed result (including unknown verdicts and
unmet hypotheses), 2 for input errors, 3 when an oracle run finds
violations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import catalog, oracle, positivity, seshadri
from .catalog import surface_params
from .lattice import (
    Bound,
    DivisorClass,
    RationalBound,
    SqrtBound,
    intersect,
)

EXIT_OK = 0
EXIT_INPUT_ERROR = 2
EXIT_ORACLE_VIOLATIONS = 3


class InputError(Exception):
    pass


# ---------------------------------------------------------------------------
# serialization helpers

def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"malformed rational {text!r}") from exc


def class_to_json(c: DivisorClass) -> dict:
    return {"a": c.a, "b": c.b, "d": list(c.d)}


def class_from_json(obj) -> DivisorClass:
    try:
        return DivisorClass(int(obj["a"]), int(obj["b"]), tuple(int(x) for x in obj.get("d", ())))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed divisor class {obj!r}") from exc


def bound_to_json(b: Bound) -> dict:
    if isinstance(b, RationalBound):
        return {"kind": "rational", "q": format_rational(b.q)}
    return {"kind": "sqrt", "q": format_rational(b.q)}


def result_to_json(res: seshadri.SeshadriResult, cert=None) -> dict:
    return {
        "status": res.status.value,
        "value": None if res.value is None else format_rational(res.value),
        "lower": None if res.lower is None else format_rational(res.lower),
        "upper": None if res.upper is None else bound_to_json(res.upper),
        "hypotheses": [
            {"name": h.name, "holds": h.holds, "detail": h.detail} for h in res.hypotheses
        ],
        "attaining": [
            {
                "description": w.description,
                "class": class_to_json(w.cls),
                "multiplicity": w.multiplicity,
                "ratio": format_rational(w.ratio),
            }
            for w in res.attaining
        ],
        "certificate": None if cert is None else certificate_to_json(cert),
    }


def certificate_to_json(cert: seshadri.Certificate) -> dict:
    return {
        "kind": cert.kind,
        "witness_point": cert.witness_point,
        "witness_curves": [
            {"class": class_to_json(c), "multiplicity": m, "ratio": format_rational(q)}
            for c, m, q in cert.witness_curves
        ],
        "claimed": format_rational(cert.claimed),
        "self_intersection": cert.comparison.self_int,
        "comparison": cert.comparison.kind,
        "verified": cert.verify(),
    }


def verdict_to_json(v: positivity.AmpleVerdict) -> dict:
    return {
        "status": v.status.value,
        "criteria": [
            {"name": c.name, "outcome": c.outcome.value, "detail": c.detail}
            for c in v.criteria_trace
        ],
        "witness": class_to_json(v.witnesses[0]) if v.witnesses else None,
    }


def report_to_json(rep: oracle.OracleReport) -> dict:
    return {
        "grid": rep.grid,
        "instances_checked": rep.instances_checked,
        "violations": [
            {
                "params": v.params,
                "alpha": v.alpha,
                "beta": v.beta,
                "m": v.m,
                "found": format_rational(v.found),
                "claimed": format_rational(v.claimed),
            }
            for v in rep.violations
        ],
        "min_gap": None if rep.min_gap is None else format_rational(rep.min_gap),
    }


# ---------------------------------------------------------------------------
# bundle parsing

def parse_bundle(text: str, r: int | None) -> DivisorClass:
    """Parse "a,b", "a,b,d" (uniform, needs r) or "a,b,d1,...,dR"."""
    try:
        parts = [int(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise InputError(f"malformed bundle {text!r}: {exc}") from exc
    if len(parts) < 2:
        raise InputError(f"bundle {text!r} needs at least a and b")
    a, b, rest = parts[0], parts[1], parts[2:]
    if not rest:
        if r not in (None, 0):
            raise InputError(f"bundle {text!r} has no exceptional part but --r {r} given")
        return DivisorClass(a, b)
    if len(rest) == 1:
        if r is None:
            raise InputError(f"uniform bundle {text!r} needs --r")
        return DivisorClass(a, b, (rest[0],) * r)
    if r is not None and r != len(rest):
        raise InputError(f"--r {r} conflicts with {len(rest)} exceptional coefficients")
    return DivisorClass(a, b, tuple(rest))


def _surface(type_id) -> catalog.SurfaceData:
    try:
        return surface_params(int(type_id))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc


# ---------------------------------------------------------------------------
# command handlers: each returns (json-serializable result, exit status)

def _row_json(row: catalog.SurfaceData) -> dict:
    return {
        "type": row.type_id,
        "group": row.group_label,
        "gamma": row.gamma,
        "multiplicities": list(row.multiplicities),
        "mu": row.mu,
        "gamma_over_mu": row.gamma_over_mu,
    }


def cmd_catalog(type_id=None):
    if type_id is None:
        return [_row_json(row) for row in catalog.SURFACE_TABLE], EXIT_OK
    return _row_json(_surface(type_id)), EXIT_OK


def cmd_intersect(type_id, r, lhs, rhs):
    _surface(type_id)
    c1 = parse_bundle(lhs, r) if isinstance(lhs, str) else class_from_json(lhs)
    c2 = parse_bundle(rhs, r) if isinstance(rhs, str) else class_from_json(rhs)
    try:
        return {"value": intersect(c1, c2)}, EXIT_OK
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def cmd_ample(type_id, bundle):
    s = _surface(type_id)
    verdict = positivity.decide_ample(bundle, s)
    return verdict_to_json(verdict), EXIT_OK


def cmd_seshadri_multi(type_id, bundle, config=None, r=None):
    s = _surface(type_id)
    try:
        if config is None:
            if r is None:
                raise InputError("general multi-point bounds need --r")
            res = seshadri.multipoint_general(bundle, r)
        else:
            res = seshadri.multipoint_special(bundle, s, config)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return result_to_json(res), EXIT_OK


def cmd_seshadri_point(type_id, bundle, locus, on_b_minus_e):
    s = _surface(type_id)
    try:
        loc = seshadri.Locus(locus)
    except ValueError as exc:
        raise InputError(f"unknown locus {locus!r}") from exc
    try:
        res = seshadri.point_on_locus(bundle, s, loc, on_b_minus_e)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return result_to_json(res), EXIT_OK


def cmd_seshadri_global(type_id, bundle):
    s = _surface(type_id)
    try:
        res, cert = seshadri.global_constant(bundle, s)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return result_to_json(res, cert), EXIT_OK


def cmd_oracle_verify(prop, type_id, grid_max, box, jobs):
    s = _surface(type_id)
    try:
        report = oracle.run_verifier(prop, s, grid_max, box, jobs)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    status = EXIT_OK if report.passed else EXIT_ORACLE_VIOLATIONS
    return report_to_json(report), status


# ---------------------------------------------------------------------------
# rendering

def render_text(doc) -> str:
    lines: list[str] = []

    def walk(prefix, node):
        if isinstance(node, dict):
            for key, val in node.items():
                if isinstance(val, (dict, list)):
                    lines.append(f"{prefix}{key}:")
                    walk(prefix + "  ", val)
                else:
                    lines.append(f"{prefix}{key}: {val}")
        elif isinstance(node, list):
            for item in node:
                if isinstance(item, (dict, list)):
                    lines.append(f"{prefix}-")
                    walk(prefix + "  ", item)
                else:
                    lines.append(f"{prefix}- {item}")
        else:
            lines.append(f"{prefix}{node}")

    walk("", doc)
    return "\n".join(lines)


def emit(doc, fmt: str, out) -> None:
    if fmt == "text":
        print(render_text(doc), file=out)
    else:
        print(json.dumps(doc), file=out)


# ---------------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hypsurf",
        description="Ampleness and Seshadri constants on blow-ups of hyperelliptic surfaces",
    )
    parser.add_argument("--format", choices=("json", "text"), default="json")
    parser.add_argument("--output", default=None, help="write results to PATH instead of stdout")
    parser.add_argument("--batch", default=None, help="read JSONL queries from PATH")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("catalog", help="show the surface classification table")
    psub = p.add_subparsers(dest="catalog_command", required=True)
    pshow = psub.add_parser("show")
    pshow.add_argument("--type", type=int, default=None)

    p = sub.add_parser("intersect", help="intersection number of two classes")
    p.add_argument("--type", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)

    p = sub.add_parser("ample", help="tri-state ampleness verdict")
    p.add_argument("--type", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--bundle", required=True)

    p = sub.add_parser("seshadri", help="Seshadri constant evaluators")
    ssub = p.add_subparsers(dest="seshadri_command", required=True)

    pm = ssub.add_parser("multi")
    pm.add_argument("--type", type=int, required=True)
    pm.add_argument("--bundle", required=True)
    pm.add_argument("--config", default=None, help="r,s0,t0,lA,lB")
    pm.add_argument("--singular-a", action="store_true")
    pm.add_argument("--r", type=int, default=None)

    pp = ssub.add_parser("point")
    pp.add_argument("--type", type=int, required=True)
    pp.add_argument("--r", type=int, default=None)
    pp.add_argument("--bundle", required=True)
    pp.add_argument("--locus", required=True, choices=[loc.value for loc in seshadri.Locus])
    pp.add_argument("--on-b-minus-e", action="store_true")

    pg = ssub.add_parser("global")
    pg.add_argument("--type", type=int, required=True)
    pg.add_argument("--r", type=int, default=None)
    pg.add_argument("--bundle", required=True)

    p = sub.add_parser("oracle", help="brute-force verification runs")
    osub = p.add_subparsers(dest="oracle_command", required=True)
    pv = osub.add_parser("verify")
    pv.add_argument("--prop", required=True, choices=("multipoint", "single-chain", "global-witness"))
    pv.add_argument("--type", type=int, required=True)
    pv.add_argument("--grid-max", type=int, default=10)
    pv.add_argument("--box", type=int, default=16)
    pv.add_argument("--jobs", type=int, default=1)

    return parser


def parse_config(text: str, singular: bool) -> seshadri.PointConfig:
    try:
        r, s0, t0, la, lb = (int(tok) for tok in text.split(","))
        return seshadri.PointConfig(r, s0, t0, la, lb, singular)
    except ValueError as exc:
        raise InputError(f"malformed point configuration {text!r}: {exc}") from exc


def dispatch_args(args) -> tuple[object, int]:
    if args.command == "catalog":
        return cmd_catalog(args.type)
    if args.command == "intersect":
        return cmd_intersect(args.type, args.r, args.lhs, args.rhs)
    if args.command == "ample":
        return cmd_ample(args.type, parse_bundle(args.bundle, args.r))
    if args.command == "seshadri":
        if args.seshadri_command == "multi":
            cfg = None if args.config is None else parse_config(args.config, args.singular_a)
            return cmd_seshadri_multi(args.type, parse_bundle(args.bundle, 0), cfg, args.r)
        if args.seshadri_command == "point":
            return cmd_seshadri_point(args.type, parse_bundle(args.bundle, args.r),
                                      args.locus, args.on_b_minus_e)
        return cmd_seshadri_global(args.type, parse_bundle(args.bundle, args.r))
    if args.command == "oracle":
        return cmd_oracle_verify(args.prop, args.type, args.grid_max, args.box, args.jobs)
    raise InputError("no command given; see --help")


# ---------------------------------------------------------------------------
# batch mode

def dispatch_query(query: dict) -> tuple[object, int]:
    """Execute one batch query object {"command": ..., "payload": {...}}."""
    if not isinstance(query, dict):
        raise InputError("query must be a JSON object")
    command = query.get("command")
    payload = query.get("payload", {})
    if not isinstance(payload, dict):
        raise InputError("payload must be a JSON object")

    def bundle(key="bundle", r_key="r"):
        obj = payload.get(key)
        if isinstance(obj, dict):
            return class_from_json(obj)
        if isinstance(obj, str):
            return parse_bundle(obj, payload.get(r_key))
        raise InputError(f"missing or malformed {key!r}")

    if command == "catalog":
        return cmd_catalog(payload.get("type"))
    if command == "intersect":
        return cmd_intersect(payload.get("type"), payload.get("r"),
                             payload.get("lhs"), payload.get("rhs"))
    if command == "ample":
        return cmd_ample(payload.get("type"), bundle())
    if command == "seshadri-multi":
        cfg = None
        if "config" in payload:
            c = payload["config"]
            try:
                cfg = seshadri.PointConfig(
                    int(c["r"]), int(c["s0"]), int(c["t0"]), int(c["lA"]), int(c["lB"]),
                    bool(c.get("singular_a", False)))
            except (KeyError, TypeError, ValueError) as exc:
                raise InputError(f"malformed point configuration {c!r}") from exc
        b = bundle()
        if b.r != 0:
            raise InputError("multi-point bundle must have no exceptional part")
        return cmd_seshadri_multi(payload.get("type"), b, cfg, payload.get("r"))
    if command == "seshadri-point":
        return cmd_seshadri_point(payload.get("type"), bundle(),
                                  payload.get("locus"), bool(payload.get("on_b_minus_e", False)))
    if command == "seshadri-global":
        return cmd_seshadri_global(payload.get("type"), bundle())
    if command == "oracle-verify":
        return cmd_oracle_verify(payload.get("prop"), payload.get("type"),
                                 int(payload.get("grid_max", 10)), int(payload.get("box", 16)),
                                 int(payload.get("jobs", 1)))
    raise InputError(f"unknown command {command!r}")


def run_batch(lines, out) -> int:
    """One result object per input line, same order; a malformed line yields
    an error object and processing continues."""
    any_error = False
    for line in lines:
        line = line.strip()
        if not line:
            continue
        qid = None
        try:
            query = json.loads(line)
            if isinstance(query, dict):
                qid = query.get("id")
            doc, _ = dispatch_query(query)
            print(json.dumps({"id": qid, "result": doc}), file=out)
        except (InputError, json.JSONDecodeError) as exc:
            any_error = True
            print(json.dumps({"id": qid, "error": str(exc)}), file=out)
    return EXIT_INPUT_ERROR if any_error else EXIT_OK


# ---------------------------------------------------------------------------

def run_single(argv) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout
    close = False
    if args.output:
        out = open(args.output, "w")
        close = True
    try:
        if args.batch:
            if args.batch == "-":
                return run_batch(sys.stdin, out)
            with open(args.batch) as fh:
                return run_batch(fh, out)
        try:
            doc, status = dispatch_args(args)
        except InputError as exc:
            print(json.dumps({"error": str(exc)}), file=sys.stderr)
            return EXIT_INPUT_ERROR
        emit(doc, args.format, out)
        return status
    finally:
        if close:
            out.close()


def main() -> None:
    sys.exit(run_single(sys.argv[1:]))


if __name__ == "__main__":
    main()
