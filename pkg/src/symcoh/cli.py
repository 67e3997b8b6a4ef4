"""Command-line front end: parse algebra/module descriptions, dispatch a
computation, and emit a deterministic report.

Exit codes: 0 success, 1 validation or assertion failure, 2 schema
error, 3 budget exceeded, 4 internal cross-check/assertion failure.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bar, hochschild, resolution
from .errors import (BudgetExceeded, CharacteristicDivides, InvalidPrime,
                     NotAGroup, NotCocommutative, NotCommutative, SchemaError,
                     SymcohError)
from .fields import Field
from .hopf import (HopfAlgebra, group_algebra, named_group_table, validate_hopf)
from .linalg import Matrix
from .modules import (Bimodule, LeftModule, regular_bimodule,
                      regular_left_module, trivial_bimodule, trivial_module,
                      validate_bimodule, validate_left_module)

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_SCHEMA = 2
EXIT_BUDGET = 3
EXIT_INTERNAL = 4


def parse_field_flag(text: str) -> Field:
    t = text.strip().lower()
    if t in ("q", "rational", "rationals"):
        return Field.rationals()
    if t.startswith("gf:"):
        try:
            return Field.prime(int(t.split(":", 1)[1]))
        except ValueError as exc:
            raise SchemaError(f"bad field {text!r}: {exc}") from exc
    raise SchemaError(f"unknown field {text!r} (use q or gf:<p>)")


def _field_from_json(obj) -> Field:
    if not isinstance(obj, dict) or "kind" not in obj:
        raise SchemaError("field must be an object with a 'kind'")
    if obj["kind"] == "rational":
        return Field.rationals()
    if obj["kind"] == "prime":
        try:
            return Field.prime(int(obj["p"]))
        except (KeyError, ValueError) as exc:
            raise SchemaError(f"bad prime field: {exc}") from exc
    raise SchemaError(f"unknown field kind {obj['kind']!r}")


def _parse_matrix(field: Field, rows, what: str) -> Matrix:
    try:
        return Matrix.from_rows(field, [[field.parse(x) for x in row] for row in rows])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad {what}: {exc}") from exc


def hopf_from_json(obj: dict, field_override: Field | None) -> HopfAlgebra:
    """Build an algebra from the JSON schema (group table or full constants)."""
    if "table" in obj or "order" in obj:
        try:
            order = int(obj["order"])
            table = [[int(x) for x in row] for row in obj["table"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"bad group description: {exc}") from exc
        field = field_override or (
            _field_from_json(obj["field"]) if "field" in obj else Field.rationals())
        return group_algebra(order, table, field)
    required = ("dim", "mult", "unit", "comult", "counit", "antipode")
    missing = [k for k in required if k not in obj]
    if missing:
        raise SchemaError(f"algebra object is missing {missing}")
    field = field_override or _field_from_json(obj.get("field", {"kind": "rational"}))
    try:
        dim = int(obj["dim"])
        mult = [[{} for _ in range(dim)] for _ in range(dim)]
        for i, j, k, coeff in obj["mult"]:
            mult[int(i)][int(j)][int(k)] = field.parse(coeff)
        comult = [dict() for _ in range(dim)]
        for i, j, k, coeff in obj["comult"]:
            comult[int(i)][(int(j), int(k))] = field.parse(coeff)
        unit = [field.parse(x) for x in obj["unit"]]
        counit = [field.parse(x) for x in obj["counit"]]
    except (TypeError, ValueError, IndexError, ZeroDivisionError) as exc:
        raise SchemaError(f"bad structure constants: {exc}") from exc
    antipode = _parse_matrix(field, obj["antipode"], "antipode")
    labels = obj.get("basis_labels", [f"b{i}" for i in range(dim)])
    return HopfAlgebra(field, dim, labels, mult, unit, comult, counit, antipode)


def load_algebra(source: str, field_override: Field | None) -> HopfAlgebra:
    if source.startswith("Cp:") or source in ("S3", "s3"):
        field = field_override or Field.rationals()
        table = named_group_table(source)
        return group_algebra(len(table), table, field)
    try:
        with open(source) as f:
            obj = json.load(f)
    except OSError as exc:
        raise SchemaError(f"cannot read algebra file {source!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"algebra file is not valid JSON: {exc}") from exc
    return hopf_from_json(obj, field_override)


def load_left_module(source: str, h: HopfAlgebra) -> LeftModule:
    if source == "trivial":
        return trivial_module(h)
    if source == "regular":
        return regular_left_module(h)
    obj = _read_json(source)
    mod = LeftModule(int(obj["dim"]),
                     [_parse_matrix(h.field, rows, "left_action")
                      for rows in obj["left_action"]])
    validate_left_module(h, mod)
    return mod


def load_bimodule(source: str, h: HopfAlgebra) -> Bimodule:
    if source == "trivial":
        return trivial_bimodule(h)
    if source == "regular":
        return regular_bimodule(h)
    obj = _read_json(source)
    if "right_action" not in obj:
        raise SchemaError("bimodule description needs right_action")
    bim = Bimodule(int(obj["dim"]),
                   [_parse_matrix(h.field, rows, "left_action")
                    for rows in obj["left_action"]],
                   [_parse_matrix(h.field, rows, "right_action")
                    for rows in obj["right_action"]])
    validate_bimodule(h, bim)
    return bim


def hopf_to_json(h: HopfAlgebra) -> dict:
    """Serialize an algebra back into the input schema (exact coefficients)."""
    fld = h.field
    field_obj = {"kind": "rational"} if fld.is_rational else {"kind": "prime", "p": fld.p}
    return {
        "field": field_obj,
        "dim": h.dim,
        "basis_labels": list(h.basis_labels),
        "mult": [[i, j, k, fld.to_str(c)]
                 for i in range(h.dim) for j in range(h.dim)
                 for k, c in sorted(h.mult[i][j].items())],
        "unit": [fld.to_str(x) for x in h.unit],
        "comult": [[i, j, k, fld.to_str(c)]
                   for i in range(h.dim)
                   for (j, k), c in sorted(h.comult[i].items())],
        "counit": [fld.to_str(x) for x in h.counit],
        "antipode": [[fld.to_str(h.antipode[i, j]) for j in range(h.dim)]
                     for i in range(h.dim)],
    }


def _read_json(source: str) -> dict:
    try:
        with open(source) as f:
            return json.load(f)
    except OSError as exc:
        raise SchemaError(f"cannot read {source!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{source!r} is not valid JSON: {exc}") from exc


# -- report assembly ---------------------------------------------------------


def _report(mode, dims=None, routes=None, checks=None, extra=None) -> dict:
    out = {
        "mode": mode,
        "dims": list(dims) if dims is not None else [],
        "routes": {k: list(v) for k, v in (routes or {}).items()},
        "checks": [{"name": name, "pass": bool(ok)} for name, ok in (checks or [])],
    }
    if extra:
        out.update(extra)
    return out


def _emit(report: dict, fmt: str):
    if fmt == "json":
        sys.stdout.write(json.dumps(report, sort_keys=True,
                                    separators=(",", ":")) + "\n")
        return
    print(f"mode: {report['mode']}")
    if report["dims"]:
        print("degree " + " ".join(f"{n:>4d}" for n in range(len(report["dims"]))))
        print("dim    " + " ".join(f"{v:>4d}" for v in report["dims"]))
    for name, vals in sorted(report["routes"].items()):
        print(f"route {name}: {vals}")
    if "table" in report:
        print(f"{'n':>3} {'dim':>5} {'rank':>5} {'free':>5}")
        for row in report["table"]:
            print(f"{row['n']:>3} {row['dim']:>5} {row['rank']:>5} "
                  f"{str(row['is_free']):>5}")
    for check in report["checks"]:
        print(f"check {check['name']}: {'pass' if check['pass'] else 'FAIL'}")


def _checks_pass(report: dict) -> bool:
    return all(c["pass"] for c in report["checks"])


# -- main --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="symcoh",
        description="Exact symmetric (Hochschild) cohomology of cocommutative "
                    "Hopf algebras given by structure constants.")
    ap.add_argument("--algebra", required=True,
                    help="builtin name (Cp:<n>, S3) or path to a JSON description")
    ap.add_argument("--field", default=None,
                    help="field override: q or gf:<p>")
    ap.add_argument("--module", default=None,
                    help="trivial, regular, or path to a JSON module description")
    ap.add_argument("--mode", required=True,
                    choices=["H", "SH", "HH", "SHH", "resolution", "cp-table",
                             "validate", "compare-adjoint", "corollary-check"])
    ap.add_argument("--max-degree", type=int, default=5)
    ap.add_argument("--cross-check", action="store_true",
                    help="run both realizations/routes and compare")
    ap.add_argument("--route", choices=["bar", "resolution"], default="bar",
                    help="complex family for SH/SHH/corollary-check")
    ap.add_argument("--format", choices=["json", "table"], default="table")
    return ap


def run(args) -> tuple[dict, int]:
    if args.max_degree < 1:
        raise SchemaError("max-degree must be at least 1")
    budget = bar.DEFAULT_BUDGET
    env = os.environ.get("SYMCOH_BUDGET")
    if env:
        try:
            budget = int(env)
        except ValueError as exc:
            raise SchemaError(f"SYMCOH_BUDGET must be an integer: {exc}") from exc
    field_override = parse_field_flag(args.field) if args.field else None
    h = load_algebra(args.algebra, field_override)
    mode = args.mode
    top = args.max_degree

    if mode == "validate":
        report = validate_hopf(h, require_cocommutative=True)
        checks = [(c.name, c.passed) for c in report.checks]
        out = _report("validate", checks=checks,
                      extra={"cocommutative": report.cocommutative,
                             "commutative": report.commutative})
        return out, EXIT_OK if report.passed else EXIT_VALIDATION

    if mode == "cp-table":
        if not h.group_like or h.group_table != [[(i + j) % h.dim for j in range(h.dim)]
                                                 for i in range(h.dim)]:
            raise SchemaError("cp-table needs a cyclic group algebra (Cp:<p>)")
        if h.field.characteristic != h.dim:
            raise InvalidPrime("cp-table needs the field GF(p) matching the order")
        rows = resolution.cp_rank_table(h.dim, n_max=top)
        table = [{"n": r.n, "dim": r.dim, "rank": r.rank,
                  "claimed_rank": r.claimed_rank, "is_free": r.is_free}
                 for r in rows]
        checks = [(f"rank_matches_claim_{r.n}", r.rank == r.claimed_rank)
                  for r in rows] + [(f"free_{r.n}", r.is_free) for r in rows]
        out = _report("cp-table", checks=checks, extra={"table": table})
        return out, EXIT_OK if _checks_pass(out) else EXIT_VALIDATION

    if mode == "resolution":
        res = resolution.sym_resolution_complex(h, top)
        homotopy = resolution.contracting_homotopy_check(h, top)
        checks = res.exactness_report() + \
            [(f"homotopy_{n}", ok) for n, ok in homotopy.degrees]
        out = _report("resolution", dims=res.dims(), checks=checks)
        return out, EXIT_OK if _checks_pass(out) else EXIT_VALIDATION

    if mode in ("H", "SH"):
        mod = load_left_module(args.module or "trivial", h)
        if mode == "H":
            rep = bar.classical_cohomology(h, mod, top, budget=budget)
            out = _report("H", dims=rep.dims, routes={rep.realization: rep.dims})
            return out, EXIT_OK
        if args.route == "resolution":
            rep = resolution.sh_via_resolution(h, mod, top)
            routes = {"resolution": rep.dims}
            checks = []
            if args.cross_check:
                other = bar.symmetric_cohomology(h, mod, top, budget=budget)
                routes["fixed_subcomplex"] = other.dims
                checks.append(("routes_agree", other.dims == rep.dims))
        else:
            rep = bar.symmetric_cohomology(h, mod, top,
                                           cross_check=args.cross_check,
                                           budget=budget)
            routes = rep.routes
            checks = rep.checks
        out = _report("SH", dims=rep.dims, routes=routes, checks=checks)
        return out, EXIT_OK if _checks_pass(out) else EXIT_INTERNAL

    if mode in ("HH", "SHH"):
        bim = load_bimodule(args.module or "regular", h)
        if mode == "HH":
            rep = hochschild.classical_hochschild_cohomology(h, bim, top, budget=budget)
            out = _report("HH", dims=rep.dims, routes={rep.realization: rep.dims})
            return out, EXIT_OK
        if args.route == "resolution":
            rep = resolution.shh_via_resolution(h, bim, top)
            routes = {"resolution": rep.dims}
            checks = []
            if args.cross_check:
                other = hochschild.symmetric_hochschild_cohomology(h, bim, top,
                                                                   budget=budget)
                routes["fixed_subcomplex"] = other.dims
                checks.append(("routes_agree", other.dims == rep.dims))
        else:
            rep = hochschild.symmetric_hochschild_cohomology(
                h, bim, top, cross_check=args.cross_check, budget=budget)
            routes = rep.routes
            checks = rep.checks
        out = _report("SHH", dims=rep.dims, routes=routes, checks=checks)
        return out, EXIT_OK if _checks_pass(out) else EXIT_INTERNAL

    if mode == "compare-adjoint":
        bim = load_bimodule(args.module or "regular", h)
        rep = hochschild.compare_adjoint(h, bim, top, budget=budget)
        out = _report("compare-adjoint", dims=rep.dims, routes=rep.routes,
                      checks=rep.checks)
        return out, EXIT_OK if _checks_pass(out) else EXIT_VALIDATION

    if mode == "corollary-check":
        route = "resolution" if args.route == "resolution" else "bar"
        rep = hochschild.commutative_factorization_check(h, top, budget=budget,
                                                         route=route)
        out = _report("corollary-check", dims=rep.dims, routes=rep.routes,
                      checks=rep.checks)
        return out, EXIT_OK if _checks_pass(out) else EXIT_VALIDATION

    raise SchemaError(f"unhandled mode {mode!r}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        report, code = run(args)
    except SchemaError as exc:
        _emit({"mode": args.mode, "dims": [], "routes": {}, "checks": [],
               "error": {"code": EXIT_SCHEMA, "reason": str(exc)}}, args.format)
        return EXIT_SCHEMA
    except BudgetExceeded as exc:
        _emit({"mode": args.mode, "dims": [], "routes": {}, "checks": [],
               "error": {"code": EXIT_BUDGET, "reason": str(exc)}}, args.format)
        return EXIT_BUDGET
    except (NotAGroup, NotCocommutative, NotCommutative, CharacteristicDivides,
            InvalidPrime, SymcohError) as exc:
        _emit({"mode": args.mode, "dims": [], "routes": {}, "checks": [],
               "error": {"code": EXIT_VALIDATION,
                         "reason": f"{type(exc).__name__}: {exc}"}}, args.format)
        return EXIT_VALIDATION
    except AssertionError as exc:
        _emit({"mode": args.mode, "dims": [], "routes": {}, "checks": [],
               "error": {"code": EXIT_INTERNAL, "reason": str(exc)}}, args.format)
        return EXIT_INTERNAL
    _emit(report, args.format)
    return code


if __name__ == "__main__":
    sys.exit(main())
