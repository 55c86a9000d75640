"""Command line front end.

Standard output is the machine channel: every command prints exactly one
JSON document with a top-level ``"schema": 1``, serialized with sorted
keys so identical input yields byte-identical output.  A short human
summary goes to standard error.

Exit status: 0 when everything checked out, 1 when validation or an
invariant failed, 2 for unusable input (bad file, unknown example, or a
size guard refusing the computation).
"""

import argparse
import dataclasses
import json
import os
import sys

from . import catalog
from .checker import check, verify_report
from .cohomology import cohomology, hs_e2_page
from .errors import InvariantError, LiecohError
from .fileformat import (
    SCHEMA,
    FileFormatError,
    algebra_to_dict,
    load_algebra,
    load_module,
)
from .lie import (
    LieAlgebra,
    derived_series,
    is_nilpotent,
    is_solvable,
    lower_central_series,
    validate,
)
from .pbw import (
    ipower_bruteforce,
    ipower_predicted,
    is_rees_noetherian,
    monoid_generator_check,
    rees_layer_table,
)
from .rep import adjoint_module, trivial_module

WEDGE_COORD_CAP = 4096          # 2**12 exterior-algebra coordinates
REES_MONOMIAL_CAP = 5000

USAGE_ERROR = 2
CHECK_FAILED = 1


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, sort_keys=True, indent=2))
    sys.stdout.write("\n")


def _human(msg: str) -> None:
    print(msg, file=sys.stderr)


class CommandError(Exception):
    def __init__(self, msg: str, code: int = USAGE_ERROR):
        super().__init__(msg)
        self.code = code


def _resolve_algebra(spec: str) -> tuple[str, LieAlgebra]:
    """A catalog name or a path to an algebra file."""
    if os.path.exists(spec):
        try:
            return spec, load_algebra(spec)
        except (FileFormatError, LiecohError) as exc:
            raise CommandError(f"{spec}: {exc}") from None
    try:
        return spec, catalog.get(spec)
    except KeyError:
        raise CommandError(
            f"{spec!r} is neither a readable file nor a known example "
            f"(known: {', '.join(catalog.names())})") from None


def _require_valid(name: str, L: LieAlgebra) -> None:
    report = validate(L)
    if not report.ok:
        labels = tuple(L.labels[i] for i in report.triple)
        raise CommandError(
            f"{name}: {report.kind} fails at ({', '.join(labels)})",
            code=CHECK_FAILED)


def _guard_wedge(L: LieAlgebra, coeff_dim: int) -> None:
    size = (2 ** L.dim) * coeff_dim
    if size > WEDGE_COORD_CAP:
        raise CommandError(
            f"the exterior algebra would need {size} coordinates; "
            f"the cap is {WEDGE_COORD_CAP}")


def _frac_strings(vec) -> list[str]:
    return [str(a) for a in vec]


def _chain_payload(chain) -> dict:
    return {
        "dims": list(chain.dims),
        "stabilized": chain.stabilized,
        "bases": [[_frac_strings(row) for row in term.basis.data]
                  for term in chain.terms],
    }


def cmd_validate(args) -> int:
    name, L = _resolve_algebra(args.input)
    report = validate(L)
    payload = {"schema": SCHEMA, "command": "validate", "input": name,
               "ok": report.ok, "violation": None}
    if not report.ok:
        payload["violation"] = {
            "kind": report.kind,
            "indices": list(report.triple),
            "labels": [L.labels[i] for i in report.triple],
        }
    _emit(payload)
    if report.ok:
        _human(f"{name}: valid Lie algebra of dimension {L.dim}")
        return 0
    labels = ", ".join(L.labels[i] for i in report.triple)
    _human(f"{name}: {report.kind} fails at ({labels})")
    return CHECK_FAILED


def cmd_series(args) -> int:
    name, L = _resolve_algebra(args.input)
    _require_valid(name, L)
    lcs = lower_central_series(L)
    der = derived_series(L)
    payload = {
        "schema": SCHEMA,
        "command": "series",
        "input": name,
        "lower_central": _chain_payload(lcs),
        "derived": _chain_payload(der),
        "is_nilpotent": lcs.last.dim == 0,
        "is_solvable": der.last.dim == 0,
        "stable_term_dim": lcs.last.dim,
    }
    _emit(payload)
    _human(f"{name}: lower central dims {lcs.dims}, derived dims {der.dims}")
    return 0


def _parse_degrees(spec: str, top: int) -> tuple[int, int]:
    try:
        lo, hi = spec.split("..")
        a, b = int(lo), int(hi)
    except ValueError:
        raise CommandError(f"--degrees wants 'a..b', got {spec!r}") from None
    if a < 0 or b < a:
        raise CommandError(f"--degrees range {spec!r} is empty or negative")
    return a, min(b, top)


def _resolve_module(spec: str, L: LieAlgebra):
    if spec == "trivial":
        return "trivial", trivial_module(L)
    if spec == "adjoint":
        return "adjoint", adjoint_module(L)
    if os.path.exists(spec):
        try:
            return spec, load_module(spec, L)
        except (FileFormatError, LiecohError) as exc:
            raise CommandError(f"{spec}: {exc}") from None
    raise CommandError(
        f"--module takes 'trivial', 'adjoint' or a module file path, got {spec!r}")


def cmd_cohomology(args) -> int:
    name, L = _resolve_algebra(args.input)
    _require_valid(name, L)
    mod_name, M = _resolve_module(args.module, L)
    _guard_wedge(L, M.dim)
    result = cohomology(L, M)
    lo, hi = (0, L.dim) if args.degrees is None else _parse_degrees(args.degrees, L.dim)
    payload = {
        "schema": SCHEMA,
        "command": "cohomology",
        "input": name,
        "module": mod_name,
        "degrees": [lo, hi],
        "dims": list(result.dims),
        "euler_characteristic": result.euler_characteristic(),
        "representatives": {
            str(q): [_frac_strings(rep) for rep in result.representatives[q]]
            for q in range(lo, hi + 1)
        },
    }
    _emit(payload)
    _human(f"{name}: cohomology dims {result.dims} with {mod_name} coefficients")
    return 0


def cmd_check(args) -> int:
    name, L = _resolve_algebra(args.input)
    _require_valid(name, L)
    _guard_wedge(L, 1)
    report = check(L)
    payload = {
        "schema": SCHEMA,
        "command": "check",
        "input": name,
        "report": dataclasses.asdict(report),
        "derived_equivalence": {
            "verdict": report.condition2 and report.condition3,
            "note": ("conjunction of conditions 2 and 3; the derived-category "
                     "statement itself is not computed"),
        },
    }
    _emit(payload)
    try:
        verify_report(report, context=name)
    except InvariantError as exc:
        _human(f"{name}: INVARIANT FAILURE: {exc}")
        return CHECK_FAILED
    _human(f"{name}: condition2={report.condition2} condition3={report.condition3} "
           f"rees_noetherian={report.rees_noetherian}")
    return 0


def cmd_rees(args) -> int:
    name, L = _resolve_algebra(args.input)
    _require_valid(name, L)
    r_max, m_max = args.max_filtration, args.max_weight
    if r_max < 1 or m_max < 1:
        raise CommandError("--max-filtration and --max-weight must be positive")
    payload = {
        "schema": SCHEMA,
        "command": "rees",
        "input": name,
        "max_filtration": r_max,
        "max_weight": m_max,
        "nilpotent": is_nilpotent(L),
        "rees_noetherian": is_rees_noetherian(L),
        "table": None,
        "nu": None,
        "adapted_order": None,
        "lcs_dims_match": None,
        "monoid_generated": None,
        "pbw_verified": None,
    }
    summary = f"{name}: rees_noetherian={payload['rees_noetherian']}"
    if payload["nilpotent"]:
        from math import comb
        if comb(L.dim + r_max, L.dim) > REES_MONOMIAL_CAP:
            raise CommandError(
                f"{comb(L.dim + r_max, L.dim)} monomials exceed the cap "
                f"{REES_MONOMIAL_CAP}; lower --max-filtration")
        table = rees_layer_table(L, r_max, m_max)
        lcs = lower_central_series(L)
        matches = all(table.dim(1, m) == lcs.term(m).dim
                      for m in range(1, m_max + 1))
        payload["table"] = [list(row) for row in table.dims]
        payload["nu"] = list(table.nu)
        payload["adapted_order"] = list(table.order)
        payload["lcs_dims_match"] = matches
        payload["monoid_generated"] = monoid_generator_check(L, r_max, m_max)
        if args.verify_pbw:
            checks = []
            all_equal = True
            for m in range(1, m_max + 1):
                equal = ipower_bruteforce(L, m, r_max) == ipower_predicted(L, m, r_max)
                all_equal = all_equal and equal
                checks.append({"m": m, "r_max": r_max, "equal": equal})
            payload["pbw_verified"] = {"all_equal": all_equal, "checks": checks}
            summary += f", predicted == brute-force: {'yes' if all_equal else 'NO'}"
    _emit(payload)
    _human(summary)
    if payload["pbw_verified"] is not None and not payload["pbw_verified"]["all_equal"]:
        return CHECK_FAILED
    if payload["lcs_dims_match"] is False or payload["monoid_generated"] is False:
        return CHECK_FAILED
    return 0


def cmd_e2(args) -> int:
    name, L = _resolve_algebra(args.input)
    _require_valid(name, L)
    _guard_wedge(L, 1)
    page = hs_e2_page(L)
    h_total = cohomology(L, trivial_module(L)).dims
    top = len(h_total) - 1
    bottom = list(page.bottom_row) + [0] * (top + 1 - len(page.bottom_row))
    bound_ok = all(page.antidiagonal_sum(t) >= h_total[t] for t in range(top + 1))
    payload = {
        "schema": SCHEMA,
        "command": "e2",
        "input": name,
        "table": [list(row) for row in page.dims],
        "bottom_row": list(page.bottom_row),
        "h_total": list(h_total),
        "bottom_row_equals_h_total": bottom == list(h_total),
        "antidiagonal_bound_ok": bound_ok,
    }
    _emit(payload)
    _human(f"{name}: starting page bottom row {page.bottom_row}, "
           f"H dims {h_total}")
    return 0 if bound_ok else CHECK_FAILED


def cmd_example(args) -> int:
    try:
        L = catalog.get(args.name)
    except KeyError as exc:
        raise CommandError(str(exc)) from None
    if args.emit:
        _emit(algebra_to_dict(L))
        _human(f"{args.name}: emitted algebra file ({L.dim}-dimensional)")
        return 0
    payload = {
        "schema": SCHEMA,
        "command": "example",
        "name": args.name,
        "dim": L.dim,
        "basis": list(L.labels),
        "is_nilpotent": is_nilpotent(L),
        "is_solvable": is_solvable(L),
    }
    _emit(payload)
    _human(f"{args.name}: dimension {L.dim}, basis {', '.join(L.labels)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liecoh",
        description="Exact Lie algebra cohomology, filtration layers and "
                    "nilpotency criteria. JSON reports on stdout, summaries "
                    "on stderr.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check antisymmetry and the Jacobi identity")
    p.add_argument("input", help="algebra file or example name")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("series", help="lower central and derived series")
    p.add_argument("input")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("cohomology", help="cohomology with chosen coefficients")
    p.add_argument("input")
    p.add_argument("--module", default="trivial",
                   help="'trivial' (default), 'adjoint', or a module file")
    p.add_argument("--degrees", default=None,
                   help="restrict printed representatives to a..b")
    p.set_defaults(func=cmd_cohomology)

    p = sub.add_parser("check", help="decide the equivalent conditions")
    p.add_argument("input")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("rees", help="filtration layer tables and the PBW basis check")
    p.add_argument("input")
    p.add_argument("--max-filtration", type=int, required=True, metavar="R")
    p.add_argument("--max-weight", type=int, required=True, metavar="M")
    p.add_argument("--verify-pbw", action="store_true",
                   help="compare predicted and brute-force ideal powers")
    p.set_defaults(func=cmd_rees)

    p = sub.add_parser("e2", help="starting-page dimension table")
    p.add_argument("input")
    p.set_defaults(func=cmd_e2)

    p = sub.add_parser("example", help="show or emit a built-in example")
    p.add_argument("name")
    p.add_argument("--emit", action="store_true",
                   help="print the algebra file instead of a summary")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CommandError as exc:
        _human(f"error: {exc}")
        return exc.code
    except LiecohError as exc:
        _human(f"error: {exc}")
        return CHECK_FAILED


if __name__ == "__main__":
    sys.exit(main())
