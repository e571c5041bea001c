"""Command-line frontend.

Every subcommand maps to one library operation.  Exit codes: 0 when the
computation succeeded and any checked bound holds, 1 when a bound or a
documented precondition was violated (with a diagnostic), 2 for input errors
(bad syntax, bad schema), reported on one line prefixed with "error:".
Output is deterministic; --json switches to a schema-versioned object.
"""

from __future__ import annotations

import argparse
import json
import sys

from .applications import (
    cauchy_davenport_check,
    eliahou_kervaire_check,
    extremal_cover,
    hopf_stiefel,
    hyperplane_to_list,
    hyperplanes_from_lists,
    multiset_deg,
    sumset,
    sun_value_set_check,
    value_set,
    vector_multiset_from_list,
    vector_multiset_to_list,
    vector_sumset,
    verify_cover,
)
from .certificates import find_witness, punctured_decompose
from .divdiff import (
    divided_difference,
    divided_difference_recursive,
    top_coefficient_identity_holds,
    weight_table,
)
from .errors import (
    ArityMismatchError,
    FieldMismatchError,
    InvariantViolation,
    PolyParseError,
    PreconditionError,
)
from .fields import FieldSpec
from .ideals import (
    MultisetGrid,
    grid_from_dict,
    in_grid_ideal,
    multiset_from_list,
    multiset_to_list,
    reduce_poly,
)
from .polynomials import MultiPoly, parse_poly

SCHEMA = "nullgrid.v1"
PARALLEL_WORKERS = 4


class _InputError(ValueError):
    pass


def _parse_field(text: str) -> FieldSpec:
    if text == "rational":
        return FieldSpec.rationals()
    if text.startswith("prime:"):
        try:
            return FieldSpec.prime(int(text.split(":", 1)[1]))
        except ValueError as exc:
            raise _InputError(str(exc)) from exc
    raise _InputError(f"field must be 'prime:<p>' or 'rational', got {text!r}")


def _load_json(text_or_path: str, inline: bool):
    try:
        if inline:
            return json.loads(text_or_path)
        with open(text_or_path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise _InputError(f"cannot read {text_or_path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"invalid JSON: {exc}") from exc


def _load_grid(args) -> MultisetGrid:
    if getattr(args, "grid", None):
        return grid_from_dict(_load_json(args.grid, inline=False))
    if getattr(args, "grid_inline", None):
        return grid_from_dict(_load_json(args.grid_inline, inline=True))
    raise _InputError("a grid is required (--grid PATH or --grid-inline JSON)")


def _load_poly(args, grid: MultisetGrid) -> MultiPoly:
    return parse_poly(args.poly, grid.arity, grid.spec)


def _parse_ints(text: str, what: str):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise _InputError(f"{what} must be comma-separated integers, got {text!r}") from exc


def _fmt_tuple(values) -> str:
    return "(" + ", ".join(str(v) for v in values) + ")"


def _fmt_bool(b: bool) -> str:
    return "true" if b else "false"


# -- subcommand handlers: return (human text, json object, exit code) -----------


def _cmd_reduce(args):
    grid = _load_grid(args)
    f = _load_poly(args, grid)
    res = reduce_poly(f, grid)
    lines = [f"r: {res.remainder}"]
    lines += [f"h{i + 1}: {h}" for i, h in enumerate(res.cofactors)]
    obj = {"r": str(res.remainder), "h": [str(h) for h in res.cofactors]}
    return "\n".join(lines), obj, 0


def _cmd_member(args):
    grid = _load_grid(args)
    f = _load_poly(args, grid)
    if args.method == "both":
        by_rem = in_grid_ideal(f, grid, "remainder")
        by_pts = in_grid_ideal(f, grid, "pointwise")
        if by_rem != by_pts:
            raise InvariantViolation("membership methods disagree")
        member = by_rem
    else:
        member = in_grid_ideal(f, grid, args.method)
    text = f"member: {_fmt_bool(member)}\nmethod: {args.method}"
    return text, {"member": member, "method": args.method}, 0


def _cmd_witness(args):
    grid = _load_grid(args)
    f = _load_poly(args, grid)
    t = _parse_ints(args.t, "--t")
    method = args.method.replace("-", "_")
    workers = PARALLEL_WORKERS if args.parallel else None
    w = find_witness(f, grid, t, method=method, workers=workers)
    text = f"point: {_fmt_tuple(w.point)}\nexponent: {_fmt_tuple(w.exponent)}\nvalue: {w.value}"
    obj = {
        "point": [str(x) for x in w.point],
        "exponent": list(w.exponent),
        "value": str(w.value),
        "method": args.method,
    }
    return text, obj, 0


def _cmd_punctured(args):
    s_grid = _load_grid(args)
    if args.sub_grid:
        d_grid = grid_from_dict(_load_json(args.sub_grid, inline=False))
    elif args.sub_grid_inline:
        d_grid = grid_from_dict(_load_json(args.sub_grid_inline, inline=True))
    else:
        raise _InputError("a sub-grid is required (--sub-grid PATH or --sub-grid-inline JSON)")
    f = _load_poly(args, s_grid)
    res = punctured_decompose(f, s_grid, d_grid)
    deg_f = f.total_degree()
    text = (
        f"r: {res.remainder}\nh: {res.quotient}\n"
        f"bound: {res.degree_bound}\ndeg_f: {deg_f}"
    )
    obj = {
        "r": str(res.remainder),
        "h": str(res.quotient),
        "bound": res.degree_bound,
        "deg_f": deg_f,
    }
    return text, obj, 0


def _cmd_divdiff(args):
    grid = _load_grid(args)
    f = _load_poly(args, grid)
    if args.method == "def":
        value = divided_difference(f, grid)
    elif args.method == "rec":
        value = divided_difference_recursive(f, grid)
    else:
        value = divided_difference(f, grid)
        if value != divided_difference_recursive(f, grid):
            raise InvariantViolation("divided-difference routes disagree")
    text = f"value: {value}\nmethod: {args.method}"
    return text, {"value": str(value), "method": args.method}, 0


def _cmd_alpha(args):
    grid = _load_grid(args)
    table = weight_table(grid)
    lines = []
    weights = []
    for (point, u), w in table.sorted_items():
        lines.append(f"s={_fmt_tuple(point)} u={_fmt_tuple(u)}: {w}")
        weights.append(
            {"point": [str(x) for x in point], "exponent": list(u), "value": str(w)}
        )
    return "\n".join(lines), {"weights": weights}, 0


def _cmd_check_relation(args):
    grid = _load_grid(args)
    f = _load_poly(args, grid)
    holds = top_coefficient_identity_holds(f, grid)
    return f"holds: {_fmt_bool(holds)}", {"holds": holds}, 0 if holds else 1


def _cmd_cover_check(args):
    grid = _load_grid(args)
    if args.hyperplanes:
        rows = _load_json(args.hyperplanes, inline=False)
    elif args.hyperplanes_inline:
        rows = _load_json(args.hyperplanes_inline, inline=True)
    else:
        raise _InputError("hyperplanes are required (--hyperplanes PATH or --hyperplanes-inline JSON)")
    if not isinstance(rows, list):
        raise _InputError("hyperplanes JSON must be a list of coefficient arrays")
    planes = hyperplanes_from_lists(grid.spec, rows)
    rep = verify_cover(planes, grid)
    lines = [
        f"verdict: {rep.verdict}",
        f"k: {rep.k}",
        f"bound: {rep.bound}",
        f"meets_bound: {_fmt_bool(rep.meets_bound)}",
        f"origin_covered: {_fmt_bool(rep.origin_covered)}",
    ]
    if rep.undercovered_points:
        lines.append(
            "undercovered: " + "; ".join(_fmt_tuple(p) for p in rep.undercovered_points)
        )
    if rep.proportional_pairs:
        lines.append(
            "proportional: " + "; ".join(f"{i + 1}~{j + 1}" for i, j in rep.proportional_pairs)
        )
    obj = {
        "verdict": rep.verdict,
        "k": rep.k,
        "bound": rep.bound,
        "meets_bound": rep.meets_bound,
        "origin_covered": rep.origin_covered,
        "undercovered": [[str(x) for x in p] for p in rep.undercovered_points],
        "proportional": [[i + 1, j + 1] for i, j in rep.proportional_pairs],
    }
    return "\n".join(lines), obj, 0 if rep.verdict == "valid_cover" else 1


def _cmd_cover_extremal(args):
    grid = _load_grid(args)
    planes = extremal_cover(grid)
    lines = [f"k: {len(planes)}"] + [str(h) for h in planes]
    obj = {"k": len(planes), "hyperplanes": [hyperplane_to_list(h) for h in planes]}
    return "\n".join(lines), obj, 0


def _load_multiset(spec, text: str, flag: str):
    data = _load_json(text, inline=True)
    if not isinstance(data, list):
        raise _InputError(f"{flag} must be a JSON list of {{'value','mult'}} entries")
    return multiset_from_list(spec, data)


def _cmd_sumset(args):
    spec = _parse_field(args.field)
    a = _load_multiset(spec, args.a, "--a")
    b = _load_multiset(spec, args.b, "--b")
    s = sumset(a, b)
    return str(s), {"sumset": multiset_to_list(s), "size": s.size}, 0


def _cmd_cd_check(args):
    spec = _parse_field(args.field)
    a = _load_multiset(spec, args.a, "--a")
    b = _load_multiset(spec, args.b, "--b")
    chk = cauchy_davenport_check(a, b)
    s = sumset(a, b)
    text = (
        f"sumset: {s}\nlhs: {chk.lhs}\nrhs: {chk.rhs}\n"
        f"holds: {_fmt_bool(chk.holds)}"
    )
    obj = {
        "sumset": multiset_to_list(s),
        "lhs": chk.lhs,
        "rhs": chk.rhs,
        "holds": chk.holds,
        "deg_lhs": multiset_deg(s),
        "deg_rhs": multiset_deg(a) + multiset_deg(b),
    }
    return text, obj, 0 if chk.holds else 1


def _cmd_valueset(args):
    grid = _load_grid(args)
    f = _load_poly(args, grid)
    vs = value_set(f, grid)
    return str(vs), {"values": multiset_to_list(vs), "size": vs.size}, 0


def _cmd_sun_check(args):
    grid = _load_grid(args)
    coeffs = [part.strip() for part in args.coeffs.split(",")]
    g = parse_poly(args.g, grid.arity, grid.spec) if args.g else MultiPoly.zero(grid.arity, grid.spec)
    chk = sun_value_set_check(coeffs, args.k, g, grid)
    text = f"lhs: {chk.lhs}\nrhs: {chk.rhs}\nholds: {_fmt_bool(chk.holds)}"
    return text, {"lhs": chk.lhs, "rhs": chk.rhs, "holds": chk.holds}, 0 if chk.holds else 1


def _cmd_hopf_stiefel(args):
    beta = hopf_stiefel(args.p, args.r, args.s)
    return str(beta), {"p": args.p, "r": args.r, "s": args.s, "beta": beta}, 0


def _cmd_ek_check(args):
    a = vector_multiset_from_list(args.p, args.dim, _load_json(args.a, inline=True))
    b = vector_multiset_from_list(args.p, args.dim, _load_json(args.b, inline=True))
    chk = eliahou_kervaire_check(a, b)
    ss = vector_sumset(a, b)
    text = f"sumset: {ss}\nlhs: {chk.lhs}\nrhs: {chk.rhs}\nholds: {_fmt_bool(chk.holds)}"
    obj = {
        "sumset": vector_multiset_to_list(ss),
        "lhs": chk.lhs,
        "rhs": chk.rhs,
        "holds": chk.holds,
    }
    return text, obj, 0 if chk.holds else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullgrid",
        description="Exact vanishing-ideal computations on multiset grids.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON object")
    common.add_argument(
        "--parallel",
        action="store_true",
        help="partition exhaustive scans across worker threads (same output)",
    )
    gridded = argparse.ArgumentParser(add_help=False)
    gridded.add_argument("--grid", help="path to a grid JSON file")
    gridded.add_argument("--grid-inline", help="grid JSON given inline")

    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("reduce", parents=[common, gridded], help="remainder and cofactors modulo the grid")
    sp.add_argument("--poly", required=True)
    sp.set_defaults(handler=_cmd_reduce)

    sp = sub.add_parser("member", parents=[common, gridded], help="grid ideal membership")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--method", choices=["remainder", "pointwise", "both"], default="both")
    sp.set_defaults(handler=_cmd_member)

    sp = sub.add_parser("witness", parents=[common, gridded], help="nonvanishing witness")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--t", required=True, help="target exponent, e.g. 1,1")
    sp.add_argument(
        "--method", choices=["exhaustive", "divided-difference"], default="exhaustive"
    )
    sp.set_defaults(handler=_cmd_witness)

    sp = sub.add_parser("punctured", parents=[common, gridded], help="punctured decomposition")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--sub-grid", help="path to the sub-grid JSON file")
    sp.add_argument("--sub-grid-inline", help="sub-grid JSON given inline")
    sp.set_defaults(handler=_cmd_punctured)

    sp = sub.add_parser("divdiff", parents=[common, gridded], help="generalized divided difference")
    sp.add_argument("--poly", required=True)
    sp.add_argument("--method", choices=["def", "rec", "both"], default="both")
    sp.set_defaults(handler=_cmd_divdiff)

    sp = sub.add_parser("alpha", parents=[common, gridded], help="weight table of the grid")
    sp.set_defaults(handler=_cmd_alpha)

    sp = sub.add_parser(
        "check-relation", parents=[common, gridded], help="top-coefficient linear identity"
    )
    sp.add_argument("--poly", required=True)
    sp.set_defaults(handler=_cmd_check_relation)

    sp = sub.add_parser("cover-check", parents=[common, gridded], help="verify a hyperplane cover")
    sp.add_argument("--hyperplanes", help="path to hyperplane JSON (list of coefficient arrays)")
    sp.add_argument("--hyperplanes-inline", help="hyperplane JSON given inline")
    sp.set_defaults(handler=_cmd_cover_check)

    sp = sub.add_parser(
        "cover-extremal", parents=[common, gridded], help="the bound-matching cover"
    )
    sp.set_defaults(handler=_cmd_cover_extremal)

    sp = sub.add_parser("sumset", parents=[common], help="multiset sumset over F_p")
    sp.add_argument("--field", required=True, help="prime:<p>")
    sp.add_argument("--a", required=True, help='multiset JSON, e.g. [{"value":"0","mult":2}]')
    sp.add_argument("--b", required=True)
    sp.set_defaults(handler=_cmd_sumset)

    sp = sub.add_parser("cd-check", parents=[common], help="Cauchy-Davenport bound")
    sp.add_argument("--field", required=True, help="prime:<p>")
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(handler=_cmd_cd_check)

    sp = sub.add_parser("valueset", parents=[common, gridded], help="value-set multiset")
    sp.add_argument("--poly", required=True)
    sp.set_defaults(handler=_cmd_valueset)

    sp = sub.add_parser("sun-check", parents=[common, gridded], help="power-sum value-set bound")
    sp.add_argument("--coeffs", required=True, help="nonzero coefficients, e.g. 1,1")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--g", default="", help="perturbation polynomial with deg < k")
    sp.set_defaults(handler=_cmd_sun_check)

    sp = sub.add_parser("hopf-stiefel", parents=[common], help="Hopf-Stiefel number")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--s", type=int, required=True)
    sp.set_defaults(handler=_cmd_hopf_stiefel)

    sp = sub.add_parser("ek-check", parents=[common], help="Eliahou-Kervaire bound over F_p^d")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--a", required=True, help='vector multiset JSON, e.g. [{"value":[0,1],"mult":1}]')
    sp.add_argument("--b", required=True)
    sp.set_defaults(handler=_cmd_ek_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text, obj, code = args.handler(args)
    except PolyParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InvariantViolation as exc:
        print(f"error: invariant violation: {exc}", file=sys.stderr)
        return 1
    except (ArityMismatchError, FieldMismatchError, ValueError, TypeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        payload = {"schema": SCHEMA, "command": args.command}
        payload.update(obj)
        print(json.dumps(payload))
    else:
        print(text)
    return code
