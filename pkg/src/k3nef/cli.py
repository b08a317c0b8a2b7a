"""Command line front end.

Exit codes: 0 success, 1 malformed invocation, 2 the requested result is
outside the range where a theorem applies (the error object names the
failed hypothesis).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import bridgeland, hilb, nested, picard, smalln
from .cone import RatCone, cone_equal
from .errors import HypothesisNotMet, K3NefError
from .exact import fmt
from .svg import emit_svg

SCHEMA_VERSION = "1"

HILB_BASIS = ["w1^[n]", "w2^[n]", "B/2"]
NESTED_BASIS = ["w1^a", "w2^a", "w1^b", "w2^b", "B^a/2", "B^b/2"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for unmet hypotheses
    def error(self, message):
        raise UsageError(f"{self.prog}: error: {message}")


def jsonable(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, RatCone):
        return obj.to_json()
    if isinstance(obj, picard.Div):
        return [fmt(obj.a), fmt(obj.b)]
    if isinstance(obj, hilb.HDiv):
        return [fmt(x) for x in obj]
    if isinstance(obj, smalln.QuadricClass):
        return {"H1": fmt(obj.p), "H2": fmt(obj.q)}
    if isinstance(obj, dict):
        return {str(getattr(k, "value", k)): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(x) for x in obj]
    if hasattr(obj, "value"):
        return obj.value
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(doc: dict) -> str:
    return json.dumps(jsonable(doc), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def _surface(args) -> picard.SurfaceK3:
    return picard.make_surface(args.case, args.k)


def _need_n(args) -> int:
    if args.n is None:
        raise UsageError(f"{args.command}: --n is required")
    return args.n


def _wall_json(dest, w: bridgeland.Wall) -> dict:
    return {
        "destabilizer": w.label,
        "destabilizer_class": dest,
        "center": w.center,
        "radius_sq": w.radius_sq,
        "degenerate": w.degenerate,
    }


def _curve_json(surface, n, c: hilb.HCurve) -> dict:
    return {
        "label": c.label,
        "kind": c.kind.value,
        "curve": c.curve,
        "genus": c.genus,
        "assumes_pencil": c.assumes_pencil,
        "dual_coordinates": list(hilb.curve_functional(surface, n, c)),
    }


def cmd_surface(args) -> dict:
    s = _surface(args)
    listed = picard.nef_cone_X_listed(s)
    try:
        nef = picard.nef_cone_X(s)
        matches = cone_equal(nef, listed)
        note = None
    except K3NefError as exc:
        nef, matches, note = None, False, str(exc)
    return {
        "gram": [list(r) for r in s.gram],
        "hyperbolic": s.is_hyperbolic,
        "eff_cone": picard.eff_cone_X(s),
        "nef_cone": nef,
        "nef_cone_listed": listed,
        "nef_matches_listed": matches,
        "note": note,
        "genus": {
            "w1": picard.genus_adjunction(s, picard.W1),
            "w2": picard.genus_adjunction(s, picard.W2),
        },
    }


def cmd_hilb_nef(args) -> dict:
    s, n = _surface(args), _need_n(args)
    cone = hilb.nef_cone_hilb(s, n)
    return {
        "basis": HILB_BASIS,
        "rays": cone,
        "method": "closed_form" if s.case is picard.Case.I else "duality",
        "threshold": hilb.THRESHOLD_TEXT[s.case],
    }


def cmd_mori(args) -> dict:
    s, n = _surface(args), _need_n(args)
    gens = hilb.mori_cone_hilb(s, n)
    return {
        "basis_dual_to": HILB_BASIS,
        "generators": [_curve_json(s, n, c) for c in gens],
        "threshold": hilb.THRESHOLD_TEXT[s.case],
    }


def cmd_lambda(args) -> dict:
    s, n = _surface(args), _need_n(args)
    cone = hilb.lambda_cone(s, n)
    out = {
        "basis": HILB_BASIS,
        "rays": cone,
        "method": "closed_form" if s.case is picard.Case.I else "duality",
        "threshold_holds": hilb.threshold_holds(s, n),
    }
    if s.case is picard.Case.I:
        closed = hilb.lambda_case1_closed_form(s.k, n)
        out["closed_form_rays"] = closed
        out["closed_form_agrees"] = cone_equal(cone, closed)
    return out


def cmd_walls(args) -> dict:
    s, n = _surface(args), _need_n(args)
    if s.case is not picard.Case.I:
        raise HypothesisNotMet("the wall computation is only available in case I", "case I")
    check = bridgeland.gieseker_candidates(s.k, n)
    if args.svg:
        emit_svg(
            [w for _, w in check.candidates],
            args.svg,
            vertical=check.vertical,
            title=f"walls for v = (1, 0, -{n}), case I, k = {s.k}",
        )
    if not check.certified:
        raise bridgeland.BelowThreshold(
            f"radius^2 = {check.wall.radius_sq} < varrho = {check.varrho}; wall not certified (n < 9k/8)",
            "radius^2 >= varrho (n >= 9k/8)",
            check,
        )
    return {
        "slice": {"H": check.slice.h, "D": check.slice.d},
        "vertical_wall": check.vertical,
        "candidates": [_wall_json(d, w) for d, w in check.candidates],
        "chosen": _wall_json(check.destabilizer, check.wall),
        "varrho": check.varrho,
        "certified": check.certified,
        "bm_divisor": bridgeland.bm_nef_divisor(check.wall.center, check.slice, s),
        "bm_divisor_basis": HILB_BASIS,
    }


def cmd_bounds(args) -> dict:
    s, n = _surface(args), _need_n(args)
    if s.case is not picard.Case.I:
        raise HypothesisNotMet("small-n bounds are only available in case I", "case I")
    b = smalln.sandwich_bounds(s.k, n)
    kn = smalln.knutsen_check(s.k, n, args.search_bound)
    improved = None
    if s.k >= 2 * n and kn.ok:
        improved = smalln.improved_bound_k_ge_2n(s.k, n)
    return {
        "basis": HILB_BASIS,
        "n_prime": b.n_prime,
        "j": b.j,
        "outer": b.outer,
        "inner": b.inner,
        "inner_in_outer": smalln.sandwich_is_consistent(b),
        "improved_inner": improved,
        "knutsen": {"ok": kn.ok, "witness": kn.witness, "reason": kn.reason, "search_bound": args.search_bound},
    }


def cmd_nested(args) -> dict:
    s, n = _surface(args), _need_n(args)
    if s.case is not picard.Case.I:
        raise HypothesisNotMet("the nested Hilbert scheme is only treated in case I", "case I")
    gens = nested.nested_nef_generators(s.k, n)
    report = nested.nested_verify(s.k, n)
    return {
        "basis": NESTED_BASIS,
        "generators": [{"name": name, "coords": list(d.coords)} for name, d in gens],
        "pairings": report.pairings,
        "zero_witnesses": report.zero_witnesses,
        "failures": list(report.failures),
        "ok": report.ok,
        "printed_table_inconsistencies": [[c.value, col] for c, col in report.inconsistent_cells],
    }


def cmd_special(args) -> dict:
    if (args.case, args.k, args.n) not in (("I", None, None), ("I", 2, None), ("I", 2, 2), ("I", None, 2)):
        raise HypothesisNotMet("this computation is for case I with n = k = 2", "case I, n = k = 2")
    s = picard.make_surface("I", 2)
    cone = smalln.nef_cone_n2k2()
    outer = smalln.sandwich_bounds(2, 2).outer
    third = hilb.HDiv(1, 1, -1)
    res = smalln.qprime_restrictions()
    ruled = smalln.ruled_surface_pairings()
    samples = [Fraction(1, 10), Fraction(1), Fraction(19, 10), Fraction(2), Fraction(21, 10)]
    gamma = []
    for t in samples:
        cls, ample = smalln.gamma_t_on_qprime(t, smalln.BSign.COROLLARY)
        gamma.append({"t": t, "restriction": cls, "ample": ample})
    return {
        "basis": HILB_BASIS,
        "rays": cone,
        "equals_sandwich_outer": cone_equal(cone, outer),
        "orthogonal_curve": {
            "label": smalln.n2k2_orthogonal_curve().label,
            "pairing": hilb.pair_hilb(s, 2, third, smalln.n2k2_orthogonal_curve()),
        },
        "pairing_with_C0": hilb.pair_hilb(s, 2, third, hilb.C0),
        "brill_noether_3_1_2": smalln.brill_noether(3, 1, 2),
        "qprime": {
            "w1^[2]": res.w1,
            "w2^[2]": res.w2,
            "B_from_degrees": res.b_lemma,
            "B_as_stated": res.b_corollary,
            "b_sign_discrepancy": res.b_sign_discrepancy,
        },
        "gamma_t_on_qprime": gamma,
        "ruled_surface": {
            "F.B": ruled.fiber_dot_b,
            "w1^[2].F": ruled.w1_dot_fiber,
            "w2^[2].F": ruled.w2_dot_fiber,
            "mu1": ruled.mu1,
            "nef_generators": list(ruled.nef_generators),
        },
    }


COMMANDS = {
    "surface": cmd_surface,
    "hilb-nef": cmd_hilb_nef,
    "mori": cmd_mori,
    "lambda": cmd_lambda,
    "walls": cmd_walls,
    "bounds": cmd_bounds,
    "nested": cmd_nested,
    "special-n2k2": cmd_special,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--case", choices=["I", "II", "III"], default="I")
    common.add_argument("--format", choices=["text", "json"], default="text")

    parser = _Parser(prog="k3nef", description="Nef cones of Hilbert schemes of points on rank 2 K3 surfaces.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name, parents=[common])
        if name == "special-n2k2":
            p.add_argument("--k", type=int, default=None)
            p.add_argument("--n", type=int, default=None)
            continue
        p.add_argument("--k", type=int, required=True)
        if name != "surface":
            p.add_argument("--n", type=int, default=None, required=True)
        else:
            p.add_argument("--n", type=int, default=None)
        if name == "walls":
            p.add_argument("--svg", metavar="PATH", default=None)
        if name == "bounds":
            p.add_argument("--search-bound", type=int, default=10)
    return parser


def _request(args) -> dict:
    req = {"command": args.command, "case": args.case, "k": args.k, "n": args.n}
    if args.command == "walls":
        req["svg"] = args.svg
    if args.command == "bounds":
        req["search_bound"] = args.search_bound
    return req


def _text(value: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_inline(v)}")
    else:
        lines.append(f"{pad}{_inline(value)}")
    return lines


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or _flat(x) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    request = _request(args)
    try:
        payload = COMMANDS[args.command](args)
    except UsageError as exc:
        stderr.write(f"{exc}\n")
        return 1
    except K3NefError as exc:
        error = {
            "type": type(exc).__name__,
            "hypothesis": getattr(exc, "hypothesis", None),
            "message": str(exc),
        }
        doc = {"schema_version": SCHEMA_VERSION, "request": request, "error": error}
        if args.format == "json":
            stdout.write(dumps(doc))
        else:
            stderr.write(f"error: {exc}\n")
        return 2
    except OSError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    doc = {"schema_version": SCHEMA_VERSION, "request": request, "payload": payload}
    if args.format == "json":
        stdout.write(dumps(doc))
    else:
        stdout.write("\n".join(_text(jsonable(doc))) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
