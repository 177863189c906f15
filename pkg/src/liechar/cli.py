"""Batch command line driver.

Every subcommand prints one JSON document on standard output.  Exit code
0 means success, 1 means a verification ran and failed (the document is
the witness), 2 means the invocation or its inputs were unusable (the
diagnostic goes to standard error).

Serialization conventions: complex numbers appear as {"re", "im"}
objects, exact integers computed by the engine (dimensions,
coefficients, multiplicities, group orders, gradings) appear as decimal
strings so arbitrary precision survives the trip, and coordinate vectors
and reflection words appear as plain integer lists.  Reductions are
ordered, so identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import replace

from . import su11
from .characters import (
    TorusElement,
    dimension_of,
    evaluate,
    order_key,
    weyl_character,
)
from .discrete_series import (
    ds_character_value,
    lowest_k_type,
    make_hc_parameter,
)
from .errors import ComputationError, InputError
from .fixed_point import (
    cleared_term_identity_holds,
    compact_assembly_check,
    fixed_point_index,
)
from .roots import Weight, datum_from_text, weyl_group
from .spin import (
    dirac_induction_ktype_check,
    exterior_p,
    spin_module,
    spin_alternating_identity_holds,
    verify_spin_exterior_lemma,
)
from .verify import run_catalog_suite

ENV_PREFIX = "LIECHAR_"


def _cnum(z: complex) -> dict:
    z = complex(z)
    return {"re": z.real, "im": z.imag}


def _terms(datum, char) -> list[dict]:
    key = order_key(datum)
    items = sorted(char.items(), key=lambda kv: key(kv[0]), reverse=True)
    return [
        {"coords2": list(mu.coords2), "coefficient": str(c)} for mu, c in items
    ]


def _grid_json(grid: su11.QuadratureGrid) -> dict:
    return {
        "radial_nodes": grid.radial_nodes,
        "angular_nodes": grid.angular_nodes,
        "t_max": grid.t_max,
        "disc_r_max": grid.disc_r_max,
    }


def _parse_ints(text: str, what: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"{what} must be comma separated integers, got {text!r}")


def _parse_floats(text: str, what: str) -> tuple[float, ...]:
    try:
        return tuple(float(p) for p in text.split(","))
    except ValueError:
        raise InputError(f"{what} must be comma separated numbers, got {text!r}")


def _weight_arg(args) -> Weight:
    if getattr(args, "lam", None) is not None and getattr(args, "lam2", None) is not None:
        raise InputError("give either --lambda or --lambda2, not both")
    if getattr(args, "lam", None) is not None:
        return Weight(tuple(2 * c for c in _parse_ints(args.lam, "--lambda")))
    if getattr(args, "lam2", None) is not None:
        return Weight(_parse_ints(args.lam2, "--lambda2"))
    raise InputError("a weight is required: --lambda or --lambda2")


def _torus_arg(args, datum) -> TorusElement:
    if getattr(args, "theta", None) is None:
        raise InputError("--theta is required for this subcommand")
    angles = _parse_floats(args.theta, "--theta")
    if len(angles) != datum.rank:
        raise InputError(
            f"--theta needs {datum.rank} comma separated angles, got {len(angles)}"
        )
    return TorusElement(angles)


def _env_default(name: str, cast, fallback):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        raise InputError(f"environment variable {ENV_PREFIX + name}={raw!r} is invalid")


def _grid_arg(args, elliptic: bool = False) -> su11.QuadratureGrid | None:
    values = {
        "radial_nodes": args.radial_nodes
        if args.radial_nodes is not None
        else _env_default("RADIAL_NODES", int, None),
        "angular_nodes": args.angular_nodes
        if args.angular_nodes is not None
        else _env_default("ANGULAR_NODES", int, None),
        "t_max": args.t_max if args.t_max is not None else _env_default("T_MAX", float, None),
        "disc_r_max": args.disc_r_max
        if args.disc_r_max is not None
        else _env_default("DISC_R_MAX", float, None),
    }
    if all(v is None for v in values.values()):
        return None
    base = su11.DEFAULT_GRID
    if elliptic and values["disc_r_max"] is None:
        values["disc_r_max"] = su11.ELLIPTIC_DISC_R_MAX
    return replace(base, **{k: v for k, v in values.items() if v is not None})


def _emit(args, doc) -> None:
    print(json.dumps(doc, sort_keys=True, indent=getattr(args, "json_indent", None)))


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_datum(args) -> int:
    datum = datum_from_text(args.datum)
    doc = {
        "rank": str(datum.rank),
        "cartan": [list(row) for row in datum.cartan],
        "symmetrizer": list(datum.symmetrizer),
        "noncompact_simples": sorted(datum.noncompact),
        "positive_roots": [
            {
                "coords2": list(r.coords2),
                "grading": "noncompact" if datum.epsilon_of(r) else "compact",
            }
            for r in datum.positive_roots
        ],
        "rho2": list(datum.rho.coords2),
        "rho_c2": list(datum.rho_c.coords2),
        "rho_n2": list(datum.rho_n.coords2),
        "q": str(datum.q),
        "weyl_order": str(len(weyl_group(datum, "full"))),
        "compact_weyl_order": str(len(weyl_group(datum, "compact"))),
    }
    _emit(args, doc)
    return 0


def _cmd_weyl(args) -> int:
    datum = datum_from_text(args.datum)
    group = weyl_group(datum, args.which)
    doc = {
        "which": args.which,
        "order": str(len(group)),
        "elements": [
            {
                "word": list(w.word),
                "sign": str(w.sign),
                "matrix": [list(row) for row in w.matrix],
            }
            for w in group
        ],
    }
    _emit(args, doc)
    return 0


def _cmd_char(args) -> int:
    datum = datum_from_text(args.datum)
    lam = _weight_arg(args)
    char = weyl_character(datum, lam, which=args.which)
    doc = {
        "highest_weight2": list(lam.coords2),
        "which": args.which,
        "dimension": str(dimension_of(char)),
        "terms": _terms(datum, char),
    }
    if args.theta is not None:
        doc["value"] = _cnum(evaluate(char, _torus_arg(args, datum)))
    _emit(args, doc)
    return 0


def _cmd_dschar(args) -> int:
    datum = datum_from_text(args.datum)
    lam = _weight_arg(args)
    hcp = make_hc_parameter(datum, lam)
    t = _torus_arg(args, datum)
    doc = {
        "lambda2": list(lam.coords2),
        "q": str(hcp.q),
        "sign": str(hcp.sign),
        "value": _cnum(ds_character_value(hcp, t)),
    }
    _emit(args, doc)
    return 0


def _cmd_spin(args) -> int:
    datum = datum_from_text(args.datum)
    lam = _weight_arg(args)
    hcp = make_hc_parameter(datum, lam)
    spin = spin_module(hcp)
    ext = exterior_p(hcp)
    rep = verify_spin_exterior_lemma(hcp)
    alt = spin_alternating_identity_holds(hcp)
    doc = {
        "lambda2": list(lam.coords2),
        "q": str(hcp.q),
        "spin_even": _terms(datum, spin.even),
        "spin_odd": _terms(datum, spin.odd),
        "exterior_even": _terms(datum, ext.even),
        "exterior_odd": _terms(datum, ext.odd),
        "lemma_passed": rep.passed,
        "orientation": rep.orientation,
        "alternating_identity": alt,
    }
    _emit(args, doc)
    return 0 if rep.passed and alt else 1


def _cmd_ktype(args) -> int:
    datum = datum_from_text(args.datum)
    lam = _weight_arg(args)
    hcp = make_hc_parameter(datum, lam)
    rep = dirac_induction_ktype_check(hcp)
    doc = {
        "lambda2": list(lam.coords2),
        "lowest_k_type2": list(lowest_k_type(hcp).coords2),
        "induction": {
            "passed": rep.passed,
            "top2": list(rep.top.coords2),
            "plus": [
                {"coords2": list(mu.coords2), "multiplicity": str(m)}
                for mu, m in rep.plus_constituents
            ],
            "minus": [
                {"coords2": list(mu.coords2), "multiplicity": str(m)}
                for mu, m in rep.minus_constituents
            ],
        },
    }
    _emit(args, doc)
    return 0 if rep.passed else 1


def _cmd_fixedpoint(args) -> int:
    datum = datum_from_text(args.datum)
    lam = _weight_arg(args)
    t = _torus_arg(args, datum)
    if args.assembly:
        rep = compact_assembly_check(datum, lam, t)
        doc = {
            "bundle2": list(lam.coords2),
            "theta": list(t.angles),
            "lefschetz_sum": _cnum(rep.lefschetz_sum),
            "quotient_value": _cnum(rep.weyl_value),
            "recursion_value": _cnum(rep.freudenthal_value),
            "max_deviation": rep.max_deviation,
            "passed": rep.passed,
        }
        _emit(args, doc)
        return 0 if rep.passed else 1
    hcp = make_hc_parameter(datum, lam)
    index = fixed_point_index(hcp, t)
    char = ds_character_value(hcp, t)
    deviation = abs((-1) ** hcp.q * index - char)
    cleared = all(
        cleared_term_identity_holds(hcp, w) for w in weyl_group(datum, "compact")
    )
    passed = deviation <= 1e-9 and cleared
    doc = {
        "lambda2": list(lam.coords2),
        "theta": list(t.angles),
        "index": _cnum(index),
        "character": _cnum(char),
        "deviation": deviation,
        "cleared_identity": cleared,
        "passed": passed,
    }
    _emit(args, doc)
    return 0 if passed else 1


def _cmd_sl2(args) -> int:
    haar = args.haar_scale
    if args.action == "coeff":
        g = (
            su11.GroupElementSU11.rotation(args.rotation)
            .mul(su11.GroupElementSU11.boost(args.boost))
            .mul(su11.GroupElementSU11.rotation(args.rotation2))
        )
        grid = _grid_arg(args) or su11.DEFAULT_GRID
        closed = su11.matrix_coefficient(args.n, g)
        oracle = su11.matrix_coefficient_quadrature(args.n, g, grid)
        diff = abs(closed - oracle)
        doc = {
            "n": str(args.n),
            "element": {"a": _cnum(g.a), "b": _cnum(g.b)},
            "closed_form": _cnum(closed),
            "quadrature": _cnum(oracle),
            "difference": diff,
            "grid": _grid_json(grid),
        }
        _emit(args, doc)
        return 0 if diff <= 1e-6 else 1
    if args.action == "degree":
        grid = _grid_arg(args) or su11.DEFAULT_GRID
        rep = su11.formal_degree_report(args.n, grid, haar)
        doc = {
            "n": str(args.n),
            "value": rep["value"],
            "norm_squared": rep["norm_squared"],
            "tail_bound": rep["tail_bound"],
            "haar_scale": haar,
            "grid": _grid_json(grid),
            "diam_k": su11.DIAM_K,
        }
        _emit(args, doc)
        return 0
    if args.action == "orbital":
        if args.theta is None:
            raise InputError("sl2 orbital needs --theta")
        grid = _grid_arg(args) or su11.DEFAULT_GRID
        rep = su11.orbital_report(args.n, args.theta, grid, haar)
        hcp = make_hc_parameter(
            datum_from_text("sl2R"), Weight((2 * args.n,))
        )
        char = ds_character_value(hcp, TorusElement((args.theta,)))
        deviation = abs(rep["value"] - char)
        doc = {
            "n": str(args.n),
            "theta": args.theta,
            "value": _cnum(rep["value"]),
            "character": _cnum(char),
            "deviation": deviation,
            "tail_bound": rep["tail_bound"],
            "formal_degree": rep["formal_degree"],
            "haar_scale": haar,
            "grid": _grid_json(grid),
            "diam_k": su11.DIAM_K,
        }
        _emit(args, doc)
        return 0 if deviation <= 1e-3 else 1
    if args.action == "fgoi":
        grid = _grid_arg(args, elliptic=args.mode == "elliptic_fgoi")
        rep = su11.fgoi_envelope_check(
            args.mode, theta=args.theta, grid=grid, haar_scale=haar
        )
        doc = {
            "mode": rep.mode,
            "theta": rep.theta,
            "truncations": list(rep.truncations),
            "partial_sums": list(rep.partial_sums),
            "tail_bounds": list(rep.tail_bounds),
            "value": rep.value,
            "converged": rep.converged,
            "haar_scale": rep.haar_scale,
            "grid": _grid_json(rep.grid),
            "diam_k": rep.diam_k,
        }
        _emit(args, doc)
        return 0 if rep.converged else 1
    raise InputError(f"unknown sl2 action {args.action!r}")


def _cmd_verify(args) -> int:
    if not args.catalog:
        raise InputError("verify requires --catalog")
    rows = run_catalog_suite(full=args.full)
    failed = [r for r in rows if not r.passed]
    doc = {
        "suite": "catalog-full" if args.full else "catalog",
        "total": str(len(rows)),
        "failed": str(len(failed)),
        "passed": not failed,
        "checks": [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in rows
        ],
    }
    _emit(args, doc)
    return 0 if not failed else 1


# ---------------------------------------------------------------------------
# parser


def _add_datum_flag(p) -> None:
    p.add_argument(
        "--datum",
        required=True,
        help="catalog name (sl2R, su21, sp4R, su2, su3, so5) or "
        "'cartan:2,-1;-1,2 noncompact:2'",
    )


def _add_weight_flags(p) -> None:
    p.add_argument("--lambda", dest="lam", help="weight in undoubled coordinates")
    p.add_argument("--lambda2", dest="lam2", help="weight in doubled coordinates")


def _add_grid_flags(p) -> None:
    p.add_argument("--radial-nodes", type=int)
    p.add_argument("--angular-nodes", type=int)
    p.add_argument("--t-max", type=float)
    p.add_argument("--disc-r-max", type=float)
    p.add_argument("--haar-scale", type=float, default=1.0)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--json-indent",
        type=int,
        default=argparse.SUPPRESS,
        help="pretty print JSON with this indent",
    )
    top = argparse.ArgumentParser(
        prog="liechar",
        description="Exact character engine with numeric verification drivers",
        parents=[common],
    )
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("datum", help="describe a root datum", parents=[common])
    _add_datum_flag(p)
    p.set_defaults(func=_cmd_datum)

    p = sub.add_parser("weyl", help="list a Weyl group", parents=[common])
    _add_datum_flag(p)
    p.add_argument("--which", choices=("full", "compact"), default="full")
    p.set_defaults(func=_cmd_weyl)

    p = sub.add_parser("char", help="finite dimensional character", parents=[common])
    _add_datum_flag(p)
    _add_weight_flags(p)
    p.add_argument("--which", choices=("full", "compact"), default="full")
    p.add_argument("--theta", help="evaluate at these torus angles")
    p.set_defaults(func=_cmd_char)

    p = sub.add_parser("dschar", help="discrete series character values")
    dsub = p.add_subparsers(dest="action", required=True)
    pe = dsub.add_parser(
        "eval", help="evaluate at a regular torus element", parents=[common]
    )
    _add_datum_flag(pe)
    _add_weight_flags(pe)
    pe.add_argument("--theta", required=True)
    pe.set_defaults(func=_cmd_dschar)

    p = sub.add_parser(
        "spin", help="spin module and exterior algebra check", parents=[common]
    )
    _add_datum_flag(p)
    _add_weight_flags(p)
    p.set_defaults(func=_cmd_spin)

    p = sub.add_parser(
        "ktype", help="lowest K-type and induction check", parents=[common]
    )
    _add_datum_flag(p)
    _add_weight_flags(p)
    p.set_defaults(func=_cmd_ktype)

    p = sub.add_parser(
        "fixedpoint", help="fixed point index vs character", parents=[common]
    )
    _add_datum_flag(p)
    _add_weight_flags(p)
    p.add_argument("--theta", required=True)
    p.add_argument(
        "--assembly",
        action="store_true",
        help="treat the weight as a bundle parameter on the full flag space",
    )
    p.set_defaults(func=_cmd_fixedpoint)

    p = sub.add_parser("sl2", help="SU(1,1) numeric verifications")
    ssub = p.add_subparsers(dest="action", required=True)
    pc = ssub.add_parser(
        "coeff", help="matrix coefficient vs disc quadrature", parents=[common]
    )
    pc.add_argument("--n", type=int, required=True)
    pc.add_argument("--rotation", type=float, default=0.0)
    pc.add_argument("--boost", type=float, default=0.0)
    pc.add_argument("--rotation2", type=float, default=0.0)
    _add_grid_flags(pc)
    pc.set_defaults(func=_cmd_sl2)
    pd = ssub.add_parser(
        "degree", help="formal degree by Haar quadrature", parents=[common]
    )
    pd.add_argument("--n", type=int, required=True)
    _add_grid_flags(pd)
    pd.set_defaults(func=_cmd_sl2)
    po = ssub.add_parser(
        "orbital", help="orbital integral vs character", parents=[common]
    )
    po.add_argument("--n", type=int, required=True)
    po.add_argument("--theta", type=float, required=True)
    _add_grid_flags(po)
    po.set_defaults(func=_cmd_sl2)
    pf = ssub.add_parser(
        "fgoi", help="Gaussian envelope convergence report", parents=[common]
    )
    pf.add_argument(
        "--mode", choices=("gaussian_l1", "elliptic_fgoi"), required=True
    )
    pf.add_argument("--theta", type=float)
    _add_grid_flags(pf)
    pf.set_defaults(func=_cmd_sl2)

    p = sub.add_parser(
        "verify", help="run the built-in verification suite", parents=[common]
    )
    p.add_argument("--catalog", action="store_true", help="verify the catalog")
    p.add_argument("--full", action="store_true", help="add cross-module checks")
    p.set_defaults(func=_cmd_verify)

    return top


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    except ComputationError as exc:
        print(
            json.dumps(
                {"error": type(exc).__name__, "message": str(exc)},
                sort_keys=True,
                indent=getattr(args, "json_indent", None),
            )
        )
        return 1


if __name__ == "__main__":
    sys.exit(main())
