"""Command line front end.

Every subcommand reads exact data (integers and p/q strings), runs one
of the library routines and prints either a human summary or canonical
JSON (--json). Exit codes: 0 success, 1 failed verdict or refused
mathematical check, 2 malformed input, 3 search cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from datetime import datetime, timezone
from fractions import Fraction

from .errors import InputError, MathCheckError, SearchCapExceeded
from .fujiki import FujikiSetup, double_factorial, top_intersection
from .hilb2 import (
    divisibility_type,
    econ_check,
    governing_divisibility,
    m0_s0,
    unicita_report,
)
from .jsonio import canonical_json, encode, load_json_file, to_rational
from .lattice import IntLattice, lattice_from_json, latvec_from_json, pair
from .mukai import (
    MukaiNumerics,
    mukai_from_json,
    mukai_pairing,
    mukai_square,
    numerics,
)
from .nl import (
    DEFAULT_SEARCH_CAP,
    buonacompt_bound,
    buonacompt_min_d,
    nef_isotropic_classes,
    nl_hk_admissible,
    nl_k3_admissible,
    rigsuk_bound,
    rigsuk_min_d0,
)
from .pipelines import load_scenario, run_scenario
from .reduction import ModificationStep, bezout_r0_d0, reduction_trace, rigid_vector
from .verify import verify_all
from .walls import (
    EllipticNS,
    elliptic_from_json,
    enumerate_wall_classes,
    has_minus_two_class,
    is_suitable,
    min_negative_norm,
    suitability_for,
    wall_ray,
)


def _timestamp() -> str:
    return datetime.now(timezone.utc).strftime("%Y-%m-%dT%H:%M:%SZ")


def _scalar(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    if isinstance(value, (list, dict)) and not value:
        return "[]" if isinstance(value, list) else "{}"
    return str(value)


def _human_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}{key}:")
                lines.extend(_human_lines(item, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_scalar(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and item:
                lines.append(f"{pad}-")
                lines.extend(_human_lines(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(item)}")
    else:
        lines.append(f"{pad}{_scalar(value)}")
    return lines


def _emit(args, payload: dict) -> None:
    if args.json:
        if not args.no_timestamp:
            payload = dict(payload)
            payload["generated_at"] = _timestamp()
        sys.stdout.write(canonical_json(payload))
    else:
        for line in _human_lines(encode(payload)):
            print(line)


def _ns_lattice(data) -> IntLattice:
    """Accept either a gram-matrix object or an {e, d} elliptic shorthand."""
    if isinstance(data, dict) and "gram" in data:
        return lattice_from_json(data)
    return elliptic_from_json(data).lattice


def _fiber_vec(args, ns: IntLattice):
    if getattr(args, "f", None) is not None:
        return latvec_from_json(load_json_file(args.f), ns.rank)
    if ns.rank != 2:
        raise InputError("--f is required unless the lattice has rank 2")
    return latvec_from_json([0, 1], 2)


def cmd_fujiki(args) -> int:
    setup_data = load_json_file(args.setup)
    if not isinstance(setup_data, dict):
        raise InputError("setup must be a JSON object")
    if "gram" not in setup_data:
        raise InputError("setup needs a 'gram' pairing matrix")
    pairing = lattice_from_json({"gram": setup_data["gram"]})
    if "kind" in setup_data:
        setup = FujikiSetup.for_kind(setup_data["kind"], pairing, setup_data.get("n"))
    else:
        if "n" not in setup_data or "c_x" not in setup_data:
            raise InputError("setup needs 'kind' or both 'n' and 'c_x'")
        setup = FujikiSetup(
            n=int(setup_data["n"]),
            c_x=to_rational(setup_data["c_x"]),
            pairing=pairing,
        )
    classes_data = load_json_file(args.classes)
    if not isinstance(classes_data, list):
        raise InputError("classes must be a JSON array of vectors")
    classes = [latvec_from_json(c, pairing.rank) for c in classes_data]
    value = top_intersection(setup, classes)
    _emit(
        args,
        {
            "value": value,
            "matchings": double_factorial(2 * setup.n - 1),
            "n": setup.n,
            "c_x": setup.c_x,
        },
    )
    return 0


def cmd_mukai(args) -> int:
    ns = _ns_lattice(load_json_file(args.ns))
    v = mukai_from_json(load_json_file(args.v), ns.rank)
    if args.w is not None:
        w = mukai_from_json(load_json_file(args.w), ns.rank)
        _emit(
            args,
            {
                "pairing": mukai_pairing(ns, v, w),
                "v_square": mukai_square(ns, v),
                "w_square": mukai_square(ns, w),
            },
        )
        return 0
    num = numerics(ns, v)
    _emit(
        args,
        {
            "v_square": num.v_square,
            "n": num.n_v,
            "a": num.a_v,
            "delta": num.delta,
        },
    )
    return 0


def cmd_walls(args) -> int:
    ns = EllipticNS(args.e, args.d)
    a = to_rational(args.a)
    found = enumerate_wall_classes(ns, a)
    payload = {
        "e": ns.e,
        "d": ns.d,
        "a": a,
        "count": len(found),
        "walls": [
            {**w.to_json_dict(), "ray": wall_ray(ns, w).to_json_dict()} for w in found
        ],
        "min_negative_norm": min_negative_norm(ns) if ns.e >= 0 else None,
        "has_minus_two_class": has_minus_two_class(ns) if ns.e >= 0 else None,
    }
    code = 0
    if args.suitability:
        if args.h is not None:
            h = latvec_from_json(load_json_file(args.h), 2)
            rep = suitability_for(ns, a, h)
        else:
            rep = is_suitable(ns, a)
        payload["suitability"] = rep.to_json_dict()
        if not rep.suitable:
            code = 1
    _emit(args, payload)
    return code


def cmd_reduce(args) -> int:
    ns = _ns_lattice(load_json_file(args.ns))
    v = mukai_from_json(load_json_file(args.v), ns.rank)
    f = _fiber_vec(args, ns)
    steps_data = load_json_file(args.steps)
    if not isinstance(steps_data, list):
        raise InputError("steps must be a JSON array")
    steps = []
    for item in steps_data:
        if not isinstance(item, dict) or "r_b" not in item or "deg_b" not in item:
            raise InputError("each step needs keys r_b and deg_b")
        steps.append(ModificationStep(int(item["r_b"]), int(item["deg_b"])))
    trace = reduction_trace(ns, v, steps, f)
    _emit(args, trace.to_json_dict())
    return 0


def cmd_rigid(args) -> int:
    ns = _ns_lattice(load_json_file(args.ns))
    v = mukai_from_json(load_json_file(args.v), ns.rank)
    f = _fiber_vec(args, ns)
    w = rigid_vector(ns, v, f)
    k_frac = pair(ns, v.l, f)
    k = int(k_frac)
    r0, d0 = bezout_r0_d0(v.r, k)
    vsq = mukai_square(ns, v)
    _emit(
        args,
        {
            "w": w.to_json_dict(),
            "w_square": mukai_square(ns, w),
            "v_square": vsq,
            "n": vsq // 2 + 1,
            "k": k,
            "r0": r0,
            "d0": d0,
        },
    )
    return 0


def cmd_nl(args) -> int:
    if args.kind == "k3":
        if args.r0 is None or args.vsq is None:
            raise InputError("--kind k3 needs --r0 and --vsq")
        num = MukaiNumerics.from_square(args.r0, args.vsq)
        rep = nl_k3_admissible(args.e, args.d, num)
    else:
        if args.i is None:
            raise InputError("--kind hk needs --i")
        rep = nl_hk_admissible(args.e, args.d, args.i)
    payload = rep.to_json_dict()
    if args.e > 0 and args.e % 2 == 0:
        payload["isotropic"] = nef_isotropic_classes(args.e, args.d).to_json_dict()
    _emit(args, payload)
    return 0 if rep.ok else 1


def cmd_nl_search(args) -> int:
    i = governing_divisibility(args.r0)
    min_d = buonacompt_min_d(args.r0, args.e, i, cap=args.cap)
    m0, s0 = m0_s0(args.r0, args.e)
    _emit(
        args,
        {
            "r0": args.r0,
            "e": args.e,
            "i": i,
            "min_d": min_d,
            "min_d_bound": buonacompt_bound(args.r0, args.e),
            "m0": m0,
            "s0": s0,
            "min_d0": rigsuk_min_d0(m0, args.r0),
            "min_d0_bound": rigsuk_bound(m0, args.r0),
        },
    )
    return 0


def cmd_unicita(args) -> int:
    report = unicita_report(args.i, args.r0, args.e, cap=args.cap)
    _emit(args, report.to_json_dict())
    return 0 if report.verdict else 1


def _run_scenario_command(args, expected_pipeline: str) -> int:
    sc = load_scenario(args.scenario)
    if sc.pipeline != expected_pipeline:
        raise InputError(
            f"scenario pipeline is {sc.pipeline!r}, expected {expected_pipeline!r}"
        )
    report = run_scenario(sc)
    _emit(args, report.to_json_dict())
    return 0 if report.verdict else 1


def cmd_vbk3ell(args) -> int:
    return _run_scenario_command(args, "vbk3ell")


def cmd_casoprim(args) -> int:
    return _run_scenario_command(args, "casoprim")


def cmd_sweep_econ(args) -> int:
    if args.r0max < 1 or args.emax < 1:
        raise InputError("--r0max and --emax must be positive")
    rows = []
    cases = 0
    for r0 in range(1, args.r0max + 1):
        i = governing_divisibility(r0)
        hits = []
        for e in range(1, args.emax + 1):
            if not (divisibility_type(e, i) and econ_check(r0, e)):
                continue
            m0, s0 = m0_s0(r0, e)  # integrality asserted inside
            hits.append({"e": e, "m0": m0, "s0": s0})
            cases += 1
        rows.append({"r0": r0, "i": i, "count": len(hits), "first": hits[:3]})
    _emit(args, {"r0max": args.r0max, "emax": args.emax, "cases": cases, "rows": rows})
    return 0


def cmd_verify_all(args) -> int:
    summary = verify_all(args.filter)
    if args.json:
        _emit(args, summary.to_json_dict())
    else:
        for suite in summary.suites:
            mark = "ok" if suite.verdict else "FAIL"
            print(f"[{mark}] {suite.theorem} ({len(suite.checks)} checks)")
            for c in suite.checks:
                if not c.passed:
                    print(f"       failed: {c.name} {c.data}")
        print(f"{'all suites passed' if summary.ok else 'FAILURES: ' + ', '.join(summary.failures())}")
    return 0 if summary.ok else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print canonical JSON")
    common.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the generated_at field from JSON output",
    )
    common.add_argument(
        "--cap",
        type=int,
        default=DEFAULT_SEARCH_CAP,
        help="upper bound for parameter searches",
    )

    parser = argparse.ArgumentParser(
        prog="hkmod",
        description="Exact lattice computations for moduli of sheaves on "
        "K3 surfaces and their Hilbert schemes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fujiki", parents=[common], help="top intersection numbers")
    p.add_argument("--setup", required=True, help="JSON file with n, c_x or kind, gram")
    p.add_argument("--classes", required=True, help="JSON array of 2n classes")
    p.set_defaults(func=cmd_fujiki)

    p = sub.add_parser("mukai", parents=[common], help="pairings and derived numerics")
    p.add_argument("--ns", required=True, help="JSON lattice ({e,d} or {gram})")
    p.add_argument("--v", required=True, help="JSON Mukai vector {r,l,s}")
    p.add_argument("--w", help="optional second vector: print the pairing")
    p.set_defaults(func=cmd_mukai)

    p = sub.add_parser("walls", parents=[common], help="wall classes of a level")
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", required=True, help="level (integer or p/q)")
    p.add_argument(
        "--suitability",
        action="store_true",
        help="also test the polarization; exit 1 when unsuitable",
    )
    p.add_argument("--h", help="JSON polarization vector for --suitability")
    p.set_defaults(func=cmd_walls)

    p = sub.add_parser("reduce", parents=[common], help="run a modification trace")
    p.add_argument("--ns", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--steps", required=True, help="JSON array of {r_b, deg_b}")
    p.add_argument("--f", help="JSON fiber class (default (0,1) in rank 2)")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("rigid", parents=[common], help="rigid vector via Bezout twist")
    p.add_argument("--ns", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--f", help="JSON fiber class (default (0,1) in rank 2)")
    p.set_defaults(func=cmd_rigid)

    p = sub.add_parser("nl", parents=[common], help="admissibility of a fiber degree")
    p.add_argument("--kind", choices=("k3", "hk"), required=True)
    p.add_argument("--e", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, help="ambient divisibility (hk)")
    p.add_argument("--r0", type=int, help="Mukai rank (k3)")
    p.add_argument("--vsq", type=int, help="Mukai square (k3)")
    p.set_defaults(func=cmd_nl)

    p = sub.add_parser(
        "nl-search", parents=[common], help="minimal admissible parameters"
    )
    p.add_argument("--r0", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_nl_search)

    p = sub.add_parser("unicita", parents=[common], help="full admissibility report")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--r0", type=int, required=True)
    p.add_argument("--e", type=int, required=True)
    p.set_defaults(func=cmd_unicita)

    p = sub.add_parser("vbk3ell", parents=[common], help="run a vbk3ell scenario")
    p.add_argument("--scenario", required=True, help="JSON scenario file")
    p.set_defaults(func=cmd_vbk3ell)

    p = sub.add_parser("casoprim", parents=[common], help="run a casoprim scenario")
    p.add_argument("--scenario", required=True, help="JSON scenario file")
    p.set_defaults(func=cmd_casoprim)

    p = sub.add_parser(
        "sweep-econ", parents=[common], help="sweep the slope congruence"
    )
    p.add_argument("--r0max", type=int, required=True)
    p.add_argument("--emax", type=int, required=True)
    p.set_defaults(func=cmd_sweep_econ)

    p = sub.add_parser("verify-all", parents=[common], help="run the self-check suites")
    p.add_argument("--filter", help="only suites whose name contains this string")
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SearchCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except MathCheckError as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
