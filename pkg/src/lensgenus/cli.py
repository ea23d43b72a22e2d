"""Command-line front end: one subcommand per certifying operation.

Every number in the output is an exact rational (``a/b`` in tables,
``{"num": a, "den": b}`` in JSON); nothing is ever rendered as a float.
Exit codes: 0 success, 1 invalid input, 2 valid input but the
certification condition is not met, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from math import gcd
from typing import Any, Callable, Iterable

from . import cables, complement, order2, stabilization, twistfamily
from .errors import ConsistencyError
from .exactarith import peripheral_kernel
from .lens import H1Class, LensSpace, simple_knot_in_class

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_UNCERTIFIED = 2
EXIT_INCONSISTENT = 3


# ---------------------------------------------------------------------------
# report plumbing


def rat(x: Fraction | int) -> dict[str, int]:
    f = Fraction(x)
    return {"num": f.numerator, "den": f.denominator}


def canonical_json(obj: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, no floats."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def envelope(
    command: str,
    inputs: dict[str, Any],
    results: dict[str, Any],
    certifications: dict[str, dict[str, Any]] | None = None,
    warnings: Iterable[str] = (),
) -> dict[str, Any]:
    return {
        "command": command,
        "inputs": inputs,
        "results": results,
        "certifications": certifications or {},
        "warnings": list(warnings),
    }


def _fmt(value: Any) -> str:
    if isinstance(value, dict) and set(value) == {"num", "den"}:
        f = Fraction(value["num"], value["den"])
        return str(f)
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, list):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    return str(value)


def print_report(env: dict[str, Any], as_json: bool) -> None:
    if as_json:
        sys.stdout.write(canonical_json(env))
        return
    print(f"command: {env['command']}")
    print("inputs:")
    for k, v in env["inputs"].items():
        print(f"  {k} = {_fmt(v)}")
    print("results:")
    for k, v in env["results"].items():
        print(f"  {k} = {_fmt(v)}")
    if env["certifications"]:
        print("certifications:")
        for k, v in env["certifications"].items():
            mark = "CERTIFIED" if v["holds"] else "not certified"
            print(f"  {k}: {mark} ({v['criterion']})")
    if env["warnings"]:
        print("warnings:")
        for w in env["warnings"]:
            print(f"  - {w}")


# ---------------------------------------------------------------------------
# subcommands


def cmd_simple_knot(args: argparse.Namespace) -> tuple[dict, int]:
    space = LensSpace(args.p, args.q)
    knot = simple_knot_in_class(space, H1Class(args.h1_class, space))
    env = envelope(
        "simple-knot",
        {"p": args.p, "q": args.q, "class": args.h1_class},
        {
            "parameter_a": knot.a,
            "is_unknot": knot.a == 0,
        },
    )
    return env, EXIT_OK


def cmd_theta(args: argparse.Namespace) -> tuple[dict, int]:
    space = LensSpace(args.p, args.q)
    c = args.h1_class
    if not 0 <= c < space.p:
        raise ValueError(f"class {c} outside [0, {space.p - 1}]")
    inputs = {"p": args.p, "q": args.q, "class": c}
    if c == 0:
        env = envelope(
            "theta",
            inputs,
            {"theta": rat(0), "chi_minus": rat(0), "label": "EXACT"},
            {
                "exact": {
                    "holds": True,
                    "criterion": "class 0 is the unknot, which bounds a disk",
                }
            },
        )
        return env, EXIT_OK
    if space.p - space.q * c < 1:
        raise ValueError(
            f"no torus-knot route for class {c}: cone order p - qc = "
            f"{space.p - space.q * c} < 1"
        )
    report = complement.torus_knot_theta(space, c)
    is_exact = c * space.q < space.p + space.q
    env = envelope(
        "theta",
        inputs,
        {
            "theta": rat(report.theta),
            "chi_minus": rat(report.chi_minus),
            "mu_pairing": report.mu_pairing,
            "fibered": report.fibered,
            "label": "EXACT" if is_exact else "UPPER-BOUND",
        },
        {
            "exact": {
                "holds": is_exact,
                "criterion": "simple knot in this class is the (1,k)-torus knot "
                "(holds iff k*q < p + q)",
            }
        },
    )
    return env, EXIT_OK if is_exact else EXIT_UNCERTIFIED


def cmd_cable(args: argparse.Namespace) -> tuple[dict, int]:
    space = LensSpace(args.p, args.q)
    v = cables.cable_verdict(cables.CableParams(space, args.m, args.n))
    env = envelope(
        "cable",
        {"p": args.p, "q": args.q, "m": args.m, "n": args.n},
        {
            "norm_torus_side": rat(v.norm_torus_side),
            "norm_cable_side": rat(v.norm_cable_side),
            "norms_equal": v.norms_equal,
            "homology_class": v.homology_class,
            "theta": rat(v.theta),
            "threshold_met": v.threshold_met,
        },
        {
            "minimizer": {
                "holds": v.certified_minimizer,
                "criterion": "p >= q*m^2*n; above this threshold the cable "
                "norm matches the simple-knot norm",
            },
            "nonsimple": {
                "holds": v.certified_nonsimple,
                "criterion": "threshold holds and q != m, so the cable complement "
                "keeps an essential torus; for q = m the verdict is unknown, "
                "never 'simple'",
            },
        },
        v.warnings,
    )
    return env, EXIT_OK if v.certified_minimizer else EXIT_UNCERTIFIED


def cmd_iterated(args: argparse.Namespace) -> tuple[dict, int]:
    space = LensSpace(args.p, args.q)
    ms = tuple(int(s) for s in args.ms.split(","))
    v = cables.iterated_verdict(cables.IteratedCableParams(space, ms))
    env = envelope(
        "iterated",
        {"p": args.p, "q": args.q, "ms": list(ms)},
        {
            "norm_iterated": rat(v.norm_iterated),
            "norm_torus_side": rat(v.norm_torus_side),
            "norms_equal": v.norms_equal,
            "homology_class": v.homology_class,
            "theta": rat(v.theta),
            "threshold_met": v.threshold_met,
        },
        {
            "minimizer": {
                "holds": v.certified_minimizer,
                "criterion": "p >= q*m1^2*...*m_(k-1)^2*m_k and the iterated "
                "norm equals the torus-knot norm",
            }
        },
        v.warnings,
    )
    return env, EXIT_OK if v.certified_minimizer else EXIT_UNCERTIFIED


def cmd_stab(args: argparse.Namespace) -> tuple[dict, int]:
    space = LensSpace(args.p, args.q)
    fam = stabilization.StabFamily(space, args.k)
    norms = stabilization.stab_norms(fam)
    v = stabilization.stab_verdict(fam)
    env = envelope(
        "stab",
        {"p": args.p, "q": args.q, "k": args.k},
        {
            "coefficients": list(stabilization.stab_coefficients(fam)),
            "chi_surface": norms.chi_Fk,
            "chi_capped": norms.chi_capped,
            "torus_knot_chi": rat(v.torus_chi),
            "homology_class": v.homology_class,
            "theta": rat(v.theta),
        },
        {
            "minimizer": {
                "holds": v.certified_minimizer,
                "criterion": "capped surface complexity equals the "
                "(1,k+4)-torus-knot norm, which a simple knot realizes",
            }
        },
    )
    return env, EXIT_OK


def cmd_order2(args: argparse.Namespace) -> tuple[dict, int]:
    if args.k < 1:
        raise ValueError("k must be >= 1")
    space = LensSpace(2 * args.k, 1)
    rep = order2.uniqueness_check(space)
    env = envelope(
        "order2",
        {"k": args.k, "p": space.p, "q": 1},
        {
            "nonorientable_genus": rep.nonorientable_genus,
            "theta": rat(rep.theta),
            "order2_class": args.k,
        },
        {
            "unique_minimizer": {
                "holds": rep.unique_minimizer_guaranteed,
                "criterion": "minimal nonorientable genus at most 3; "
                + rep.criterion,
            }
        },
    )
    return env, EXIT_OK if rep.unique_minimizer_guaranteed else EXIT_UNCERTIFIED


def cmd_twist(args: argparse.Namespace) -> tuple[dict, int]:
    t = twistfamily.TwistParams(args.a, args.b, args.n)
    fl = twistfamily.build_twist_diagram(t)
    group = twistfamily.h1_of_filling(fl)
    cls = twistfamily.unfilled_class(fl, "gamma")
    spec, line = twistfamily.filling_spec_export(t)
    expected_order = 2 * t.k
    if group.order() != expected_order or cls % expected_order not in (
        t.k % expected_order,
        (-t.k) % expected_order,
    ):
        raise ConsistencyError(
            f"twist diagram homology check failed: H1 = {group}, class {cls}, "
            f"expected Z/{expected_order} with class +-{t.k}"
        )
    if args.sidecar and not args.export:
        raise ValueError("--sidecar requires --export")
    if args.export:
        twistfamily.export_filling_specs([t], args.export, args.sidecar)
    env = envelope(
        "twist",
        {"a": args.a, "b": args.b, "n": args.n},
        {
            "k": t.k,
            "h1": str(group),
            "h1_order": group.order(),
            "gamma_class": cls,
            "framings": [
                "inf" if c.framing is None else _fmt(rat(c.framing))
                for c in fl.components
            ],
            "spec": line,
        },
        {
            "homology": {
                "holds": True,
                "criterion": "filling the five framed components gives the "
                "lens space of order 2k with the unfilled knot in class k",
            }
        },
    )
    return env, EXIT_OK


def cmd_boundary_kernel(args: argparse.Namespace) -> tuple[dict, int]:
    space = LensSpace(args.p, args.q)
    data = complement.WindingData(space, args.w)
    closed = complement.boundary_kernel(data)
    results: dict[str, Any] = {
        "mu_coeff": closed.mu_coeff,
        "lambda_coeff": closed.lambda_coeff,
    }
    certs: dict[str, dict[str, Any]] = {}
    code = EXIT_OK
    if args.oracle:
        mat = complement.presentation_matrix(data)
        oracle = peripheral_kernel(mat, 0, 1)
        agree = oracle == (closed.mu_coeff, closed.lambda_coeff)
        results["oracle_mu_coeff"] = oracle[0]
        results["oracle_lambda_coeff"] = oracle[1]
        results["presentation_rows"] = mat.to_lists()
        certs["oracle_agreement"] = {
            "holds": agree,
            "criterion": "closed form equals the Smith-normal-form kernel of "
            "the presentation matrix",
        }
        if not agree:
            code = EXIT_INCONSISTENT
    env = envelope(
        "boundary-kernel",
        {"p": args.p, "q": args.q, "w": args.w},
        results,
        certs,
    )
    return env, code


# ---------------------------------------------------------------------------
# sweeps

# Workers take plain tuples and return JSON-ready dicts so grids can be
# evaluated in worker processes and merged deterministically.


def _sweep_cable_point(point: tuple[int, int, int, int]) -> dict[str, Any] | None:
    p, q, m, n = point
    if p <= q or gcd(p, q) != 1 or p - q * m < 1 or p - q * m * n < 1:
        return None
    v = cables.cable_verdict(cables.CableParams(LensSpace(p, q), m, n))
    return {
        "params": [p, q, m, n],
        "threshold_met": v.threshold_met,
        "norms_equal": v.norms_equal,
        "norm_torus_side": rat(v.norm_torus_side),
        "norm_cable_side": rat(v.norm_cable_side),
        "degenerate": bool(v.warnings),
    }


def _sweep_boundary_kernel_point(point: tuple[int, int, int]) -> dict[str, Any] | None:
    p, q, w = point
    if p <= q or gcd(p, q) != 1:
        return None
    data = complement.WindingData(LensSpace(p, q), w)
    closed = complement.boundary_kernel(data)
    oracle = peripheral_kernel(complement.presentation_matrix(data), 0, 1)
    return {
        "params": [p, q, w],
        "agree": oracle == (closed.mu_coeff, closed.lambda_coeff),
    }


def _sweep_stab_point(point: tuple[int, int, int]) -> dict[str, Any] | None:
    p, q, k = point
    if p <= q or gcd(p, q) != 1 or p < 2 * q * (k + 4):
        return None
    v = stabilization.stab_verdict(stabilization.StabFamily(LensSpace(p, q), k))
    return {"params": [p, q, k], "certified": v.certified_minimizer}


def _sweep_twist_point(point: tuple[int, int, int]) -> dict[str, Any] | None:
    a, b, n = point
    if n == 0:
        return None
    t = twistfamily.TwistParams(a, b, n)
    fl = twistfamily.build_twist_diagram(t)
    group = twistfamily.h1_of_filling(fl)
    cls = twistfamily.unfilled_class(fl, "gamma")
    ok = group.order() == 2 * t.k and cls % (2 * t.k) in (t.k, (-t.k) % (2 * t.k))
    return {"params": [a, b, n], "h1_order": group.order(), "gamma_class": cls, "ok": ok}


def _sweep_iterated_point(point: tuple[int, ...]) -> dict[str, Any] | None:
    p, q = point[0], point[1]
    ms = point[2:]
    if p <= q or gcd(p, q) != 1:
        return None
    w = 1
    for m in ms:
        w *= m
    if w >= p or p - q * ms[0] < 1 or p - q * w < 1:
        return None
    v = cables.iterated_verdict(cables.IteratedCableParams(LensSpace(p, q), ms))
    return {
        "params": [p, q],
        "threshold_met": v.threshold_met,
        "norms_equal": v.norms_equal,
    }


def _parse_range(text: str | None, flag: str) -> range:
    if text is None:
        raise ValueError(f"sweep requires a --{flag} range (lo:hi)")
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"range must look like lo:hi, got {text!r}")
    return range(int(lo), int(hi) + 1)


def _run_points(
    worker: Callable[[tuple], dict | None],
    points: list[tuple],
    jobs: int,
) -> list[dict]:
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            raw = list(pool.map(worker, points, chunksize=256))
    else:
        raw = [worker(pt) for pt in points]
    kept = [r for r in raw if r is not None]
    kept.sort(key=lambda r: r["params"])
    return kept


def cmd_sweep(args: argparse.Namespace) -> tuple[dict, int]:
    jobs = args.jobs
    target = args.target
    code = EXIT_OK
    mismatches: list[dict] = []

    if target == "cable":
        points = [
            (p, q, m, n)
            for p in _parse_range(args.p, "p")
            for q in _parse_range(args.q, "q")
            for m in _parse_range(args.m, "m")
            for n in _parse_range(args.n, "n")
        ]
        records = _run_points(_sweep_cable_point, points, jobs)
        above = [r for r in records if r["threshold_met"]]
        mismatches = [r for r in above if not r["norms_equal"]]
        results = {
            "points": len(records),
            "threshold_met": len(above),
            "norms_equal_above_threshold": sum(r["norms_equal"] for r in above),
            "below_threshold": len(records) - len(above),
            "norms_equal_below_threshold": sum(
                r["norms_equal"] for r in records if not r["threshold_met"]
            ),
            "mismatches_above_threshold": mismatches,
        }
        inputs = {"target": target, "p": args.p, "q": args.q, "m": args.m, "n": args.n}
    elif target == "iterated":
        if args.ms is None:
            raise ValueError("sweep iterated requires --ms m1,m2,...")
        ms = tuple(int(s) for s in args.ms.split(","))
        points = [(p, q) + ms for p in _parse_range(args.p, "p") for q in _parse_range(args.q, "q")]
        records = _run_points(_sweep_iterated_point, points, jobs)
        above = [r for r in records if r["threshold_met"]]
        mismatches = [r for r in above if not r["norms_equal"]]
        results = {
            "points": len(records),
            "threshold_met": len(above),
            "norms_equal_above_threshold": sum(r["norms_equal"] for r in above),
            "mismatches_above_threshold": mismatches,
        }
        inputs = {"target": target, "p": args.p, "q": args.q, "ms": list(ms)}
    elif target == "boundary-kernel":
        points = [
            (p, q, w)
            for p in _parse_range(args.p, "p")
            for q in _parse_range(args.q, "q")
            for w in _parse_range(args.w, "w")
        ]
        records = _run_points(_sweep_boundary_kernel_point, points, jobs)
        mismatches = [r for r in records if not r["agree"]]
        results = {
            "points": len(records),
            "agreements": sum(r["agree"] for r in records),
            "mismatches": mismatches,
        }
        inputs = {"target": target, "p": args.p, "q": args.q, "w": args.w}
    elif target == "stab":
        points = [
            (p, q, k)
            for p in _parse_range(args.p, "p")
            for q in _parse_range(args.q, "q")
            for k in _parse_range(args.k, "k")
        ]
        records = _run_points(_sweep_stab_point, points, jobs)
        mismatches = [r for r in records if not r["certified"]]
        results = {
            "points": len(records),
            "certified": sum(r["certified"] for r in records),
            "mismatches": mismatches,
        }
        inputs = {"target": target, "p": args.p, "q": args.q, "k": args.k}
    elif target == "twist":
        points = [
            (a, b, n)
            for a in _parse_range(args.a, "a")
            for b in _parse_range(args.b, "b")
            for n in _parse_range(args.n, "n")
        ]
        records = _run_points(_sweep_twist_point, points, jobs)
        mismatches = [r for r in records if not r["ok"]]
        results = {
            "points": len(records),
            "homology_checks_passed": sum(r["ok"] for r in records),
            "mismatches": mismatches,
        }
        inputs = {"target": target, "a": args.a, "b": args.b, "n": args.n}
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown sweep target {target!r}")

    if mismatches:
        code = EXIT_INCONSISTENT
    env = envelope("sweep", inputs, results)
    return env, code


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lensgenus",
        description="Exact rational-genus certificates for knots in lens spaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a JSON report")

    p = sub.add_parser("simple-knot", help="simple knot in a homology class")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--class", dest="h1_class", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_simple_knot)

    p = sub.add_parser("theta", help="norm of a homology class via its torus knot")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--class", dest="h1_class", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_theta)

    p = sub.add_parser("cable", help="cable-knot minimizer verdict")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_cable)

    p = sub.add_parser("iterated", help="iterated-cable minimizer verdict")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--ms", type=str, required=True, help="comma-separated m1,m2,...")
    add_json(p)
    p.set_defaults(func=cmd_iterated)

    p = sub.add_parser("stab", help="stabilized-braid minimizer verdict")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_stab)

    p = sub.add_parser("order2", help="order-2 class uniqueness verdict in L(2k,1)")
    p.add_argument("--k", type=int, required=True)
    add_json(p)
    p.set_defaults(func=cmd_order2)

    p = sub.add_parser("twist", help="annulus-twist family diagram and export")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--export", type=str, default=None, help="write the spec line here")
    p.add_argument("--sidecar", type=str, default=None, help="write a JSON sidecar here")
    add_json(p)
    p.set_defaults(func=cmd_twist)

    p = sub.add_parser("boundary-kernel", help="peripheral class that bounds")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--w", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="verify against the SNF oracle")
    add_json(p)
    p.set_defaults(func=cmd_boundary_kernel)

    p = sub.add_parser("sweep", help="grid runs with exact-equality summaries")
    p.add_argument(
        "target",
        choices=["cable", "iterated", "boundary-kernel", "stab", "twist"],
    )
    p.add_argument("--p", type=str, help="range lo:hi")
    p.add_argument("--q", type=str, help="range lo:hi")
    p.add_argument("--m", type=str, help="range lo:hi")
    p.add_argument("--n", type=str, help="range lo:hi")
    p.add_argument("--w", type=str, help="range lo:hi")
    p.add_argument("--k", type=str, help="range lo:hi")
    p.add_argument("--a", type=str, help="range lo:hi")
    p.add_argument("--b", type=str, help="range lo:hi")
    p.add_argument("--ms", type=str, help="comma-separated m1,m2,... (iterated only)")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    add_json(p)
    p.set_defaults(func=cmd_sweep)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        env, code = args.func(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print_report(env, getattr(args, "json", False))
    return code


if __name__ == "__main__":
    raise SystemExit(main())
