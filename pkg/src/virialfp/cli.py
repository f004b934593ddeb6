"""Command-line front end.

Subcommands: scan, fixpoint, boyle, scaling, clusters, b3-hs, verify.
Machine-readable output (CSV with LF line endings, or JSON with --json) goes
to stdout; diagnostics go to stderr.  Exit codes: 0 success, 1 domain or
convergence error, 2 usage error.  Floats are printed at 12 significant
digits, exact rationals as num/den strings.
"""

from __future__ import annotations

import argparse
import json
import math
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import balance, cluster_expansion, lj_virial, scaling_map, selfsim, specfun
from .errors import DomainError, VirialError

_VERIFY_GRID = (2.0, 3.0, 5.0, 20.0 / 3.0, 10.0, 20.0, 50.0)
_GAMMA_NEG_QUARTER = -4.9016668098607104


@dataclass(frozen=True)
class ScanRow:
    t_star: float
    b2_integral: float
    b2_series: float  # nan below the series floor T* = 1.5
    db2_dt: float
    b2_over_t: float
    residual: float


def _fmt(value: float) -> str:
    return format(value, ".12g")


def _csv_field(text: str) -> str:
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _json_value(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return None if math.isnan(value) else float(_fmt(value))
    return value


def _emit_kv(pairs, as_json: bool) -> None:
    if as_json:
        print(json.dumps({k: _json_value(v) for k, v in pairs}))
        return
    print("field,value")
    for key, value in pairs:
        if isinstance(value, float):
            value = _fmt(value)
        print(f"{key},{value}")


def _scan_row(t: float, tol: float) -> ScanRow:
    b2i = lj_virial.b2_integral(t, abs_tol=tol).value
    try:
        b2s = lj_virial.b2_series(t).value
    except DomainError:
        b2s = float("nan")
    deriv = lj_virial.db2_dt(t)
    b2_over_t = b2i / t
    return ScanRow(t, b2i, b2s, deriv, b2_over_t, deriv - b2_over_t)


def _cmd_scan(args) -> int:
    if args.t_min <= 0.0:
        raise DomainError(f"--t-min must be positive, got {args.t_min}")
    if args.step <= 0.0:
        raise DomainError(f"--step must be positive, got {args.step}")
    if args.t_max < args.t_min:
        raise DomainError("--t-max must be >= --t-min")
    count = int(math.floor((args.t_max - args.t_min) / args.step + 1e-9)) + 1
    rows = [_scan_row(args.t_min + i * args.step, args.tol) for i in range(count)]
    fields = ("t_star", "b2_integral", "b2_series", "db2_dt", "b2_over_t", "residual")
    if args.json:
        print(json.dumps({
            "rows": [
                {name: _json_value(getattr(row, name)) for name in fields}
                for row in rows
            ]
        }))
    else:
        print(",".join(fields))
        for row in rows:
            print(",".join(_fmt(getattr(row, name)) for name in fields))
    if args.figures:
        from . import figures

        paths = figures.render_scan_figures(rows, args.figures)
        for path in paths:
            print(f"wrote {path}", file=sys.stderr)
    return 0


def _fixpoint_pairs(result: selfsim.FixedPointResult):
    return [
        ("t_star", result.t_star),
        ("b2_at_t", result.b2_at_t),
        ("residual", result.residual),
        ("bracket_low", result.bracket[0]),
        ("bracket_high", result.bracket[1]),
        ("iterations", result.iterations),
        ("converged", result.converged),
    ]


def _cmd_fixpoint(args) -> int:
    result = selfsim.find_selfsim_fixpoint((args.t_min, args.t_max), args.tol)
    pairs = _fixpoint_pairs(result)
    pairs.append(("localized_energy_per_eps0", selfsim.localized_energy(1.0, result)))
    _emit_kv(pairs, args.json)
    return 0


def _cmd_boyle(args) -> int:
    result = selfsim.find_boyle((args.t_min, args.t_max), args.tol)
    _emit_kv(_fixpoint_pairs(result), args.json)
    return 0


def _cmd_scaling(args) -> int:
    fmap = scaling_map.ScalingMap()
    points = fmap.fixed_points()
    if args.json:
        print(json.dumps({
            "fixed_points": [
                {
                    "location": "infinity" if p.is_infinite else str(p.location),
                    "multiplier": None if p.multiplier is None else str(p.multiplier),
                    "stability": p.stability.value,
                }
                for p in points
            ],
            "derivative_at_1": str(fmap.derivative(1)),
            "b2_star": str(fmap.b2_star()),
            "chemical_potential": str(fmap.chemical_potential),
        }))
        return 0
    print("field,value")
    for idx, p in enumerate(points):
        loc = "infinity" if p.is_infinite else str(p.location)
        mult = "" if p.multiplier is None else str(p.multiplier)
        print(f"fixed_point_{idx}_location,{loc}")
        print(f"fixed_point_{idx}_multiplier,{mult}")
        print(f"fixed_point_{idx}_stability,{p.stability.value}")
    print(f"derivative_at_1,{fmap.derivative(1)}")
    print(f"b2_star,{fmap.b2_star()}")
    print(f"chemical_potential,{fmap.chemical_potential}")
    return 0


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational: {text!r}") from exc


def _cmd_clusters(args) -> int:
    texts = [part for chunk in args.b for part in chunk.split(",") if part]
    values = tuple(_parse_rational(text) for text in texts)
    virials = cluster_expansion.virial_from_clusters(values)
    if args.json:
        print(json.dumps({
            "clusters": [str(v) for v in values],
            "virials": [str(v) for v in virials.values],
        }))
        return 0
    print("l,b_bar,B")
    for l, (b_l, big_b) in enumerate(zip(values, virials.values), start=1):
        print(f"{l},{b_l},{big_b}")
    return 0


def _cmd_b3hs(args) -> int:
    est = balance.hs_b3_mc(args.samples, args.seed)
    _emit_kv(
        [
            ("estimate", est.estimate),
            ("std_error", est.std_error),
            ("samples", est.samples),
            ("seed", est.seed),
        ],
        args.json,
    )
    return 0


@dataclass(frozen=True)
class _Check:
    name: str
    expected: str
    observed: str
    tolerance: str
    passed: bool


def _run_verify_checks(samples: int, seed: int) -> list[_Check]:
    checks: list[_Check] = []

    def add(name, expected, observed, tolerance, passed):
        checks.append(_Check(name, expected, observed, tolerance, bool(passed)))

    # gamma spot values
    sqrt_pi = math.sqrt(math.pi)
    g_half = specfun.gamma(0.5)
    add("gamma-half", _fmt(sqrt_pi), _fmt(g_half), "rel 1e-12",
        abs(g_half - sqrt_pi) / sqrt_pi < 1e-12)
    g_five = specfun.gamma(5.0)
    add("gamma-factorial", "24", _fmt(g_five), "rel 1e-12",
        abs(g_five - 24.0) / 24.0 < 1e-12)
    g_nq = specfun.gamma(-0.25)
    add("gamma-neg-quarter", _fmt(_GAMMA_NEG_QUARTER), _fmt(g_nq), "rel 1e-12",
        abs(g_nq - _GAMMA_NEG_QUARTER) / abs(_GAMMA_NEG_QUARTER) < 1e-12)

    rnd = random.Random(seed)
    worst = 0.0
    for _ in range(100):
        x = rnd.uniform(1e-3, 1.0 - 1e-3)
        worst = max(worst, abs(
            specfun.gamma(x) * specfun.gamma(1.0 - x) * math.sin(math.pi * x) / math.pi - 1.0
        ))
    add("gamma-reflection", "0", _fmt(worst), "abs 1e-11", worst < 1e-11)

    worst = 0.0
    for n in range(31):
        direct = specfun._alpha_direct(n)
        logspace = specfun._alpha_logspace(n)
        worst = max(worst, abs(direct - logspace) / abs(direct))
    add("alpha-direct-vs-log", "0", _fmt(worst), "rel 1e-12", worst < 1e-12)

    # scaling map exacts
    fmap = scaling_map.ScalingMap()
    points = fmap.fixed_points()
    finite = sorted(p.location for p in points if not p.is_infinite)
    has_inf = any(p.is_infinite for p in points)
    add("scaling-fixed-points", "0,1,infinity",
        ",".join([str(p) for p in finite] + (["infinity"] if has_inf else [])),
        "exact", finite == [0, 1] and has_inf)
    add("scaling-multiplier-at-1", "8/3", str(fmap.derivative(1)), "exact",
        fmap.derivative(1) == Fraction(8, 3))
    add("scaling-b2-fixed-point", "3/8", str(fmap.b2_star()), "exact",
        fmap.b2_star() == Fraction(3, 8))

    # balance exacts
    sums = {balance.virial_sum(balance.CascadeOrder(i)) for i in range(1, 9)}
    add("balance-order-sums", "1", ",".join(str(s) for s in sorted(sums)), "exact",
        sums == {Fraction(1)})
    closure = fmap.b2_star() + balance.B3_STAR
    add("balance-closure", "1", str(closure), "exact", closure == 1)

    # route agreement
    worst_series = 0.0
    worst_pair = 0.0
    for t in _VERIFY_GRID:
        quad_value = lj_virial.b2_integral(t, abs_tol=1e-10).value
        worst_series = max(worst_series, abs(quad_value - lj_virial.b2_series(t).value))
        worst_pair = max(worst_pair, abs(quad_value - lj_virial.b2_pair_oracle(t, 1e-10).value))
    add("series-vs-quadrature", "0", _fmt(worst_series), "abs 1e-6", worst_series < 1e-6)
    add("pair-oracle-vs-quadrature", "0", _fmt(worst_pair), "abs 1e-8", worst_pair < 1e-8)

    # fixed points of the B2 curve
    fix = selfsim.find_selfsim_fixpoint((4.0, 12.0), 1e-10)
    add("selfsim-window", "t in [6,7.5], b2 in [0.33,0.43]",
        f"t={_fmt(fix.t_star)} b2={_fmt(fix.b2_at_t)}", "window",
        6.0 <= fix.t_star <= 7.5 and 0.33 <= fix.b2_at_t <= 0.43)
    boyle = selfsim.find_boyle((2.0, 5.0), 1e-10)
    add("boyle-window", "t in [3.3,3.5], |b2| < 1e-8, t > 10/3",
        f"t={_fmt(boyle.t_star)} b2={_fmt(boyle.b2_at_t)}", "window",
        3.3 <= boyle.t_star <= 3.5 and abs(boyle.b2_at_t) < 1e-8
        and boyle.t_star > 10.0 / 3.0)

    # cluster inversion on random rationals
    all_b2 = True
    all_b3 = True
    for _ in range(50):
        b2 = Fraction(rnd.randint(-40, 40), rnd.randint(1, 12))
        b3 = Fraction(rnd.randint(-40, 40), rnd.randint(1, 12))
        virials = cluster_expansion.virial_from_clusters((Fraction(1), b2, b3)).values
        all_b2 &= virials[1] == -b2
        all_b3 &= virials[2] == 4 * b2**2 - 2 * b3
    add("cluster-inversion-b2", "B2 == -b2 (50 random)", "exact" if all_b2 else "mismatch",
        "exact", all_b2)
    add("cluster-inversion-b3", "B3 == 4 b2^2 - 2 b3 (50 random)",
        "exact" if all_b3 else "mismatch", "exact", all_b3)

    # Monte Carlo hard-sphere B3 under the 3-sigma rule
    est = balance.hs_b3_mc(samples, seed)
    add("hs-b3-monte-carlo", "0.625",
        f"{_fmt(est.estimate)} (se {_fmt(est.std_error)})",
        "3 std errors", abs(est.estimate - 0.625) <= 3.0 * est.std_error)

    return checks


def _cmd_verify(args) -> int:
    checks = _run_verify_checks(args.samples, args.seed)
    if args.json:
        print(json.dumps({
            "checks": [
                {
                    "check": c.name,
                    "expected": c.expected,
                    "observed": c.observed,
                    "tolerance": c.tolerance,
                    "status": "PASS" if c.passed else "FAIL",
                }
                for c in checks
            ],
            "all_passed": all(c.passed for c in checks),
        }))
    else:
        print("check,expected,observed,tolerance,status")
        for c in checks:
            status = "PASS" if c.passed else "FAIL"
            fields = (c.name, c.expected, c.observed, c.tolerance, status)
            print(",".join(_csv_field(f) for f in fields))
    failed = [c for c in checks if not c.passed]
    for c in failed:
        print(f"FAILED: {c.name} (expected {c.expected}, observed {c.observed})",
              file=sys.stderr)
    return 1 if failed else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="virialfp",
        description="Lennard-Jones B2 routes, self-similarity fixed points, "
                    "exact scaling-map analysis, and cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser("scan", help="B2/residual table over a temperature grid")
    scan.add_argument("--t-min", type=float, default=1.0)
    scan.add_argument("--t-max", type=float, default=50.0)
    scan.add_argument("--step", type=float, default=0.1)
    scan.add_argument("--tol", type=float, default=1e-10)
    scan.add_argument("--json", action="store_true")
    scan.add_argument("--figures", metavar="DIR",
                      help="also render b2_curve.png and residual.png into DIR")
    scan.set_defaults(func=_cmd_scan)

    fixpoint = sub.add_parser("fixpoint", help="locate the self-similarity point")
    fixpoint.add_argument("--t-min", type=float, default=4.0)
    fixpoint.add_argument("--t-max", type=float, default=12.0)
    fixpoint.add_argument("--tol", type=float, default=1e-10)
    fixpoint.add_argument("--json", action="store_true")
    fixpoint.set_defaults(func=_cmd_fixpoint)

    boyle = sub.add_parser("boyle", help="locate the Boyle root B2 = 0")
    boyle.add_argument("--t-min", type=float, default=2.0)
    boyle.add_argument("--t-max", type=float, default=5.0)
    boyle.add_argument("--tol", type=float, default=1e-10)
    boyle.add_argument("--json", action="store_true")
    boyle.set_defaults(func=_cmd_boyle)

    scaling = sub.add_parser("scaling", help="fixed points and exact B2* of the fugacity map")
    scaling.add_argument("--json", action="store_true")
    scaling.set_defaults(func=_cmd_scaling)

    clusters = sub.add_parser("clusters", help="virial coefficients from cluster integrals")
    clusters.add_argument("b", nargs="+", metavar="RATIONAL",
                          help="cluster integrals b_1 b_2 ... (b_1 must be 1); "
                               "comma-separated also accepted, and negative values "
                               "need a leading '--'")
    clusters.add_argument("--json", action="store_true")
    clusters.set_defaults(func=_cmd_clusters)

    b3hs = sub.add_parser("b3-hs", help="Monte Carlo hard-sphere B3 estimate")
    b3hs.add_argument("--samples", type=int, default=1_000_000)
    b3hs.add_argument("--seed", type=int, default=12345)
    b3hs.add_argument("--json", action="store_true")
    b3hs.set_defaults(func=_cmd_b3hs)

    verify = sub.add_parser("verify", help="run the cross-module identity suite")
    verify.add_argument("--samples", type=int, default=1_000_000)
    verify.add_argument("--seed", type=int, default=12345)
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(func=_cmd_verify)

    return parser


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse prints its own usage message
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except VirialError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
