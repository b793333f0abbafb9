"""Command-line front end: bound-sandwich reports, set estimates, plots.

Subcommands: ball, sandwich, set eac, set sep, set bound, plot.  All JSON
output is deterministic (fixed key order, 12 significant digits,
round-half-even) so that reports double as reproducible certificates.

Exit codes: 0 success, 1 sandwich consistency failure (implementation
bug by design), 2 unparseable input or exterior points, 3 grid-solver
dimension refusal.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import entropy, exact, geometry, separation, svg

CONSISTENCY_TOL = 1e-9


def _fmt(v):
    """Round to 12 significant digits (round-half-even); inf becomes None."""
    if v is None or not math.isfinite(v):
        return None
    return float(f"{v:.12g}")


def _emit(report: dict, out=None) -> None:
    text = json.dumps(report, indent=2) + "\n"
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def _parse_point(text: str) -> np.ndarray:
    try:
        return np.asarray([float(t) for t in text.split(",")], dtype=float)
    except ValueError as e:
        raise ValueError(f"cannot parse point {text!r}: {e}") from None


def _parse_pair(text: str) -> tuple[np.ndarray, np.ndarray]:
    parts = text.split(";")
    if len(parts) != 2:
        raise ValueError('pair must look like "x1,y1;x2,y2"')
    return _parse_point(parts[0]), _parse_point(parts[1])


def max_threads() -> int:
    """Parallelism cap from HARNACK_THREADS (all solvers are sequential;
    the cap is honored as an upper limit, never exceeded)."""
    try:
        return max(1, int(os.environ.get("HARNACK_THREADS", "1")))
    except ValueError:
        return 1


# ---------------------------------------------------------------------------
# subcommands


def cmd_ball(args) -> int:
    value = exact.ball_harnack_from_center(args.dim, args.radius, args.rho)
    sys.stdout.write(f"{value:.12g}\n")
    return 0


def _default_grid(domain) -> float:
    return domain.bounding_diameter() / 30.0


def cmd_sandwich(args) -> int:
    domain = geometry.load_domain(args.domain)
    x, y = _parse_pair(args.pair)
    for p in (x, y):
        if not geometry.contains(domain, p):
            raise ValueError(f"point {p.tolist()} is not interior to the domain")
    grid = args.grid if args.grid else _default_grid(domain)
    hops = args.hops

    coincident = bool(np.array_equal(x, y))
    uppers: dict[str, float | None] = {}
    inapplicable: dict[str, str] = {}

    # pair bound, both variants
    q = separation.pair_separation(domain, x, y)
    if q < 1.0:
        uppers["pair_stated"] = separation.pair_bound(domain, x, y, "stated")
        uppers["pair_proof_sharp"] = separation.pair_bound(domain, x, y, "proof_sharp")
    else:
        inapplicable["pair_stated"] = f"pair separation {q:.12g} >= 1"
        inapplicable["pair_proof_sharp"] = f"pair separation {q:.12g} >= 1"

    # entropy bound for the two-point set
    eac = entropy.eac_hull_bound(domain, np.vstack([x, y]), "segmental")
    if math.isfinite(eac):
        sharp, rounded = entropy.eac_harnack_bound(eac, domain.dim)
        uppers["eac_sharp"] = sharp
        uppers["eac_rounded"] = rounded
    else:
        inapplicable["eac_sharp"] = "segmental hull not certified inside the domain"

    # chain bound through a minimax separation witness
    query = separation.SeparationQuery(domain, x, np.vstack([y]), hops, grid)
    result = separation.set_separation(query)
    witness = result.per_target[0][1]
    if result.value < 1.0 and witness is not None:
        uppers["set_hop"] = separation.set_harnack_bound(result, hops, domain.dim)
        uppers["chain_stated"] = separation.chain_bound(domain, witness, "stated")
        uppers["chain_proof_sharp"] = separation.chain_bound(domain, witness, "proof_sharp")
    else:
        inapplicable["set_hop"] = (
            f"set separation {result.value:.12g} >= 1 at hops={hops}; "
            "try more hops or a finer grid"
        )

    lower_enc = exact.enclosing_ball_lower_bound(domain, x, y)
    lower_poi = exact.poisson_witness_lower_bound(domain, x, y)
    lower = lower_enc if lower_enc.value >= lower_poi.value else lower_poi

    exact_value = None
    if isinstance(domain, geometry.Ball) and domain.dim == 2:
        exact_value = exact.disk_harnack_two_points(x, y, domain.center, domain.radius)
    if coincident:
        exact_value = 1.0
        lower = exact.LowerBoundCertificate("disk_exact", 1.0, {"note": "coincident points"})

    finite_uppers = [v for v in uppers.values() if v is not None]
    min_upper = min(finite_uppers) if finite_uppers else math.inf
    consistent = lower.value <= min_upper + CONSISTENCY_TOL
    if exact_value is not None:
        consistent &= lower.value - CONSISTENCY_TOL <= exact_value <= min_upper + CONSISTENCY_TOL

    report = {
        "domain_id": os.path.basename(args.domain),
        "query": {"type": "pair", "x": x.tolist(), "y": y.tolist()},
        "parameters": {
            "hops": hops,
            "grid_step": _fmt(grid),
            "boundary_samples": exact.DEFAULT_BOUNDARY_SAMPLES,
            "variant": args.variant,
        },
        "lower": {
            "method": lower.method,
            "value": _fmt(lower.value),
            "witness": lower.witness,
        },
        "lower_candidates": {
            "enclosing_ball": _fmt(lower_enc.value),
            "poisson_witness": _fmt(lower_poi.value),
        },
        "uppers": {k: _fmt(v) for k, v in sorted(uppers.items())},
        "inapplicable": dict(sorted(inapplicable.items())),
        "pair_separation": _fmt(q),
        "exact": _fmt(exact_value) if exact_value is not None else None,
        "verdict": "consistent" if consistent else "inconsistent",
    }
    _emit(report, args.out)
    return 0 if consistent else 1


def _eac_payload(domain, pts, args):
    grid = args.grid if args.grid else _default_grid(domain)
    est = entropy.eac_estimate(domain, pts, grid)
    hull = entropy.eac_hull_bound(
        domain,
        pts,
        args.hull,
        star_center=_parse_point(args.star_center) if args.star_center else None,
    )
    payload = {
        "value": _fmt(est.value),
        "certified_upper": est.certified_upper,
        "hull_kind": args.hull,
        "hull_bound": _fmt(hull),
        "grid_step": _fmt(est.grid_step),
        "clearance_levels": [_fmt(r) for r in est.clearance_levels],
        "per_pair": [
            {
                "pair": list(k),
                "ratio": _fmt(rec.ratio),
                "clearance": _fmt(rec.clearance),
                "polyline": np.asarray(rec.polyline).tolist(),
            }
            for k, rec in sorted(est.per_pair.items())
        ],
    }
    return est, payload


def cmd_set(args) -> int:
    domain = geometry.load_domain(args.domain)
    pts = geometry.load_point_set(args.set, domain)
    report = {
        "domain_id": os.path.basename(args.domain),
        "set_id": os.path.basename(args.set),
        "subcommand": args.what,
    }

    if args.what in ("eac", "bound"):
        est, payload = _eac_payload(domain, pts, args)
        report["eac"] = payload
        if math.isfinite(est.value):
            sharp, rounded = entropy.eac_harnack_bound(est.value, domain.dim)
            report["eac_harnack_bound"] = {
                "sharp": _fmt(sharp),
                "rounded": _fmt(rounded),
            }
        else:
            report["eac_harnack_bound"] = None

    if args.what in ("sep", "bound"):
        if args.start is None:
            raise ValueError(f"'set {args.what}' requires --start")
        start = _parse_point(args.start)
        grid = args.grid if args.grid else _default_grid(domain)
        query = separation.SeparationQuery(domain, start, pts, args.hops, grid)
        result = separation.set_separation(query)
        sep_payload = {
            "value": _fmt(result.value),
            "hops": result.hops,
            "grid_step": _fmt(result.grid_step),
            "start": start.tolist(),
            "per_target": [
                {
                    "target": t,
                    "value": _fmt(v),
                    "reachable": poly is not None,
                    "polyline": None if poly is None else np.asarray(poly).tolist(),
                }
                for t, (v, poly) in sorted(result.per_target.items())
            ],
        }
        report["sep"] = sep_payload
        if result.value < 1.0:
            report["sep_harnack_bound"] = _fmt(
                separation.set_harnack_bound(result, args.hops, domain.dim)
            )
        else:
            report["sep_harnack_bound"] = None

    _emit(report, args.out)
    return 0


def _load_artifact(path):
    with open(path) as f:
        data = json.load(f)
    point_sets, polylines, chains = [], [], []
    if "points" in data:
        point_sets.append(np.asarray(data["points"], dtype=float))
    elif "centers" in data:
        chains.append((np.asarray(data["centers"], dtype=float), float(data["radius"])))
    elif "per_pair" in data or ("eac" in data and data["eac"]):
        for rec in data.get("per_pair", data.get("eac", {}).get("per_pair", [])):
            if rec.get("polyline"):
                polylines.append(np.asarray(rec["polyline"], dtype=float))
    elif "per_target" in data or "sep" in data:
        for rec in data.get("per_target", data.get("sep", {}).get("per_target", [])):
            if rec.get("polyline"):
                polylines.append(np.asarray(rec["polyline"], dtype=float))
    else:
        raise ValueError(f"unrecognized artifact file: {path}")
    return point_sets, polylines, chains


def cmd_plot(args) -> int:
    domain = geometry.load_domain(args.domain)
    if domain.dim != 2:
        raise ValueError("plotting is 2-D only")
    point_sets, polylines, chains = [], [], []
    for path in args.artifacts:
        ps, pl, ch = _load_artifact(path)
        point_sets.extend(ps)
        polylines.extend(pl)
        chains.extend(ch)
    doc = svg.render_svg(domain, point_sets, polylines, chains)
    with open(args.out, "w") as f:
        f.write(doc)
    return 0


# ---------------------------------------------------------------------------
# argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harnack",
        description="Certified bounds on the Harnack distance in bounded domains.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_ball = sub.add_parser("ball", help="exact Harnack distance from a ball center")
    p_ball.add_argument("--dim", type=int, required=True)
    p_ball.add_argument("--radius", type=float, required=True)
    p_ball.add_argument("--rho", type=float, required=True)
    p_ball.set_defaults(func=cmd_ball)

    p_sand = sub.add_parser("sandwich", help="combined lower/upper bound report for a pair")
    p_sand.add_argument("--domain", required=True)
    p_sand.add_argument("--pair", required=True, help='"x1,y1;x2,y2"')
    p_sand.add_argument("--hops", type=int, default=2)
    p_sand.add_argument("--grid", type=float, default=None)
    p_sand.add_argument("--variant", choices=["stated", "proof_sharp"], default="stated")
    p_sand.add_argument("--out", default=None)
    p_sand.set_defaults(func=cmd_sandwich)

    p_set = sub.add_parser("set", help="entropy / separation estimates for a point set")
    p_set.add_argument("what", choices=["eac", "sep", "bound"])
    p_set.add_argument("--domain", required=True)
    p_set.add_argument("--set", required=True)
    p_set.add_argument("--start", default=None, help='"x,y[,z]" (sep/bound)')
    p_set.add_argument("--hops", type=int, default=2)
    p_set.add_argument("--grid", type=float, default=None)
    p_set.add_argument("--hull", choices=["convex", "segmental", "star"], default="segmental")
    p_set.add_argument("--star-center", default=None)
    p_set.add_argument("--out", default=None)
    p_set.set_defaults(func=cmd_set)

    p_plot = sub.add_parser("plot", help="render domain and artifacts to SVG")
    p_plot.add_argument("--domain", required=True)
    p_plot.add_argument("artifacts", nargs="*")
    p_plot.add_argument("--out", required=True)
    p_plot.set_defaults(func=cmd_plot)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except entropy.GridDimensionError as e:
        sys.stderr.write(f"error: {e}\n(hull bounds remain available for d > 3)\n")
        return 3
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as e:
        sys.stderr.write(f"error: {e}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
