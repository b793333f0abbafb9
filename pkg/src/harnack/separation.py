"""Separation exponents and the Harnack bounds they certify.

The separation of two points is |x - y| divided by the sum of their
clearances; below 1 it certifies a single overlapping-ball link and the
pair bound 2^(2d) / (1 - q)^(2(d-1)).  For a set with a start point and a
hop budget l, a hop-limited minimax (bottleneck) dynamic program over a
grid discretization over-estimates the sup-inf separation, which feeds the
set bound 2^(2dl) / (1 - q)^((d-1)l).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .geometry import (
    Domain,
    certified_segment_clearance,
    contains,
    lattice_points,
    points_array,
)

__all__ = [
    "SeparationQuery",
    "SeparationResult",
    "SeparationSolver",
    "pair_separation",
    "pair_bound",
    "sequence_separation",
    "set_separation",
    "set_harnack_bound",
    "chain_bound",
    "verify_between_conditions",
]


def pair_separation(domain: Domain, x, y) -> float:
    """|x - y| / (clearance(x) + clearance(y)); 0 for coincident points."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    cx = float(domain.clearance(x)[0])
    cy = float(domain.clearance(y)[0])
    if cx <= 0 or cy <= 0:
        raise ValueError("both points must be interior to the domain")
    return float(np.linalg.norm(x - y)) / (cx + cy)


def pair_bound(domain: Domain, x, y, variant: str = "stated") -> float:
    """Upper bound on the Harnack distance of a pair with separation q < 1.

    "stated": 2^(2d) / (1 - q)^(2(d-1)).
    "proof_sharp": (2^(d-2) * (3 + q) / (1 - q)^(d-1))^2, the intermediate
    product from the midpoint construction; always <= the stated value.
    """
    q = pair_separation(domain, x, y)
    return pair_bound_from_q(q, domain.dim, variant)


def pair_bound_from_q(q: float, dim: int, variant: str = "stated") -> float:
    if not q < 1.0:
        raise ValueError(
            "separation condition violated: no single-link certificate (q >= 1)"
        )
    if q < 0:
        raise ValueError("separation must be >= 0")
    if variant == "stated":
        return 2.0 ** (2 * dim) / (1.0 - q) ** (2 * (dim - 1))
    if variant == "proof_sharp":
        return (2.0 ** (dim - 2) * (3.0 + q) / (1.0 - q) ** (dim - 1)) ** 2
    raise ValueError(f"unknown variant: {variant!r}")


def sequence_separation(domain: Domain, points) -> float:
    """Max pair separation over consecutive points of a sequence."""
    p = points_array(points, domain)
    if p.shape[0] < 2:
        raise ValueError("sequence needs at least 2 points")
    return max(
        pair_separation(domain, p[k - 1], p[k]) for k in range(1, p.shape[0])
    )


@dataclass(frozen=True)
class SeparationQuery:
    domain: Domain
    start: np.ndarray
    targets: np.ndarray
    hops: int
    grid_step: float
    neighbor_radius: float | None = None

    def __post_init__(self):
        object.__setattr__(self, "start", np.asarray(self.start, dtype=float))
        object.__setattr__(
            self, "targets", points_array(self.targets, self.domain)
        )
        if self.hops < 1:
            raise ValueError("hops must be >= 1")
        if self.grid_step <= 0:
            raise ValueError("grid_step must be positive")
        if not contains(self.domain, self.start):
            raise ValueError("start point must be interior to the domain")
        if not np.all(self.domain.clearance(self.targets) > 0):
            raise ValueError("all targets must be interior to the domain")


@dataclass(frozen=True)
class SeparationResult:
    """Upper estimate of the set separation with per-target witnesses."""

    value: float
    per_target: dict  # target index -> (value, polyline (hops+1, d))
    hops: int
    grid_step: float


class SeparationSolver:
    """Hop-limited minimax path solver on a grid discretization of a domain.

    Grid nodes are interior lattice points; grid-grid edges connect nodes
    within the neighbor radius (default 4 * grid_step), while the start and
    target points connect to every node.  Edge cost is the pair separation;
    edges with cost >= 1 are dropped; explicit zero-cost self-edges make
    the exactly-l and at-most-l formulations coincide.
    """

    def __init__(self, domain: Domain, grid_step: float, neighbor_radius: float | None = None):
        if domain.dim > 3:
            from .entropy import GridDimensionError

            raise GridDimensionError(
                f"grid solver refuses d={domain.dim} > 3; use hull bounds instead"
            )
        self.domain = domain
        self.grid_step = grid_step
        self.neighbor_radius = (
            4.0 * grid_step if neighbor_radius is None else neighbor_radius
        )
        self.nodes = lattice_points(domain, grid_step)
        self.clear = (
            domain.clearance(self.nodes)
            if self.nodes.shape[0]
            else np.zeros(0)
        )

    def _cost_matrix(self, pts: np.ndarray, clear: np.ndarray, n_grid: int) -> np.ndarray:
        m = pts.shape[0]
        diff = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=2)
        cost = diff / (clear[:, None] + clear[None, :])
        far = np.zeros((m, m), dtype=bool)
        far[:n_grid, :n_grid] = diff[:n_grid, :n_grid] > self.neighbor_radius
        cost[far] = np.inf
        cost[cost >= 1.0] = np.inf
        np.fill_diagonal(cost, 0.0)  # zero-cost self-edges
        return cost

    def solve(self, start, targets, hops: int):
        start = np.asarray(start, dtype=float)
        targets = points_array(targets, self.domain)
        n_grid = self.nodes.shape[0]
        pts = np.vstack([self.nodes, start[None, :], targets])
        clear = np.concatenate(
            [self.clear, self.domain.clearance(pts[n_grid:])]
        )
        if np.any(clear[n_grid:] <= 0):
            raise ValueError("start and targets must be interior to the domain")
        cost = self._cost_matrix(pts, clear, n_grid)
        i0 = n_grid
        f = np.full(pts.shape[0], np.inf)
        f[i0] = 0.0
        preds = []
        for _ in range(hops):
            layer = np.maximum(f[:, None], cost)
            preds.append(np.argmin(layer, axis=0))  # first index wins ties
            f = layer.min(axis=0)
        per_target = {}
        for t in range(targets.shape[0]):
            idx = n_grid + 1 + t
            val = float(f[idx])
            path = [idx]
            if math.isfinite(val):
                for k in range(hops - 1, -1, -1):
                    path.append(int(preds[k][path[-1]]))
                path.reverse()
                poly = pts[np.array(path)]
            else:
                poly = None
            per_target[t] = (val, poly)
        value = max(v for v, _ in per_target.values())
        return value, per_target


def set_separation(query: SeparationQuery) -> SeparationResult:
    """Upper estimate of the sup-inf set separation via the minimax solver.

    The inf over intermediate points is restricted to grid nodes, so the
    result over-estimates the true separation and stays usable as q in the
    set bound.  Unreachable targets get value +inf.
    """
    solver = SeparationSolver(query.domain, query.grid_step, query.neighbor_radius)
    value, per_target = solver.solve(query.start, query.targets, query.hops)
    return SeparationResult(value, per_target, query.hops, query.grid_step)


def set_harnack_bound(result, hops: int, dim: int) -> float:
    """2^(2dl) / (1 - q)^((d-1)l) with q the (over-estimated) set separation."""
    q = result.value if isinstance(result, SeparationResult) else float(result)
    if not q < 1.0:
        raise ValueError("separation condition violated: sep >= 1")
    if q < 0 or hops < 1 or dim < 2:
        raise ValueError("need q >= 0, hops >= 1, dim >= 2")
    return 2.0 ** (2 * dim * hops) / (1.0 - q) ** ((dim - 1) * hops)


def chain_bound(domain: Domain, points, variant: str = "stated") -> float:
    """Product of pair bounds along a chain: an upper bound on the Harnack
    distance between the first and last point (multiplicative triangle)."""
    p = points_array(points, domain)
    if p.shape[0] < 2:
        raise ValueError("chain needs at least 2 points")
    total = 1.0
    for k in range(1, p.shape[0]):
        q = pair_separation(domain, p[k - 1], p[k])
        if not q < 1.0:
            raise ValueError(f"chain link {k - 1} has separation {q} >= 1")
        total *= pair_bound_from_q(q, domain.dim, variant)
    return total


def verify_between_conditions(
    domain: Domain, polyline, q: float, resolution: float | None = None
) -> tuple[bool, dict]:
    """Check the two-parameter chain conditions for a polyline at level q.

    Each link must satisfy |x_k - x_{k+1}| <= q * (r_k + r_{k+1}) with r_k
    the clearance at x_k; additionally each segment must certify inside the
    domain (the clearance balls are inside by definition of clearance).
    Returns (passed, report) with the first violated link, if any.
    """
    p = points_array(polyline, domain)
    clear = domain.clearance(p)
    if not np.all(clear > 0):
        raise ValueError("polyline points must be interior to the domain")
    if resolution is None:
        resolution = 1e-3 * domain.bounding_diameter()
    report = {"links": p.shape[0] - 1, "first_violation": None, "reason": None}
    for k in range(p.shape[0] - 1):
        gap = float(np.linalg.norm(p[k + 1] - p[k]))
        if gap > q * (clear[k] + clear[k + 1]) + 1e-15:
            report["first_violation"] = k
            report["reason"] = "link separation exceeds q"
            return False, report
        if certified_segment_clearance(domain, p[k], p[k + 1], resolution) <= 0.0:
            report["first_violation"] = k
            report["reason"] = "segment not certified inside the domain"
            return False, report
    return True, report
