"""Domain shapes, clearance queries and conservative hull certificates.

Domains are bounded open connected subsets of R^d given by one of four
shape primitives (ball, axis-aligned box, simple 2-D polygon, connected
union of balls).  Every shape answers a vectorized distance-to-complement
("clearance") query, which is exact except inside ball-union overlaps,
where it is a valid lower bound.  All certified quantities in this
package rest on the 1-Lipschitz property of the clearance function.
"""

from __future__ import annotations

import json
import math
import warnings
from dataclasses import dataclass

import numpy as np

__all__ = [
    "Ball",
    "Box",
    "Polygon2D",
    "UnionOfBalls",
    "PointSet",
    "dist_to_complement",
    "contains",
    "diameter",
    "hull_clearance",
    "enclosing_ball",
    "convex_hull_2d",
    "load_domain",
    "dump_domain",
    "load_point_set",
    "dump_point_set",
    "lattice_points",
    "segment_samples",
    "certified_segment_clearance",
]


def _as_points(x) -> np.ndarray:
    """Coerce to a float array of shape (n, d); a single point becomes (1, d)."""
    a = np.asarray(x, dtype=float)
    if a.ndim == 1:
        a = a[None, :]
    if a.ndim != 2:
        raise ValueError(f"expected point array, got shape {np.asarray(x).shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("points must have finite coordinates")
    return a


def _check_dim(domain, x: np.ndarray) -> None:
    if x.shape[-1] != domain.dim:
        raise ValueError(
            f"dimension mismatch: point has d={x.shape[-1]}, domain has d={domain.dim}"
        )


class Domain:
    """Base class for bounded open connected domains."""

    dim: int

    def clearance(self, pts) -> np.ndarray:
        """Distance to the complement for each point; 0 outside or on the boundary."""
        raise NotImplementedError

    def enclosing_radius(self, center) -> float:
        """Smallest R with the whole domain inside Ball(center, R)."""
        raise NotImplementedError

    def bounding_box(self) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def bounding_diameter(self) -> float:
        lo, hi = self.bounding_box()
        return float(np.linalg.norm(hi - lo))

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True, eq=False)
class Ball(Domain):
    center: np.ndarray
    radius: float

    def __post_init__(self):
        c = np.asarray(self.center, dtype=float)
        object.__setattr__(self, "center", c)
        if c.ndim != 1 or c.size < 2:
            raise ValueError("ball center must be a vector with d >= 2")
        if not self.radius > 0:
            raise ValueError("ball radius must be positive")

    @property
    def dim(self) -> int:
        return self.center.size

    def clearance(self, pts) -> np.ndarray:
        p = _as_points(pts)
        _check_dim(self, p)
        return np.maximum(0.0, self.radius - np.linalg.norm(p - self.center, axis=1))

    def enclosing_radius(self, center) -> float:
        c = np.asarray(center, dtype=float)
        return float(np.linalg.norm(c - self.center) + self.radius)

    def bounding_box(self):
        return self.center - self.radius, self.center + self.radius

    def to_dict(self):
        return {"type": "ball", "center": self.center.tolist(), "radius": self.radius}


@dataclass(frozen=True, eq=False)
class Box(Domain):
    lo: np.ndarray
    hi: np.ndarray

    def __post_init__(self):
        lo = np.asarray(self.lo, dtype=float)
        hi = np.asarray(self.hi, dtype=float)
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)
        if lo.ndim != 1 or lo.size < 2 or lo.shape != hi.shape:
            raise ValueError("box corners must be matching vectors with d >= 2")
        if not np.all(hi > lo):
            raise ValueError("box must have positive extent on every axis")

    @property
    def dim(self) -> int:
        return self.lo.size

    def clearance(self, pts) -> np.ndarray:
        p = _as_points(pts)
        _check_dim(self, p)
        face = np.minimum(p - self.lo, self.hi - p).min(axis=1)
        return np.maximum(0.0, face)

    def enclosing_radius(self, center) -> float:
        c = np.asarray(center, dtype=float)
        reach = np.maximum(np.abs(self.lo - c), np.abs(self.hi - c))
        return float(np.linalg.norm(reach))

    def bounding_box(self):
        return self.lo, self.hi

    def to_dict(self):
        return {"type": "box", "min": self.lo.tolist(), "max": self.hi.tolist()}


def _segments_intersect(a, b, c, d) -> bool:
    """Proper or improper intersection of segments [a,b] and [c,d]."""

    def orient(p, q, r):
        v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
        if v > 0:
            return 1
        if v < 0:
            return -1
        return 0

    def on_seg(p, q, r):
        return (
            min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])
        )

    o1, o2 = orient(a, b, c), orient(a, b, d)
    o3, o4 = orient(c, d, a), orient(c, d, b)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and on_seg(a, b, c):
        return True
    if o2 == 0 and on_seg(a, b, d):
        return True
    if o3 == 0 and on_seg(c, d, a):
        return True
    if o4 == 0 and on_seg(c, d, b):
        return True
    return False


@dataclass(frozen=True, eq=False)
class Polygon2D(Domain):
    vertices: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.vertices, dtype=float)
        object.__setattr__(self, "vertices", v)
        if v.ndim != 2 or v.shape[1] != 2 or v.shape[0] < 3:
            raise ValueError("polygon needs at least 3 vertices in R^2")
        # signed area > 0 <=> counterclockwise
        x, y = v[:, 0], v[:, 1]
        area2 = np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y)
        if area2 <= 0:
            raise ValueError("polygon vertices must be counterclockwise")
        n = v.shape[0]
        for i in range(n):
            a, b = v[i], v[(i + 1) % n]
            for j in range(i + 1, n):
                if j == i or (j + 1) % n == i or (i + 1) % n == j:
                    continue  # adjacent edges share an endpoint
                c, d = v[j], v[(j + 1) % n]
                if _segments_intersect(a, b, c, d):
                    raise ValueError("polygon must be simple (non-self-intersecting)")

    @property
    def dim(self) -> int:
        return 2

    def _inside(self, p: np.ndarray) -> np.ndarray:
        """Crossing-number test, vectorized over points (n, 2)."""
        v = self.vertices
        n = v.shape[0]
        inside = np.zeros(p.shape[0], dtype=bool)
        for i in range(n):
            a, b = v[i], v[(i + 1) % n]
            cond = (a[1] > p[:, 1]) != (b[1] > p[:, 1])
            with np.errstate(divide="ignore", invalid="ignore"):
                xint = a[0] + (p[:, 1] - a[1]) * (b[0] - a[0]) / (b[1] - a[1])
            inside ^= cond & (p[:, 0] < xint)
        return inside

    def _edge_distance(self, p: np.ndarray) -> np.ndarray:
        v = self.vertices
        n = v.shape[0]
        best = np.full(p.shape[0], np.inf)
        for i in range(n):
            a, b = v[i], v[(i + 1) % n]
            ab = b - a
            t = np.clip(((p - a) @ ab) / (ab @ ab), 0.0, 1.0)
            proj = a + t[:, None] * ab
            best = np.minimum(best, np.linalg.norm(p - proj, axis=1))
        return best

    def clearance(self, pts) -> np.ndarray:
        p = _as_points(pts)
        _check_dim(self, p)
        d = self._edge_distance(p)
        return np.where(self._inside(p), d, 0.0)

    def enclosing_radius(self, center) -> float:
        c = np.asarray(center, dtype=float)
        return float(np.linalg.norm(self.vertices - c, axis=1).max())

    def bounding_box(self):
        return self.vertices.min(axis=0), self.vertices.max(axis=0)

    def to_dict(self):
        return {"type": "polygon", "vertices": self.vertices.tolist()}


@dataclass(frozen=True, eq=False)
class UnionOfBalls(Domain):
    centers: np.ndarray
    radii: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.centers, dtype=float)
        r = np.asarray(self.radii, dtype=float)
        object.__setattr__(self, "centers", c)
        object.__setattr__(self, "radii", r)
        if c.ndim != 2 or c.shape[1] < 2 or r.shape != (c.shape[0],):
            raise ValueError("union of balls needs centers (n, d>=2) and n radii")
        if not np.all(r > 0):
            raise ValueError("all radii must be positive")
        # pairwise-overlap graph must be connected
        n = c.shape[0]
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j not in seen and np.linalg.norm(c[i] - c[j]) < r[i] + r[j]:
                    seen.add(j)
                    stack.append(j)
        if len(seen) != n:
            raise ValueError("union of balls must be connected (balls must overlap)")

    @property
    def dim(self) -> int:
        return self.centers.shape[1]

    def clearance(self, pts) -> np.ndarray:
        # max over per-ball interior depth: exact for one ball, a valid lower
        # bound inside overlaps
        p = _as_points(pts)
        _check_dim(self, p)
        d = np.linalg.norm(p[:, None, :] - self.centers[None, :, :], axis=2)
        return np.maximum(0.0, (self.radii[None, :] - d).max(axis=1))

    def enclosing_radius(self, center) -> float:
        c = np.asarray(center, dtype=float)
        return float((np.linalg.norm(self.centers - c, axis=1) + self.radii).max())

    def bounding_box(self):
        lo = (self.centers - self.radii[:, None]).min(axis=0)
        hi = (self.centers + self.radii[:, None]).max(axis=0)
        return lo, hi

    def to_dict(self):
        return {
            "type": "union_of_balls",
            "balls": [
                {"center": c.tolist(), "radius": float(r)}
                for c, r in zip(self.centers, self.radii)
            ],
        }


@dataclass(frozen=True, eq=False)
class PointSet:
    """A finite set of points strictly inside a domain."""

    points: np.ndarray
    domain: Domain

    def __post_init__(self):
        p = _as_points(self.points)
        object.__setattr__(self, "points", p)
        _check_dim(self.domain, p)
        if p.shape[0] == 0:
            raise ValueError("point set must be nonempty")
        clear = self.domain.clearance(p)
        if not np.all(clear > 0):
            bad = int(np.argmin(clear))
            raise ValueError(f"point {p[bad].tolist()} is not interior to the domain")

    def __len__(self) -> int:
        return self.points.shape[0]


def points_array(pts, domain: Domain | None = None) -> np.ndarray:
    """Accept a PointSet or raw coordinates; validate interiority when possible."""
    if isinstance(pts, PointSet):
        return pts.points
    p = _as_points(pts)
    if domain is not None:
        _check_dim(domain, p)
    return p


# ---------------------------------------------------------------------------
# operations


def dist_to_complement(domain: Domain, x) -> float:
    """Exact Euclidean distance from x to the complement of the domain.

    Returns 0 if x is outside or on the boundary; strictly positive iff
    x is interior.
    """
    return float(domain.clearance(x)[0])


def contains(domain: Domain, x) -> bool:
    """True iff x is strictly inside the (open) domain."""
    return dist_to_complement(domain, x) > 0.0


def diameter(pts) -> float:
    """Max pairwise Euclidean distance; 0 for a singleton."""
    p = points_array(pts)
    if p.shape[0] == 0:
        raise ValueError("diameter of an empty set")
    if p.shape[0] == 1:
        return 0.0
    d = np.linalg.norm(p[:, None, :] - p[None, :, :], axis=2)
    return float(d.max())


def segment_samples(a, b, resolution: float) -> tuple[np.ndarray, float]:
    """Uniform samples on [a, b] with spacing <= resolution.

    The subdivision count is a power of two so that halving the resolution
    gives nested sample sets (monotone certificates).
    Returns (samples, spacing).
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    length = float(np.linalg.norm(b - a))
    if length == 0.0:
        return a[None, :], 0.0
    n = 1 << max(0, math.ceil(math.log2(length / resolution)))
    t = np.linspace(0.0, 1.0, n + 1)
    return a + t[:, None] * (b - a), length / n


def certified_segment_clearance(domain: Domain, a, b, resolution: float) -> float:
    """Certified lower bound on min clearance along [a, b] (Lipschitz rule)."""
    samples, spacing = segment_samples(a, b, resolution)
    m = float(domain.clearance(samples).min())
    return max(0.0, m - spacing / 2.0)


def convex_hull_2d(points: np.ndarray) -> np.ndarray:
    """Monotone-chain convex hull; vertices counterclockwise.

    Degenerate inputs (collinear, < 3 points) yield the extreme points only.
    """
    p = _as_points(points)
    if p.shape[1] != 2:
        raise ValueError("convex_hull_2d needs 2-D points")
    pts = np.unique(p, axis=0)
    order = np.lexsort((pts[:, 1], pts[:, 0]))
    pts = pts[order]
    if pts.shape[0] <= 2:
        return pts

    def cross(o, a, b):
        return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])

    lower: list[np.ndarray] = []
    for q in pts:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], q) <= 0:
            lower.pop()
        lower.append(q)
    upper: list[np.ndarray] = []
    for q in pts[::-1]:
        while len(upper) >= 2 and cross(upper[-2], upper[-1], q) <= 0:
            upper.pop()
        upper.append(q)
    return np.array(lower[:-1] + upper[:-1])


def _dist_to_convex_polygon(p: np.ndarray, hull: np.ndarray) -> np.ndarray:
    """Distance from points (n, 2) to a convex CCW polygon (0 inside)."""
    n = hull.shape[0]
    inside = np.ones(p.shape[0], dtype=bool)
    best = np.full(p.shape[0], np.inf)
    for i in range(n):
        a, b = hull[i], hull[(i + 1) % n]
        ab = b - a
        inside &= (ab[0] * (p[:, 1] - a[1]) - ab[1] * (p[:, 0] - a[0])) >= 0
        t = np.clip(((p - a) @ ab) / (ab @ ab), 0.0, 1.0)
        proj = a + t[:, None] * ab
        best = np.minimum(best, np.linalg.norm(p - proj, axis=1))
    return np.where(inside, 0.0, best)


def hull_clearance(
    domain: Domain,
    pts,
    hull_kind: str = "segmental",
    resolution: float | None = None,
    star_center=None,
) -> float:
    """Certified lower bound on dist(H, complement of D) for a hull H of the points.

    hull_kind is one of "convex", "segmental" (union of all segments between
    the points) or "star" (segments from star_center to every point).  The
    certificate samples the hull at spacing <= resolution and applies the
    1-Lipschitz clearance rule; 0 means "hull not certified inside D".
    """
    p = points_array(pts, domain)
    if p.shape[0] == 0:
        raise ValueError("hull of an empty set")
    if resolution is None:
        resolution = 1e-3 * domain.bounding_diameter()
    if resolution <= 0:
        raise ValueError("resolution must be positive")

    if hull_kind == "star":
        if star_center is None:
            raise ValueError("star hull needs star_center")
        z = np.asarray(star_center, dtype=float)
        if not contains(domain, z):
            raise ValueError("star center must be inside the domain")
        cert = min(
            certified_segment_clearance(domain, z, q, resolution) for q in p
        )
        return max(0.0, cert)

    if hull_kind == "segmental":
        return _segmental_clearance(domain, p, resolution)

    if hull_kind == "convex":
        if domain.dim != 2:
            # the segmental hull still connects every pair of the set, so the
            # downstream entropy bound stays valid in higher dimension
            warnings.warn(
                "convex hull clearance is 2-D only; falling back to the "
                "segmental hull (not convex-certified)",
                stacklevel=2,
            )
            return _segmental_clearance(domain, p, resolution)
        hull = convex_hull_2d(p)
        if hull.shape[0] <= 2:
            return _segmental_clearance(domain, hull, resolution)
        return _convex_region_clearance(domain, hull, resolution)

    raise ValueError(f"unknown hull kind: {hull_kind!r}")


def _segmental_clearance(domain: Domain, p: np.ndarray, resolution: float) -> float:
    n = p.shape[0]
    cert = float(domain.clearance(p).min())
    for i in range(n):
        for j in range(i + 1, n):
            cert = min(cert, certified_segment_clearance(domain, p[i], p[j], resolution))
    return max(0.0, cert)


def _convex_region_clearance(domain: Domain, hull: np.ndarray, h: float) -> float:
    """Grid cover of the convex polygon: lattice of spacing h, covering radius
    h/sqrt(2); keep lattice nodes within 0.75*h of the polygon."""
    lo = hull.min(axis=0) - h
    hi = hull.max(axis=0) + h
    ax = [np.arange(math.floor(l / h), math.floor(u / h) + 2) * h for l, u in zip(lo, hi)]
    gx, gy = np.meshgrid(*ax, indexing="ij")
    grid = np.column_stack([gx.ravel(), gy.ravel()])
    keep = _dist_to_convex_polygon(grid, hull) <= 0.75 * h
    grid = grid[keep]
    if grid.shape[0] == 0:
        return 0.0
    m = float(domain.clearance(grid).min())
    return max(0.0, m - h * math.sqrt(2.0) / 2.0)


def enclosing_ball(domain: Domain, center) -> float:
    """Smallest radius R with the domain inside Ball(center, R); center interior."""
    c = np.asarray(center, dtype=float)
    if not contains(domain, c):
        raise ValueError("enclosing ball center must be inside the domain")
    return domain.enclosing_radius(c)


def lattice_points(domain: Domain, step: float) -> np.ndarray:
    """Grid nodes at integer multiples of step, strictly interior to the domain."""
    if step <= 0:
        raise ValueError("step must be positive")
    lo, hi = domain.bounding_box()
    axes = [
        np.arange(math.ceil(l / step), math.floor(h / step) + 1) * step
        for l, h in zip(lo, hi)
    ]
    mesh = np.meshgrid(*axes, indexing="ij")
    grid = np.column_stack([m.ravel() for m in mesh])
    if grid.shape[0] == 0:
        return grid.reshape(0, domain.dim)
    return grid[domain.clearance(grid) > 0.0]


# ---------------------------------------------------------------------------
# file formats


def domain_from_dict(data: dict) -> Domain:
    dim = int(data["dim"])
    if dim < 2:
        raise ValueError("domain dimension must be >= 2")
    shape = data["shape"]
    kind = shape["type"]
    if kind == "ball":
        dom = Ball(np.asarray(shape["center"], dtype=float), float(shape["radius"]))
    elif kind == "box":
        dom = Box(np.asarray(shape["min"], dtype=float), np.asarray(shape["max"], dtype=float))
    elif kind == "polygon":
        if dim != 2:
            raise ValueError("polygon domains require dim = 2")
        dom = Polygon2D(np.asarray(shape["vertices"], dtype=float))
    elif kind == "union_of_balls":
        balls = shape["balls"]
        dom = UnionOfBalls(
            np.asarray([b["center"] for b in balls], dtype=float),
            np.asarray([b["radius"] for b in balls], dtype=float),
        )
    else:
        raise ValueError(f"unknown shape type: {kind!r}")
    if dom.dim != dim:
        raise ValueError(f"declared dim {dim} does not match shape dim {dom.dim}")
    return dom


def domain_to_dict(domain: Domain) -> dict:
    return {"dim": domain.dim, "shape": domain.to_dict()}


def load_domain(path) -> Domain:
    with open(path) as f:
        return domain_from_dict(json.load(f))


def dump_domain(domain: Domain, path) -> None:
    with open(path, "w") as f:
        json.dump(domain_to_dict(domain), f, indent=2)
        f.write("\n")


def load_point_set(path, domain: Domain) -> PointSet:
    with open(path) as f:
        data = json.load(f)
    return PointSet(np.asarray(data["points"], dtype=float), domain)


def dump_point_set(pts, path) -> None:
    p = points_array(pts)
    with open(path, "w") as f:
        json.dump({"points": p.tolist()}, f, indent=2)
        f.write("\n")
