import json
import math

import numpy as np
import pytest

from harnack.geometry import (
    Ball,
    Box,
    PointSet,
    Polygon2D,
    UnionOfBalls,
    contains,
    diameter,
    dist_to_complement,
    domain_from_dict,
    domain_to_dict,
    enclosing_ball,
    hull_clearance,
    lattice_points,
)

UNIT_DISK = Ball(np.zeros(2), 1.0)
UNIT_BOX = Box(np.array([-1.0, -1.0]), np.array([1.0, 1.0]))


class TestDistToComplement:
    def test_ball_radial(self):
        assert dist_to_complement(UNIT_DISK, (0.4, 0)) == pytest.approx(0.6)

    def test_box_min_face(self):
        assert dist_to_complement(UNIT_BOX, (0.5, 0)) == pytest.approx(0.5)

    def test_exterior_point_is_zero(self):
        assert dist_to_complement(UNIT_DISK, (2, 0)) == 0.0

    def test_boundary_is_zero(self):
        assert dist_to_complement(UNIT_DISK, (1, 0)) == 0.0

    def test_ball_center_equals_radius(self):
        for r in (0.5, 1.0, 3.7):
            b = Ball(np.array([2.0, -1.0]), r)
            assert dist_to_complement(b, b.center) == r

    def test_polygon(self):
        tri = Polygon2D(np.array([[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]]))
        assert dist_to_complement(tri, (1.0, 1.0)) == pytest.approx(1.0)
        assert dist_to_complement(tri, (5.0, 5.0)) == 0.0

    def test_union_of_balls(self):
        u = UnionOfBalls(np.array([[0.0, 0.0], [1.5, 0.0]]), np.array([1.0, 1.0]))
        assert dist_to_complement(u, (0.0, 0.0)) == pytest.approx(1.0)
        assert dist_to_complement(u, (1.5, 0.0)) == pytest.approx(1.0)
        # overlap region: max of per-ball depths is a valid lower bound
        assert dist_to_complement(u, (0.75, 0.0)) == pytest.approx(0.25)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            dist_to_complement(UNIT_DISK, (0.0, 0.0, 0.0))


class TestContains:
    def test_center(self):
        assert contains(UNIT_DISK, (0, 0))

    def test_boundary_excluded(self):
        assert not contains(UNIT_DISK, (1, 0))

    def test_box_corner_region(self):
        assert contains(UNIT_BOX, (0.99, -0.99))


class TestDiameter:
    def test_singleton(self):
        assert diameter([(0.0, 0.0)]) == 0.0

    def test_two_points(self):
        assert diameter([(-0.5, 0), (0.5, 0)]) == pytest.approx(1.0)

    def test_345_triangle(self):
        assert diameter([(0, 0), (3, 0), (0, 4)]) == pytest.approx(5.0)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            diameter(np.zeros((0, 2)))


class TestHullClearance:
    def test_segmental_box(self):
        res = 1e-3
        v = hull_clearance(UNIT_BOX, [(-0.5, 0), (0.5, 0)], "segmental", res)
        assert 0.5 - res / 2 <= v <= 0.5

    def test_convex_singleton(self):
        assert hull_clearance(UNIT_DISK, [(0.0, 0.0)], "convex", 1e-3) == 1.0

    def test_star_in_disk(self):
        res = 1e-3
        v = hull_clearance(
            UNIT_DISK, [(-0.5, 0), (0.5, 0)], "star", res, star_center=(0, 0)
        )
        assert 0.5 - res / 2 <= v <= 0.5

    def test_star_center_outside_rejected(self):
        with pytest.raises(ValueError, match="star center"):
            hull_clearance(UNIT_DISK, [(0.0, 0.0)], "star", 1e-3, star_center=(2, 0))

    def test_hull_outside_domain_gives_zero(self):
        u = UnionOfBalls(
            np.array([[0.0, 0.0], [0.0, 2.0], [2.0, 2.0], [2.0, 0.0]]),
            np.full(4, 1.1),
        )
        # the segment between opposite lobes passes near the uncovered middle
        assert hull_clearance(u, [(0.0, 0.0), (2.0, 2.0)], "segmental", 1e-2) == 0.0

    def test_finer_resolution_is_monotone(self):
        pts = [(-0.5, -0.2), (0.6, 0.1), (0.1, 0.55)]
        for kind in ("segmental", "convex"):
            vals = [
                hull_clearance(UNIT_BOX, pts, kind, res)
                for res in (0.2, 0.1, 0.05, 0.025)
            ]
            assert all(b >= a for a, b in zip(vals, vals[1:]))
        vals = [
            hull_clearance(UNIT_BOX, pts, "star", res, star_center=(0, 0))
            for res in (0.2, 0.1, 0.05, 0.025)
        ]
        assert all(b >= a for a, b in zip(vals, vals[1:]))

    def test_convex_below_segmental_plus_resolution(self):
        # conv S is a superset of the segmental hull, so its true clearance
        # cannot exceed the segmental one
        res = 0.01
        for pts in (
            [(-0.5, -0.5), (0.5, -0.5), (0.0, 0.5)],
            [(-0.3, 0.0), (0.3, 0.0), (0.0, 0.6), (0.1, -0.4)],
        ):
            cvx = hull_clearance(UNIT_BOX, pts, "convex", res)
            seg = hull_clearance(UNIT_BOX, pts, "segmental", res)
            assert cvx <= seg + res

    def test_high_dim_convex_falls_back(self):
        cube = Box(-np.ones(3), np.ones(3))
        pts = [(-0.5, 0, 0), (0.5, 0, 0)]
        with pytest.warns(UserWarning, match="not convex-certified"):
            v = hull_clearance(cube, pts, "convex", 1e-2)
        assert v == hull_clearance(cube, pts, "segmental", 1e-2)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            hull_clearance(UNIT_BOX, np.zeros((0, 2)), "segmental", 1e-3)


class TestEnclosingBall:
    def test_ball_from_center(self):
        assert enclosing_ball(UNIT_DISK, (0, 0)) == pytest.approx(1.0)

    def test_box_center(self):
        assert enclosing_ball(UNIT_BOX, (0, 0)) == pytest.approx(math.sqrt(2))

    def test_box_off_center(self):
        assert enclosing_ball(UNIT_BOX, (0.5, 0)) == pytest.approx(math.sqrt(3.25))

    def test_center_outside_rejected(self):
        with pytest.raises(ValueError):
            enclosing_ball(UNIT_DISK, (2, 0))

    def test_boundary_samples_within_radius(self):
        theta = np.linspace(0, 2 * np.pi, 256, endpoint=False)
        circle = np.column_stack([np.cos(theta), np.sin(theta)])
        cases = [
            (UNIT_DISK, circle, (0.3, -0.2)),
            (UNIT_BOX, np.column_stack([np.cos(theta), np.sin(theta)]) * 0, (0.5, 0)),
        ]
        # box boundary: walk the four edges
        t = np.linspace(-1, 1, 64)
        box_bdry = np.vstack(
            [
                np.column_stack([t, np.full_like(t, -1.0)]),
                np.column_stack([t, np.full_like(t, 1.0)]),
                np.column_stack([np.full_like(t, -1.0), t]),
                np.column_stack([np.full_like(t, 1.0), t]),
            ]
        )
        cases[1] = (UNIT_BOX, box_bdry, (0.5, 0))
        for dom, bdry, center in cases:
            r = enclosing_ball(dom, center)
            dist = np.linalg.norm(bdry - np.asarray(center), axis=1)
            assert np.all(dist <= r + 1e-12)


class TestLipschitz:
    @pytest.mark.parametrize(
        "domain",
        [
            UNIT_DISK,
            UNIT_BOX,
            Polygon2D(np.array([[0.0, 0.0], [3.0, 0.0], [3.0, 2.0], [1.0, 3.0], [0.0, 2.0]])),
            UnionOfBalls(np.array([[0.0, 0.0], [1.2, 0.0], [2.4, 0.3]]), np.array([1.0, 0.8, 0.9])),
        ],
    )
    def test_clearance_is_1_lipschitz(self, domain):
        rng = np.random.default_rng(7)
        lo, hi = domain.bounding_box()
        span = hi - lo
        p = lo + rng.random((400, 2)) * span * 1.2 - 0.1 * span
        q = lo + rng.random((400, 2)) * span * 1.2 - 0.1 * span
        cp = domain.clearance(p)
        cq = domain.clearance(q)
        gap = np.linalg.norm(p - q, axis=1)
        assert np.all(np.abs(cp - cq) <= gap + 1e-12)


class TestValidation:
    def test_clockwise_polygon_rejected(self):
        with pytest.raises(ValueError, match="counterclockwise"):
            Polygon2D(np.array([[0.0, 0.0], [0.0, 1.0], [1.0, 0.0]]))

    def test_self_intersecting_polygon_rejected(self):
        with pytest.raises(ValueError, match="simple"):
            Polygon2D(np.array([[0.0, 0.0], [4.0, 0.0], [4.0, 4.0], [2.0, -1.0], [0.0, 4.0]]))

    def test_disconnected_union_rejected(self):
        with pytest.raises(ValueError, match="connected"):
            UnionOfBalls(np.array([[0.0, 0.0], [5.0, 0.0]]), np.array([1.0, 1.0]))

    def test_point_set_requires_interior_points(self):
        with pytest.raises(ValueError, match="interior"):
            PointSet(np.array([[0.0, 0.0], [1.0, 0.0]]), UNIT_DISK)

    def test_degenerate_box_rejected(self):
        with pytest.raises(ValueError):
            Box(np.array([0.0, 0.0]), np.array([1.0, 0.0]))


class TestFileFormat:
    @pytest.mark.parametrize(
        "domain",
        [
            UNIT_DISK,
            UNIT_BOX,
            Polygon2D(np.array([[0.0, 0.0], [2.0, 0.0], [1.0, 2.0]])),
            UnionOfBalls(np.array([[0.0, 0.0], [1.0, 0.0]]), np.array([1.0, 1.0])),
        ],
    )
    def test_round_trip(self, domain):
        data = json.loads(json.dumps(domain_to_dict(domain)))
        dom2 = domain_from_dict(data)
        assert type(dom2) is type(domain)
        pts = np.array([[0.1, 0.2], [0.3, -0.1]])
        assert np.allclose(domain.clearance(pts), dom2.clearance(pts))

    def test_unknown_shape_rejected(self):
        with pytest.raises(ValueError, match="unknown shape"):
            domain_from_dict({"dim": 2, "shape": {"type": "torus"}})


class TestLattice:
    def test_nine_by_nine_inside_unit_box(self):
        nodes = lattice_points(UNIT_BOX, 0.2)
        assert nodes.shape == (81, 2)
        assert np.all(UNIT_BOX.clearance(nodes) > 0)
