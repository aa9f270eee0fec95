"""Seminorms, cone representations, membership, bases, hulls, and the LP core."""

import math

import numpy as np
import pytest

from conescal.cone_core import (
    BaseSet,
    Tolerances,
    abs_functional,
    base_set,
    bishop_phelps,
    cone_membership,
    dedupe_rows,
    dual_gauge,
    eval_seminorm,
    eval_seminorm_many,
    generated,
    halfspace,
    hull_S0,
    is_member,
    l1,
    l2,
    lineality,
    linf,
    max_abs_functionals,
    negate_cone,
    normlike_base,
    null_space,
    orthant,
    point,
    polytope,
    polytope_contains_point,
    polytope_contains_zero,
    polytopes_disjoint,
    psi_max_of_sublinear,
    ray_union,
    sample_cone_points,
    sample_interior_points,
    solve_lp,
    sum_abs_functionals,
)
from conescal.errors import (
    DegenerateSeminorm,
    InteriorUnsupported,
    UnsupportedRepresentation,
)

from conftest import pointed_generated_cone, seminorm_catalog


# ---------------------------------------------------------------------------
# seminorms
# ---------------------------------------------------------------------------

class TestSeminorms:
    def test_coordinate_norms(self):
        assert eval_seminorm(l1(), (1, -1)) == 2.0
        assert eval_seminorm(l2(), (3, 4)) == 5.0
        assert eval_seminorm(linf(), (1, -3)) == 3.0
        assert eval_seminorm(l1(), (0, 0)) == 0.0

    def test_functional_kinds(self):
        assert eval_seminorm(abs_functional((1, 1)), (1, -1)) == 0.0
        assert eval_seminorm(abs_functional((1, 1)), (2, 1)) == 3.0
        assert eval_seminorm(max_abs_functionals([(1, 0), (0, 1)]), (1, -2)) == 2.0
        assert eval_seminorm(sum_abs_functionals([(1, 0), (0, 1)]), (1, -2)) == 3.0

    def test_psi_max_of_sublinear(self):
        # cs = unit coordinate rows: psi_max equals the sup-norm
        psi = psi_max_of_sublinear([(1, 0), (0, 1)])
        for y in [(1, -2), (3, 1), (-1, -1), (0, 0)]:
            assert eval_seminorm(psi, y) == eval_seminorm(linf(), y)

    def test_psi_max_nonnegative_even_for_skew_rows(self):
        psi = psi_max_of_sublinear([(1, 2), (-3, 0.5)])
        rng = np.random.default_rng(0)
        Y = rng.standard_normal((200, 2)) * 3
        assert np.all(eval_seminorm_many(psi, Y) >= 0.0)

    def test_absolute_homogeneity_and_triangle(self):
        rng = np.random.default_rng(1)
        for psi in seminorm_catalog(3):
            for _ in range(50):
                y = rng.standard_normal(3)
                z = rng.standard_normal(3)
                t = rng.uniform(-4, 4)
                assert eval_seminorm(psi, t * y) == pytest.approx(
                    abs(t) * eval_seminorm(psi, y), abs=1e-10, rel=1e-10)
                assert (eval_seminorm(psi, y + z)
                        <= eval_seminorm(psi, y) + eval_seminorm(psi, z) + 1e-10)

    def test_eval_many_matches_scalar(self):
        rng = np.random.default_rng(2)
        Y = rng.standard_normal((64, 3))
        for psi in seminorm_catalog(3):
            vals = eval_seminorm_many(psi, Y)
            for i in range(Y.shape[0]):
                assert vals[i] == pytest.approx(eval_seminorm(psi, Y[i]), abs=1e-12)

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError):
            eval_seminorm(abs_functional((1, 0)), (1, 2, 3))

    def test_dual_gauge(self):
        assert dual_gauge(l2(), (3, 4)) == pytest.approx(5.0)
        assert dual_gauge(l1(), (3, -7)) == pytest.approx(7.0)   # dual of l1 is linf
        assert dual_gauge(linf(), (3, -7)) == pytest.approx(10.0)
        # degenerate: unbounded off the functional's span
        assert dual_gauge(abs_functional((1, 0)), (0, 1)) == math.inf
        assert dual_gauge(abs_functional((1, 0)), (2, 0)) == pytest.approx(2.0)
        # LP path agrees with the closed form on an equivalent description
        psi = max_abs_functionals(np.eye(2))  # equals linf
        assert dual_gauge(psi, (3, -7)) == pytest.approx(10.0, abs=1e-7)


# ---------------------------------------------------------------------------
# cone membership
# ---------------------------------------------------------------------------

class TestMembership:
    def test_orthant(self):
        K = orthant(2)
        assert cone_membership(K, (1, 2)) == "Interior"
        assert cone_membership(K, (0, 2)) == "Boundary"
        assert cone_membership(K, (0, 0)) == "Boundary"
        assert cone_membership(K, (-1e-3, 2)) == "Outside"
        assert is_member("Boundary") and is_member("Member")
        assert not is_member("Outside")

    def test_halfspace(self):
        K = halfspace([(1, 0), (1, 1)])
        assert cone_membership(K, (1, -0.5)) == "Interior"
        assert cone_membership(K, (0, 1)) == "Boundary"
        assert cone_membership(K, (-1, 0)) == "Outside"

    def test_generated(self):
        K = generated([(1, 0), (1, 1)])
        assert cone_membership(K, (2, 1)) == "Member"
        assert cone_membership(K, (1, 1)) == "Member"
        assert cone_membership(K, (0, 0)) == "Member"
        assert cone_membership(K, (0, 1)) == "Outside"
        assert cone_membership(K, (-1, 0)) == "Outside"
        with pytest.raises(InteriorUnsupported):
            cone_membership(K, (2, 1), need_interior=True)

    def test_ray_union(self):
        K = ray_union([(1, 0), (0, 1)])
        assert cone_membership(K, (3, 0)) == "Member"
        assert cone_membership(K, (0, 0)) == "Member"
        assert cone_membership(K, (1, 1)) == "Outside"  # not convexified
        with pytest.raises(InteriorUnsupported):
            cone_membership(K, (1, 0), need_interior=True)

    def test_bishop_phelps(self):
        C = bishop_phelps((2, 2), 1.0, l1())
        # margin(y) = <(2,2),y> - |y|_1
        assert cone_membership(C, (1, 1)) == "Interior"       # 4 - 2 > 0
        assert cone_membership(C, (1, -1 / 3)) == "Boundary"  # 4/3 - 4/3
        assert cone_membership(C, (1, -1)) == "Outside"       # 0 - 2 < 0
        assert cone_membership(C, (-1, 0)) == "Outside"
        assert cone_membership(C, (0, 0)) == "Boundary"

    def test_membership_scale_invariance(self):
        C = bishop_phelps((2, 2), 1.0, l2())
        y = np.array([3.0, 1.0])
        s_small = cone_membership(C, y * 1e-8)
        s_big = cone_membership(C, y * 1e8)
        assert s_small == s_big == cone_membership(C, y)

    def test_homogeneity_on_samples(self):
        rng = np.random.default_rng(3)
        cones = [orthant(3), halfspace([(1, 0, 0), (1, 1, 0)]),
                 generated([(1, 0, 0), (1, 1, 0), (1, 0, 1)]),
                 ray_union([(1, 0, 0), (0, 1, 1)]),
                 bishop_phelps((1, 1, 1), 0.5, l2())]
        for K in cones:
            pts = sample_cone_points(K, l2(), 20, seed=5)
            for y in pts:
                t = float(rng.uniform(0.1, 5.0))
                assert is_member(cone_membership(K, t * y))
            assert is_member(cone_membership(K, np.zeros(3)))

    def test_negate_cone(self):
        for K in [orthant(2), halfspace([(1, 2)]), generated([(1, 0), (1, 1)]),
                  ray_union([(1, 0)]), bishop_phelps((2, 2), 1.0, l1())]:
            nK = negate_cone(K)
            for y in [(1, 0.5), (-1, -0.5), (0.3, -2), (0, 0)]:
                y = np.array(y, dtype=float)
                assert (is_member(cone_membership(K, y))
                        == is_member(cone_membership(nK, -y)))


# ---------------------------------------------------------------------------
# lineality, bases, hulls
# ---------------------------------------------------------------------------

class TestLinealityAndBases:
    def test_lineality(self):
        assert lineality(orthant(3)).shape[0] == 0
        L = lineality(halfspace([(1, 0)]))  # half-plane: line along e2
        assert L.shape[0] == 1
        assert abs(L[0] @ np.array([1.0, 0.0])) < 1e-9
        # full-measure BP cone with degenerate seminorm has a line
        C = bishop_phelps((1, 0), 1.0, abs_functional((1, 0)))
        L = lineality(C)
        assert L.shape[0] == 1
        with pytest.raises(UnsupportedRepresentation):
            lineality(generated([(1, 0)]))

    def test_normlike_base_orthant_l1(self):
        base = normlike_base(orthant(3), l1())
        assert base.exactness == "ExactVertices"
        got = sorted(map(tuple, np.round(base.points, 9)))
        assert got == sorted(map(tuple, np.eye(3)))

    def test_normlike_base_generated(self):
        K = generated([(3, 0), (1, 1)])
        base = normlike_base(K, l2())
        assert base.exactness == "ExactVertices"
        for p in base.points:
            assert eval_seminorm(l2(), p) == pytest.approx(1.0, abs=1e-9)
            assert is_member(cone_membership(K, p))

    def test_normlike_base_bp_sampled(self):
        C = bishop_phelps((2, 2), 1.0, l2())
        base = normlike_base(C, l2(), seed=4)
        assert base.exactness == "Sampled"
        assert base.points.shape[0] >= 8
        for p in base.points:
            assert eval_seminorm(l2(), p) == pytest.approx(1.0, abs=1e-8)
            assert is_member(cone_membership(C, p))

    def test_normlike_base_positivity_required(self):
        # abs_functional((1,0)) vanishes on the ray (0,1) inside the orthant
        with pytest.raises(DegenerateSeminorm):
            normlike_base(orthant(2), abs_functional((1, 0)))

    def test_base_set_validation(self):
        with pytest.raises(ValueError):
            base_set([(2.0, 0.0)], "ExactVertices", l1())  # psi = 2, not 1

    def test_hull_s0_and_zero(self):
        base = normlike_base(orthant(2), l1())
        S0 = hull_S0(base, True)
        S = hull_S0(base, False)
        assert S0.vertices.shape[0] == 3 and S.vertices.shape[0] == 2
        assert polytope_contains_zero(S0)
        assert not polytope_contains_zero(S)
        inside, d = polytope_contains_point(S0, np.array([0.2, 0.2]), 1e-9)
        assert inside and d <= 1e-9
        outside, d = polytope_contains_point(S0, np.array([1.0, 1.0]), 1e-9)
        assert not outside and d > 0.1

    def test_polytopes_disjoint(self):
        P = polytope([(0, 0), (1, 0), (0, 1)])
        Q = polytope([(2, 2), (3, 2), (2, 3)])
        flag, info = polytopes_disjoint(P, Q)
        assert flag
        R = polytope([(0.5, 0.5), (3, 3)])
        flag, info = polytopes_disjoint(P, R)
        assert not flag
        assert "point" in info or info  # common-point witness reported

    def test_dedupe_rows(self):
        rows = np.array([[1.0, 0.0], [1.0, 1e-12], [2.0, 0.0]])
        assert dedupe_rows(rows, 1e-9).shape[0] == 2

    def test_null_space(self):
        N = null_space(np.array([[1.0, 1.0, 0.0]]))
        assert N.shape[0] == 2
        assert np.allclose(N @ np.array([1.0, 1.0, 0.0]), 0.0, atol=1e-12)


# ---------------------------------------------------------------------------
# sampling
# ---------------------------------------------------------------------------

class TestSampling:
    def test_sample_cone_points_membership(self):
        rng = np.random.default_rng(7)
        for trial in range(5):
            K, _ = pointed_generated_cone(rng, 3)
            pts = sample_cone_points(K, l2(), 50, seed=trial)
            assert pts.shape[0] == 50
            for y in pts:
                assert is_member(cone_membership(K, y))

    def test_sample_interior_points(self):
        K = orthant(3)
        pts = sample_interior_points(K, l2(), 25, seed=1)
        assert pts.shape[0] == 25
        for y in pts:
            assert cone_membership(K, y, need_interior=True) == "Interior"
        C = bishop_phelps((2, 2), 1.0, l2())
        for y in sample_interior_points(C, l2(), 25, seed=2):
            assert cone_membership(C, y, need_interior=True) == "Interior"

    def test_sample_interior_empty_interior(self):
        # the degenerate pair has an empty strict cone: no interior samples
        C = bishop_phelps((1, 1), 1.0, l1())
        pts = sample_interior_points(C, l1(), 10, seed=0)
        assert pts.shape[0] == 0

    def test_determinism(self):
        K = orthant(3)
        a = sample_cone_points(K, l2(), 30, seed=11)
        b = sample_cone_points(K, l2(), 30, seed=11)
        assert np.array_equal(a, b)


# ---------------------------------------------------------------------------
# LP solver
# ---------------------------------------------------------------------------

class TestSolveLP:
    def test_optimal(self):
        # max x+y st x<=1, y<=2, x,y>=0  -> min -(x+y), optimum -3
        res = solve_lp(c=[-1, -1], A_ub=[[1, 0], [0, 1]], b_ub=[1, 2])
        assert res.status == "optimal"
        assert res.objective == pytest.approx(-3.0, abs=1e-9)
        assert np.allclose(res.x, [1.0, 2.0], atol=1e-9)

    def test_infeasible(self):
        res = solve_lp(c=[1], A_ub=[[1], [-1]], b_ub=[-2, 1])  # x<=-2, x>=-1
        assert res.status == "infeasible"

    def test_unbounded(self):
        res = solve_lp(c=[-1], A_ub=[[-1]], b_ub=[0])  # min -x, x >= 0
        assert res.status == "unbounded"

    def test_equality_constraints(self):
        # min x1 st x1 + x2 = 1, x >= 0 -> 0 at (0,1)
        res = solve_lp(c=[1, 0], A_eq=[[1, 1]], b_eq=[1])
        assert res.status == "optimal"
        assert res.objective == pytest.approx(0.0, abs=1e-9)

    def test_free_variables_via_bounds(self):
        # min x st x >= -5 (free lower bound handled by bounds arg)
        res = solve_lp(c=[1], bounds=[(-5, None)])
        assert res.status == "optimal"
        assert res.objective == pytest.approx(-5.0, abs=1e-9)

    def test_degenerate_cycling_guard(self):
        # classic degenerate instance; Bland's rule must terminate
        res = solve_lp(
            c=[-0.75, 150, -0.02, 6],
            A_ub=[[0.25, -60, -0.04, 9], [0.5, -90, -0.02, 3], [0, 0, 1, 0]],
            b_ub=[0, 0, 1],
        )
        assert res.status == "optimal"
        assert res.objective == pytest.approx(-0.05, abs=1e-9)


def test_point_validation():
    with pytest.raises(ValueError):
        point((1.0, math.nan))
    with pytest.raises(ValueError):
        point((1.0, math.inf))
    with pytest.raises(ValueError):
        point((), dim=None)
