import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

import sympy_oracle as so
from conftest import dq_polys, motions, nonzero_rpolys, rpolys
from torsemotion.demos import EXAMPLE1_REDUCED, EXAMPLE4_H, EXAMPLE4_MOTION, EXAMPLE4_PLANE, EXAMPLE4_Q
from torsemotion.dq import (
    DQ_ONE,
    DualNorm,
    DualQuat,
    DualQuatPoly,
    PlanePoly,
    PointPoly,
    Quat,
    QuatPoly,
    act_on_plane,
    act_on_point,
    dq_norm,
    incidence,
    involutions,
    is_motion_polynomial,
    mobius_reparametrize,
    plane_trajectory,
    qpoly_divrem,
    reduce,
    rgcd,
    study_defect,
)
from torsemotion.errors import (
    NonInvertibleLeadingCoefficient,
    NotAMotionPolynomial,
    SingularMobius,
    ZeroPolynomial,
)
from torsemotion.ring import ONE, ZERO, RPoly, T

I, J, K = Quat(0, 1), Quat(0, 0, 1), Quat(0, 0, 0, 1)


def dq(p=(), d=()):
    """Dual quaternion polynomial from component tuples (1, i, j, k)."""
    pad = lambda xs: [RPoly([x]) if not isinstance(x, RPoly) else x for x in xs] + [ZERO] * (4 - len(xs))  # noqa: E731
    return DualQuatPoly(QuatPoly(*pad(p)), QuatPoly(*pad(d)))


def plane_fixing(e0, e3, e5, e6):
    return dq((e0, 0, 0, e3), (0, e5, e6, 0))


class TestQuat:
    def test_conjugate_and_norm(self):
        q = Quat(1, 2, 3, 4)
        assert q.conj() == Quat(1, -2, -3, -4)
        assert q.norm() == 30
        assert q * q.inverse() == Quat(1)

    def test_hamilton_rules(self):
        assert I * J == K and J * K == I and K * I == J
        assert J * I == -K

    def test_dual_unit_squares_to_zero(self):
        e = DualQuat(Quat(0), Quat(1))
        assert (e * e).is_zero()

    def test_dual_product_rule(self):
        a = DualQuat(Quat(1, 2), Quat(0, 0, 3))
        b = DualQuat(Quat(0, 1, 1), Quat(2))
        assert a * b == DualQuat(a.primal * b.primal, a.primal * b.dual + a.dual * b.primal)


class TestInvolutions:
    def test_conjugate(self):
        h = DualQuatPoly.const(DualQuat(Quat(1), K))
        assert involutions(h).conjugate == DualQuatPoly.const(DualQuat(Quat(1), -K))

    def test_eps_conjugate(self):
        h = DualQuatPoly.const(DualQuat(I, J))
        assert involutions(h).eps_conjugate == DualQuatPoly.const(DualQuat(I, -J))

    def test_linear_factor(self):
        c = dq((T, -1))
        assert c.conj() == dq((T, 1))
        assert c * c.conj() == dq((T**2 + 1,))

    def test_parts_add_up(self):
        h = dq((1, 2, 3, 4), (5, 6, 7, 8))
        inv = involutions(h)
        assert inv.vector_part + inv.scalar_part == h
        assert inv.scalar_part == dq((1,), (5,))

    @settings(max_examples=25)
    @given(dq_polys(3), dq_polys(3))
    def test_anti_homomorphism(self, a, b):
        assert (a * b).conj() == b.conj() * a.conj()

    @settings(max_examples=25)
    @given(dq_polys(3), dq_polys(3))
    def test_product_matches_sympy_quaternions(self, a, b):
        assert a * b == so.from_dq(so.dq_mul(so.dq(a), so.dq(b)))


class TestNorm:
    def test_linear_rotation(self):
        assert dq_norm(dq((T, -1))) == DualNorm(T**2 + 1, ZERO)

    def test_plane_fixing_translation(self):
        assert dq_norm(plane_fixing(1, 0, T**2 - 3, 5 * T)) == DualNorm(ONE, ZERO)

    def test_example_motion(self):
        n = dq_norm(EXAMPLE4_MOTION)
        assert n.dual == ZERO
        # the primal norm is N(Q) h^2 where Q is the degree-1 core
        assert n.primal == EXAMPLE4_Q.norm() * EXAMPLE4_H**2
        assert n.primal == 3 * (T**2 - 2 * T + 2) * EXAMPLE4_H**2
        c = so.dq(EXAMPLE4_MOTION)
        oracle = so.from_dq(so.dq_mul(c, so.dq_conj(c)))
        assert oracle.primal.c[0] == n.primal

    @settings(max_examples=25)
    @given(dq_polys(3), dq_polys(3))
    def test_multiplicative(self, a, b):
        assert dq_norm(a * b) == dq_norm(a) * dq_norm(b)


class TestMotionPredicate:
    def test_identity(self):
        assert is_motion_polynomial(DQ_ONE)

    def test_zero_primal(self):
        check = is_motion_polynomial(dq((), (0, 1)))
        assert not check and check.reason == "ZERO_PRIMAL_PART"

    def test_study_violation(self):
        check = is_motion_polynomial(dq((1,), (1,)))
        assert not check and check.reason == "STUDY_CONDITION"

    def test_example_motion(self):
        assert is_motion_polynomial(EXAMPLE4_MOTION)

    @given(motions(3), motions(3))
    def test_products_of_motions(self, a, b):
        assert study_defect(a).is_zero() and study_defect(b).is_zero()
        assert is_motion_polynomial(a * b)


class TestDivision:
    def test_central_divisor(self):
        F = dq((T**2, T))
        for side in ("left", "right"):
            assert qpoly_divrem(F, dq((T,)), side) == (dq((T, 1)), DualQuatPoly())

    def test_real_divisor_sides_agree(self):
        G = dq((T**2 - 6 * T + 10,))
        F = EXAMPLE4_MOTION * dq((T, 1, 0, 2), (0, 3))
        assert qpoly_divrem(F, G, "left") == qpoly_divrem(F, G, "right")

    def test_sides_differ_for_quaternion_divisor(self):
        a, b = dq((T, -1)), dq((T, 0, -1))
        F = a * b
        assert qpoly_divrem(F, b, "right") == (a, DualQuatPoly())
        q, r = qpoly_divrem(F, b, "left")
        assert F == b * q + r
        assert r == dq((0, 0, 0, 2))

    def test_non_invertible_leading_coefficient(self):
        with pytest.raises(NonInvertibleLeadingCoefficient):
            qpoly_divrem(dq((T**2,)), dq((1,), (T,)))

    @settings(max_examples=25)
    @given(dq_polys(4), motions(2), st.sampled_from(["left", "right"]))
    def test_reconstruction(self, F, G, side):
        q, r = qpoly_divrem(F, G, side)
        assert F == (q * G if side == "right" else G * q) + r
        assert r.degree < G.degree

    @settings(max_examples=25)
    @given(dq_polys(4), motions(2), st.sampled_from(["left", "right"]))
    def test_uniqueness(self, F, G, side):
        q, r = qpoly_divrem(F, G, side)
        q2 = q + DQ_ONE
        r2 = F - (q2 * G if side == "right" else G * q2)
        assert r2.degree >= G.degree


class TestReduction:
    def test_example_vector_part(self):
        assert rgcd(PlanePoly(ZERO, *EXAMPLE4_PLANE.vector)) == EXAMPLE4_H

    def test_already_reduced(self):
        assert rgcd(dq((0, 0, 0, 1), (T,))) == ONE
        w = dq((0, 0, 0, 1), (T,))
        assert reduce(w) == (w, ONE)

    def test_explicit_factor(self):
        assert rgcd(dq((0, T**2 + 1), (0, 0, T**2 + 1))) == T**2 + 1

    def test_planted_factor(self):
        w = EXAMPLE4_PLANE.scale(T - 1)
        assert reduce(w) == (EXAMPLE4_PLANE, T - 1)
        assert reduce(EXAMPLE1_REDUCED.scale(T - 1)) == (EXAMPLE1_REDUCED, T - 1)

    def test_zero(self):
        with pytest.raises(ZeroPolynomial):
            rgcd(DualQuatPoly())

    @given(dq_polys(3), nonzero_rpolys(2))
    def test_reduce_properties(self, w, f):
        if w.is_zero():
            return
        red, g = reduce(w * f)
        assert red * g == w * f
        assert rgcd(red) == ONE
        assert g.lc == 1


class TestActions:
    def test_identity_on_point(self):
        x = PointPoly(ONE, T, ONE, T**2)
        assert act_on_point(DQ_ONE, x) == x

    def test_translation_of_origin(self):
        C = dq((1,), (0, Fraction(-1, 2)))
        assert act_on_point(C, PointPoly()) == PointPoly(ONE, ONE, ZERO, ZERO)

    def test_rotation_of_point(self):
        x = act_on_point(dq((T, -1)), PointPoly(ONE, ZERO, ONE, ZERO))
        assert x.x0 == T**2 + 1
        assert x.x1 == ZERO
        assert x.x2 * x.x2 + x.x3 * x.x3 == (T**2 + 1) ** 2

    def test_requires_motion(self):
        with pytest.raises(NotAMotionPolynomial):
            act_on_point(dq((1,), (1,)), PointPoly())

    def test_identity_on_plane(self):
        assert act_on_plane(DQ_ONE, PlanePoly(u3=ONE)) == PlanePoly(u3=ONE)

    def test_plane_fixing_elements(self):
        E = plane_fixing(2, 3, 5, -7)
        assert plane_trajectory(E) == PlanePoly(u3=RPoly([13]))

    def test_example_motion(self):
        assert plane_trajectory(EXAMPLE4_MOTION) == EXAMPLE4_PLANE.scale(EXAMPLE4_H)

    def test_trajectory_of_rotation(self):
        assert plane_trajectory(dq((T, -1))) == PlanePoly(ZERO, ZERO, 2 * T, T**2 - 1)

    @settings(max_examples=25)
    @given(motions(3))
    def test_trajectory_matches_sympy(self, C):
        assert plane_trajectory(C) == so.trajectory(C)

    @given(motions(2), motions(2))
    def test_composition_convention(self, C1, C2):
        # acting by C1 first and then by C2 is the action of the product C2*C1
        w = PlanePoly(T, ONE, ZERO, T - 2)
        x = PointPoly(ONE, T, ZERO, ONE)
        assert act_on_plane(C2, act_on_plane(C1, w)) == act_on_plane(C2 * C1, w)
        assert act_on_point(C2, act_on_point(C1, x)) == act_on_point(C2 * C1, x)

    @given(motions(3), st.tuples(*[st.fractions(-3, 3, max_denominator=3)] * 5), st.fractions(-2, 2, max_denominator=4))
    def test_incidence_preserved(self, C, values, tau):
        x1, x2, x3, u1, u2 = values
        u3 = ONE
        x = PointPoly(ONE, RPoly([x1, 1]), RPoly([x2]), RPoly([x3]))
        u0 = -(x.x1 * u1 + x.x2 * u2 + x.x3 * u3)
        w = PlanePoly(u0, RPoly([u1]), RPoly([u2]), u3)
        assert incidence(x, w).is_zero()
        xs, ws = act_on_point(C, x), act_on_plane(C, w)
        assert incidence(xs, ws).is_zero()
        assert sum(a * b for a, b in zip(xs(tau), ws(tau))) == 0

    @given(motions(3), rpolys(2), rpolys(2), rpolys(2), rpolys(2))
    def test_plane_fixing_right_factor_scales_trajectory(self, C, e0, e3, e5, e6):
        E = plane_fixing(e0, e3, e5, e6)
        if (e0 * e0 + e3 * e3).is_zero():
            return
        assert plane_trajectory(C * E) == plane_trajectory(C).scale(e0 * e0 + e3 * e3)


class TestMobius:
    def test_identity(self):
        assert mobius_reparametrize(EXAMPLE4_PLANE, 1, 0, 0, 1) == EXAMPLE4_PLANE

    def test_inversion_reverses(self):
        w = PlanePoly(ONE, T, ZERO, ZERO)
        assert mobius_reparametrize(w, 0, 1, 1, 0) == PlanePoly(T, ONE, ZERO, ZERO)

    def test_fractional_linear(self):
        w = PlanePoly(T, T**2 - 1, ZERO, ZERO)
        assert mobius_reparametrize(w, 1, 1, 1, -1) == PlanePoly(T**2 - 1, 4 * T, ZERO, ZERO)

    def test_singular(self):
        with pytest.raises(SingularMobius):
            mobius_reparametrize(EXAMPLE4_PLANE, 1, 2, 2, 4)

    @given(motions(3), st.integers(-3, 3), st.integers(1, 3))
    def test_commutes_with_trajectory(self, C, beta, delta):
        # substituting into the motion substitutes into its trajectory
        a, b, c, d = 1, beta, 1, delta + beta
        n = int(C.degree)
        lhs = plane_trajectory(mobius_reparametrize(C, a, b, c, d))
        rhs = mobius_reparametrize(plane_trajectory(C), a, b, c, d, degree=2 * n)
        assert lhs == rhs


def test_point_action_matches_sympy():
    rng = random.Random(5)
    from torsemotion.random_motions import random_motion_polynomial

    C = random_motion_polynomial(rng, 2)
    x = PointPoly(ONE, T, ONE - T, RPoly([2]))
    c = so.dq(C)
    xq = so.dq(x.to_dq())
    expected = so.from_dq(so.dq_mul(so.dq_mul(so.dq_eps_conj(c), xq), so.dq_conj(c)))
    assert act_on_point(C, x) == PointPoly.from_dq(expected)
    assert sympy.Symbol("t") == so.t
