from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import nonzero_rpolys, rpolys
from sympy_oracle import expr, t
from torsemotion.errors import (
    BothZero,
    DivisionByZeroPoly,
    NotCoprime,
    NotIrreducible,
    NotQuadratic,
    ZeroPolynomial,
)
from torsemotion.ring import (
    NEG_INF,
    ONE,
    ZERO,
    CPoly,
    RPoly,
    T,
    factor_over_rationals,
    gaussian_quadratic_roots,
    mod_inverse,
    poly_sqrt,
    real_root_count,
    real_root_count_in,
    rpoly_divrem,
    rpoly_gcd,
    squarefree_decompose,
)

G_EX = T**2 * (T - 1) ** 3 * (T**2 + 1)


def P(*coeffs):
    return RPoly(coeffs)


class TestBasics:
    def test_zero_degree_is_sentinel(self):
        assert ZERO.degree == NEG_INF
        assert ZERO.degree < 0 and ZERO.degree != -1

    def test_trailing_zeros_stripped(self):
        assert P(1, 2, 0, 0).coeffs == (1, 2)
        assert P(0, 0).is_zero()

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            RPoly([0.5])

    def test_evaluation_and_composition(self):
        p = T**2 - 1
        assert p(Fraction(1, 2)) == Fraction(-3, 4)
        assert p(T + 1) == T**2 + 2 * T

    def test_str(self):
        assert str(T**2 - 6 * T + 10) == "t^2 - 6*t + 10"
        assert str(-Fraction(1, 3) * T) == "-1/3*t"


class TestDivision:
    def test_difference_of_squares(self):
        assert rpoly_divrem(T**2 - 1, T - 1) == (T + 1, ZERO)

    def test_monomials(self):
        assert rpoly_divrem(T**3, T**2) == (T, ZERO)

    def test_with_remainder(self):
        assert rpoly_divrem(T**4 + 1, T**2 + 1) == (T**2 - 1, P(2))

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZeroPoly):
            rpoly_divrem(T, ZERO)

    @given(rpolys(6), nonzero_rpolys(4))
    def test_reconstruction(self, f, g):
        q, r = rpoly_divrem(f, g)
        assert q * g + r == f
        assert r.degree < g.degree

    @given(rpolys(6), nonzero_rpolys(4))
    def test_matches_sympy(self, f, g):
        q, r = rpoly_divrem(f, g)
        sq, sr = sympy.div(expr(f), expr(g), t)
        assert sympy.expand(expr(q) - sq) == 0
        assert sympy.expand(expr(r) - sr) == 0


class TestGcd:
    def test_common_factor(self):
        assert rpoly_gcd(T**2 - 1, T - 1) == T - 1

    def test_coprime(self):
        assert rpoly_gcd(T**2 + 1, T**2 - 1) == ONE

    def test_factor_of_example_polynomial(self):
        assert rpoly_gcd(G_EX, T**2 * (T - 1)) == T**3 - T**2

    def test_both_zero(self):
        with pytest.raises(BothZero):
            rpoly_gcd(ZERO, ZERO)

    @given(nonzero_rpolys(5), nonzero_rpolys(5))
    def test_matches_sympy(self, f, g):
        ours = rpoly_gcd(f, g)
        theirs = sympy.Poly(sympy.gcd(expr(f), expr(g)), t).monic()
        assert sympy.expand(expr(ours) - theirs.as_expr()) == 0


class TestSquareFree:
    def test_example_polynomial(self):
        parts = dict((f, m) for f, m in squarefree_decompose(G_EX).parts)
        assert parts == {T: 2, T - 1: 3, T**2 + 1: 1}

    def test_irreducible(self):
        assert squarefree_decompose(T**2 + 1).parts == ((T**2 + 1, 1),)

    def test_square(self):
        assert squarefree_decompose((T**2 - 2) ** 2).parts == ((T**2 - 2, 2),)

    def test_zero(self):
        with pytest.raises(ZeroPolynomial):
            squarefree_decompose(ZERO)

    @given(st.lists(st.tuples(nonzero_rpolys(2), st.integers(1, 3)), max_size=3), st.fractions(1, 5))
    def test_reconstruction_and_coprimality(self, pieces, c):
        p = RPoly([c])
        for f, m in pieces:
            p = p * f**m
        d = squarefree_decompose(p)
        assert d.expand() == p
        for i, (f, _) in enumerate(d.parts):
            assert rpoly_gcd(f, f.derivative()) == ONE
            for g, _ in d.parts[i + 1 :]:
                assert rpoly_gcd(f, g) == ONE


class TestRealRoots:
    def test_examples(self):
        assert real_root_count(T**2 + 1) == 0
        assert real_root_count(T**2 - 2) == 2
        assert real_root_count(3 * T**2 - 6 * T + 5) == 0

    def test_counts_distinct_roots(self):
        assert real_root_count(G_EX) == 2

    def test_interval(self):
        assert real_root_count_in(T**2 - 2, Fraction(0), Fraction(2)) == 1

    @given(nonzero_rpolys(8))
    def test_matches_root_isolation(self, p):
        # sympy isolates real roots with continued fractions, an unrelated algorithm
        oracle = 0 if p.degree <= 0 else len(sympy.Poly(expr(p), t).intervals())
        assert real_root_count(p) == oracle


class TestFactorization:
    def test_example_polynomial(self):
        fact = factor_over_rationals(G_EX)
        assert fact.content == 1
        assert set(fact.factors) == {(T, 2), (T - 1, 3), (T**2 + 1, 1)}

    def test_irreducible_quadratic(self):
        assert factor_over_rationals(T**2 - 6 * T + 10).factors == ((T**2 - 6 * T + 10, 1),)

    def test_sophie_germain(self):
        fact = factor_over_rationals(T**4 + 4)
        assert set(fact.factors) == {(T**2 - 2 * T + 2, 1), (T**2 + 2 * T + 2, 1)}
        assert (T**2 - 2 * T + 2) * (T**2 + 2 * T + 2) == T**4 + 4

    def test_flags_high_degree(self):
        assert factor_over_rationals(T**3 - 2).flagged == (T**3 - 2,)

    @given(nonzero_rpolys(6))
    def test_reconstruction(self, p):
        assert factor_over_rationals(p).expand() == p


class TestSquareRoot:
    def test_square(self):
        assert poly_sqrt((T**2 + 1) ** 2) == T**2 + 1

    def test_not_square(self):
        assert poly_sqrt(T**2 + 1) is None

    def test_irrational_leading_coefficient(self):
        assert poly_sqrt(2 * T**2) is None

    def test_vector_norm_of_kinematic_example(self):
        v1, v2, v3 = 2 * (T**2 - 3 * T + 1), -2 * (T**2 - 2 * T + 2), -(T**2 + 2 * T - 4)
        n = v1 * v1 + v2 * v2 + v3 * v3
        s = poly_sqrt(n)
        assert s is not None and s * s == n and s.lc == 3

    @given(nonzero_rpolys(6))
    def test_recovers_root(self, s):
        r = poly_sqrt(s * s)
        assert r in (s, -s) and r.lc > 0


class TestModInverse:
    def test_example_value(self):
        assert mod_inverse(-(T**2 + 2 * T - 4), T**2 - 4 * T + 5) == Fraction(2, 15) * T - Fraction(1, 3)

    def test_unit(self):
        assert mod_inverse(ONE, T**2) == ONE

    def test_t_modulo_t_squared_plus_one(self):
        assert mod_inverse(T, T**2 + 1) == -T

    def test_not_coprime(self):
        with pytest.raises(NotCoprime):
            mod_inverse(T - 1, T**2 - 1)

    @given(nonzero_rpolys(4), nonzero_rpolys(4))
    def test_inverse_property(self, a, m):
        if m.degree < 1:
            return
        try:
            b = mod_inverse(a, m)
        except NotCoprime:
            assert rpoly_gcd(a, m) != ONE
            return
        assert (a * b) % m == ONE
        assert b.degree < m.degree


class TestGaussianRoots:
    def test_examples(self):
        assert gaussian_quadratic_roots(T**2 - 6 * T + 10) == (3, 1)
        assert gaussian_quadratic_roots(T**2 + 1) == (0, 1)
        assert gaussian_quadratic_roots(T**2 + 2) is None

    def test_errors(self):
        with pytest.raises(NotQuadratic):
            gaussian_quadratic_roots(T**3 + 1)
        with pytest.raises(NotIrreducible):
            gaussian_quadratic_roots(T**2 - 1)


class TestCPoly:
    def test_norm_is_real(self):
        z = CPoly([(-3, -1), 1])  # t - 3 - k
        assert z.norm() == T**2 - 6 * T + 10

    def test_conjugate(self):
        z = CPoly([(1, 2), (0, -1)])
        assert z.conj() == CPoly([(1, -2), (0, 1)])

    def test_exact_division(self):
        a = CPoly([(-1, 1), 1])
        b = CPoly([(2, 0), (0, 3)])
        assert (a * b).exquo(a) == b
