"""Exact univariate polynomials over the rationals and the Gaussian rationals.

Coefficients are :class:`fractions.Fraction` and are stored in ascending
order (index = power of ``t``).  Trailing zeros are stripped on construction,
so ``degree`` is O(1).  The zero polynomial has degree ``NEG_INF``.

The Gaussian imaginary unit is identified with the quaternion unit ``k`` when
a :class:`CPoly` is embedded into the quaternion polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import (
    BothZero,
    DivisionByZeroPoly,
    NotCoprime,
    NotIrreducible,
    NotQuadratic,
    ZeroPolynomial,
)

NEG_INF = float("-inf")

Scalar = Union[int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point coefficients are not accepted")
    return Fraction(x)


def rational_sqrt(q: Fraction) -> Fraction | None:
    """Return the non-negative rational square root of ``q`` if it exists."""
    q = _frac(q)
    if q < 0:
        return None
    n, d = q.numerator, q.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


class RPoly:
    """Polynomial in ``t`` with rational coefficients. Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [_frac(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("RPoly is immutable")

    # -- constructors --------------------------------------------------
    @classmethod
    def const(cls, c: Scalar) -> "RPoly":
        return cls([c])

    @classmethod
    def monomial(cls, n: int, c: Scalar = 1) -> "RPoly":
        return cls([0] * n + [c])

    @classmethod
    def coerce(cls, x) -> "RPoly":
        if isinstance(x, RPoly):
            return x
        if isinstance(x, (int, Fraction)):
            return cls([x])
        return cls(x)

    # -- basic queries -------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, n: int) -> Fraction:
        if 0 <= n < len(self.coeffs):
            return self.coeffs[n]
        return Fraction(0)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, RPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RPoly({self})"

    def __str__(self) -> str:
        return _format_poly(self.coeffs)

    # -- arithmetic ----------------------------------------------------
    def __neg__(self) -> "RPoly":
        return RPoly(-c for c in self.coeffs)

    def __add__(self, other) -> "RPoly":
        if isinstance(other, (int, Fraction)):
            other = RPoly([other])
        if not isinstance(other, RPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return RPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __sub__(self, other) -> "RPoly":
        if isinstance(other, (int, Fraction)):
            other = RPoly([other])
        if not isinstance(other, RPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RPoly":
        return (-self) + other

    def __mul__(self, other) -> "RPoly":
        if isinstance(other, (int, Fraction)):
            other = _frac(other)
            if other == 0:
                return ZERO
            return RPoly(c * other for c in self.coeffs)
        if not isinstance(other, RPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return RPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RPoly":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise DivisionByZeroPoly("division by zero scalar")
            return self * (1 / _frac(other))
        if isinstance(other, RPoly):
            return self.exquo(other)
        return NotImplemented

    def __pow__(self, n: int) -> "RPoly":
        if n < 0:
            raise ValueError("negative power")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other) -> tuple["RPoly", "RPoly"]:
        return rpoly_divrem(self, RPoly.coerce(other))

    def __floordiv__(self, other) -> "RPoly":
        return rpoly_divrem(self, RPoly.coerce(other))[0]

    def __mod__(self, other) -> "RPoly":
        return rpoly_divrem(self, RPoly.coerce(other))[1]

    def __call__(self, x):
        """Evaluate by Horner's rule; ``x`` may be a scalar or a polynomial."""
        acc = ZERO if isinstance(x, RPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    # -- derived -------------------------------------------------------
    def exquo(self, other: "RPoly") -> "RPoly":
        """Exact quotient; raises ``ValueError`` if ``other`` does not divide."""
        q, r = rpoly_divrem(self, RPoly.coerce(other))
        if r:
            raise ValueError(f"{other} does not divide {self}")
        return q

    def divides(self, other: "RPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return rpoly_divrem(other, self)[1].is_zero()

    def monic(self) -> "RPoly":
        if not self.coeffs:
            return self
        return self * (1 / self.lc)

    def derivative(self) -> "RPoly":
        return RPoly(i * c for i, c in enumerate(self.coeffs) if i)

    def reversed_to(self, n: int) -> "RPoly":
        """Coefficient reversal ``t^n p(1/t)``."""
        c = list(self.coeffs) + [Fraction(0)] * (n + 1 - len(self.coeffs))
        return RPoly(reversed(c[: n + 1]))

    def order_at_zero(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ZeroPolynomial("order of the zero polynomial")


ZERO = RPoly()
ONE = RPoly([1])
T = RPoly([0, 1])


def _format_poly(coeffs: Sequence, var: str = "t") -> str:
    if not coeffs:
        return "0"
    terms = []
    for n in range(len(coeffs) - 1, -1, -1):
        c = coeffs[n]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if n == 0:
            body = str(a)
        else:
            mono = var if n == 1 else f"{var}^{n}"
            body = mono if a == 1 else f"{a}*{mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Euclidean algorithms
# ---------------------------------------------------------------------------


def rpoly_divrem(f: RPoly, g: RPoly) -> tuple[RPoly, RPoly]:
    """Return ``(q, r)`` with ``f = q*g + r`` and ``deg r < deg g``."""
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return ZERO, f
    inv = 1 / g.lc
    q = [Fraction(0)] * (len(r) - dg)
    gc = g.coeffs
    for n in range(len(r) - 1, dg - 1, -1):
        c = r[n] * inv
        if c:
            q[n - dg] = c
            for i in range(dg + 1):
                r[n - dg + i] -= c * gc[i]
    return RPoly(q), RPoly(r[:dg])


def rpoly_gcd(f: RPoly, g: RPoly) -> RPoly:
    """Monic greatest common divisor."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero polynomials")
    while g:
        f, g = g, rpoly_divrem(f, g)[1]
    return f.monic()


def gcd_many(polys: Iterable[RPoly]) -> RPoly:
    g = ZERO
    for p in polys:
        if p:
            g = p.monic() if g.is_zero() else rpoly_gcd(g, p)
            if g == ONE:
                break
    if g.is_zero():
        raise ZeroPolynomial("gcd of zero polynomials")
    return g


def rpoly_lcm(f: RPoly, g: RPoly) -> RPoly:
    return (f * g).exquo(rpoly_gcd(f, g)).monic()


def extended_gcd(a: RPoly, b: RPoly) -> tuple[RPoly, RPoly, RPoly]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = rpoly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        raise BothZero("extended gcd of two zero polynomials")
    inv = 1 / r0.lc
    return r0 * inv, s0 * inv, t0 * inv


def mod_inverse(a: RPoly, m: RPoly) -> RPoly:
    """Inverse of ``a`` in ``Q[t]/(m)``, reduced to degree below ``deg m``."""
    if m.is_zero():
        raise DivisionByZeroPoly("modulus is zero")
    if m.degree == 0:
        # Q[t]/(c) is the zero ring
        return ZERO
    g, s, _ = extended_gcd(a % m, m)
    if g != ONE:
        raise NotCoprime(f"gcd({a}, {m}) = {g}")
    return s % m


# ---------------------------------------------------------------------------
# Square-free decomposition, real roots, factorization, square roots
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SquareFreeDecomp:
    content: Fraction
    parts: tuple[tuple[RPoly, int], ...]

    def expand(self) -> RPoly:
        out = RPoly([self.content])
        for f, m in self.parts:
            out = out * f**m
        return out


def squarefree_decompose(p: RPoly) -> SquareFreeDecomp:
    """Yun's algorithm over the rationals."""
    if p.is_zero():
        raise ZeroPolynomial("square-free decomposition of zero")
    content = p.lc
    f = p.monic()
    if f.degree == 0:
        return SquareFreeDecomp(content, ())
    df = f.derivative()
    a0 = rpoly_gcd(f, df)
    b = f.exquo(a0)
    c = df.exquo(a0)
    d = c - b.derivative()
    parts = []
    i = 1
    while b.degree > 0:
        a = rpoly_gcd(b, d)
        if a.degree > 0:
            parts.append((a, i))
        b = b.exquo(a)
        c = d.exquo(a)
        d = c - b.derivative()
        i += 1
    return SquareFreeDecomp(content, tuple(parts))


def squarefree_part(p: RPoly) -> RPoly:
    if p.is_zero():
        raise ZeroPolynomial("square-free part of zero")
    if p.degree <= 0:
        return ONE
    return p.exquo(rpoly_gcd(p, p.derivative())).monic()


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def sturm_sequence(p: RPoly) -> list[RPoly]:
    seq = [p, p.derivative()]
    while seq[-1]:
        r = seq[-2] % seq[-1]
        if r.is_zero():
            break
        seq.append(-r)
    return [s for s in seq if s]


def _sign_changes(signs: Iterable[int]) -> int:
    changes, last = 0, 0
    for s in signs:
        if s:
            if last and s != last:
                changes += 1
            last = s
    return changes


def real_root_count(p: RPoly) -> int:
    """Number of distinct real roots, by a Sturm sequence on the square-free part."""
    if p.is_zero():
        raise ZeroPolynomial("root count of zero")
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    seq = sturm_sequence(q)
    at_pos = [_sign(s.lc) for s in seq]
    at_neg = [_sign(s.lc) * (-1) ** int(s.degree) for s in seq]
    return _sign_changes(at_neg) - _sign_changes(at_pos)


def real_root_count_in(p: RPoly, a: Fraction, b: Fraction) -> int:
    """Distinct real roots in the half-open interval ``(a, b]``."""
    q = squarefree_part(p)
    if q.degree <= 0:
        return 0
    seq = sturm_sequence(q)
    va = _sign_changes(_sign(s(Fraction(a))) for s in seq)
    vb = _sign_changes(_sign(s(Fraction(b))) for s in seq)
    return va - vb


@dataclass(frozen=True)
class Factorization:
    """``content * prod(f**m)`` with monic factors irreducible over the rationals."""

    content: Fraction
    factors: tuple[tuple[RPoly, int], ...]

    @property
    def flagged(self) -> tuple[RPoly, ...]:
        """Factors of degree three or more (irreducible, but not split further)."""
        return tuple(f for f, _ in self.factors if f.degree >= 3)

    def expand(self) -> RPoly:
        out = RPoly([self.content])
        for f, m in self.factors:
            out = out * f**m
        return out

    def __iter__(self):
        return iter(self.factors)


def _to_sympy(p: RPoly):
    import sympy

    t = sympy.Symbol("t")
    return sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], t, domain="QQ")


def _from_sympy(poly) -> RPoly:
    return RPoly(Fraction(int(c.numerator), int(c.denominator)) for c in reversed(poly.all_coeffs()))


def factor_over_rationals(p: RPoly) -> Factorization:
    """Complete factorization into monic factors irreducible over the rationals."""
    if p.is_zero():
        raise ZeroPolynomial("factorization of zero")
    if p.degree == 0:
        return Factorization(p.lc, ())
    _, fl = _to_sympy(p).factor_list()
    factors = sorted(
        ((_from_sympy(f).monic(), int(m)) for f, m in fl),
        key=lambda fm: (fm[0].degree, fm[0].coeffs),
    )
    result = Factorization(p.lc, tuple(factors))
    if result.expand() != p:
        raise AssertionError("factorization does not reproduce its input")
    return result


def gaussian_factor(p: RPoly) -> tuple[Fraction, list[tuple["CPoly", int]]]:
    """Factor ``p`` over the Gaussian rationals ``Q(k)``; factors are monic."""
    import sympy

    t = sympy.Symbol("t")
    expr = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(p.coeffs)], t)
    _, fl = sympy.factor_list(expr.as_expr(), t, gaussian=True)
    out = []
    for f, m in fl:
        coeffs = sympy.Poly(f, t).all_coeffs()
        pairs = []
        for c in reversed(coeffs):
            re, im = sympy.re(c), sympy.im(c)
            pairs.append((Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q))))
        out.append((CPoly(pairs).monic(), int(m)))
    return p.lc, out


def poly_sqrt(p: RPoly) -> RPoly | None:
    """Square root with positive leading coefficient, or ``None`` if there is none over Q."""
    if p.is_zero():
        raise ZeroPolynomial("square root of zero")
    if p.degree % 2:
        return None
    r = rational_sqrt(p.lc)
    if r is None:
        return None
    s = RPoly([r])
    for f, m in squarefree_decompose(p).parts:
        if m % 2:
            return None
        s = s * f ** (m // 2)
    return s


def is_square_up_to_unit(p: RPoly) -> bool:
    """True when every square-free multiplicity is even (a square over the reals if lc > 0)."""
    if p.is_zero():
        raise ZeroPolynomial("square test of zero")
    return all(m % 2 == 0 for _, m in squarefree_decompose(p).parts)


def gaussian_quadratic_roots(f: RPoly) -> tuple[Fraction, Fraction] | None:
    """Roots ``a +- b*i`` (``b > 0``) of a monic real-irreducible quadratic, if rational."""
    if f.degree != 2 or f.lc != 1:
        raise NotQuadratic(f"expected a monic quadratic, got {f}")
    p, q = f[1], f[0]
    a = -p / 2
    b2 = q - a * a
    if b2 <= 0:
        raise NotIrreducible(f"{f} has real roots")
    b = rational_sqrt(b2)
    if b is None:
        return None
    return a, b


# ---------------------------------------------------------------------------
# Gaussian-rational polynomials
# ---------------------------------------------------------------------------

Gauss = tuple  # (re: Fraction, im: Fraction)


def _gmul(x, y):
    return (x[0] * y[0] - x[1] * y[1], x[0] * y[1] + x[1] * y[0])


def _ginv(x):
    n = x[0] * x[0] + x[1] * x[1]
    if n == 0:
        raise ZeroDivisionError("inverse of zero")
    return (x[0] / n, -x[1] / n)


class CPoly:
    """Polynomial with Gaussian-rational coefficients ``re + im*k``. Immutable."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = []
        for x in coeffs:
            if isinstance(x, tuple):
                c.append((_frac(x[0]), _frac(x[1])))
            else:
                c.append((_frac(x), Fraction(0)))
        while c and c[-1] == (0, 0):
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("CPoly is immutable")

    @classmethod
    def from_parts(cls, re: RPoly, im: RPoly = ZERO) -> "CPoly":
        n = max(len(re), len(im))
        return cls((re[i], im[i]) for i in range(n))

    @classmethod
    def coerce(cls, x) -> "CPoly":
        if isinstance(x, CPoly):
            return x
        if isinstance(x, RPoly):
            return cls.from_parts(x)
        return cls([x])

    @property
    def re(self) -> RPoly:
        return RPoly(c[0] for c in self.coeffs)

    @property
    def im(self) -> RPoly:
        return RPoly(c[1] for c in self.coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else (Fraction(0), Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, (RPoly, int, Fraction)):
            other = CPoly.coerce(RPoly.coerce(other))
        if not isinstance(other, CPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"CPoly(({self.re}) + ({self.im})*k)"

    def __neg__(self) -> "CPoly":
        return CPoly((-a, -b) for a, b in self.coeffs)

    def __add__(self, other) -> "CPoly":
        other = CPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        z = (Fraction(0), Fraction(0))
        return CPoly(
            ((a[i] if i < len(a) else z)[0] + (b[i] if i < len(b) else z)[0],
             (a[i] if i < len(a) else z)[1] + (b[i] if i < len(b) else z)[1])
            for i in range(n)
        )

    __radd__ = __add__

    def __sub__(self, other) -> "CPoly":
        return self + (-CPoly.coerce(other))

    def __rsub__(self, other) -> "CPoly":
        return CPoly.coerce(other) - self

    def __mul__(self, other) -> "CPoly":
        if isinstance(other, tuple):
            return CPoly(_gmul(c, other) for c in self.coeffs)
        other = CPoly.coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return CPoly()
        out = [(Fraction(0), Fraction(0))] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                p = _gmul(x, y)
                o = out[i + j]
                out[i + j] = (o[0] + p[0], o[1] + p[1])
        return CPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "CPoly":
        result, base = CPoly([1]), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "CPoly":
        return CPoly((a, -b) for a, b in self.coeffs)

    def norm(self) -> RPoly:
        """``C * conj(C)``, a real polynomial."""
        return (self * self.conj()).re

    def monic(self) -> "CPoly":
        if not self.coeffs:
            return self
        return self * _ginv(self.lc)

    def __divmod__(self, other) -> tuple["CPoly", "CPoly"]:
        return cpoly_divrem(self, CPoly.coerce(other))

    def exquo(self, other) -> "CPoly":
        q, r = cpoly_divrem(self, CPoly.coerce(other))
        if r:
            raise ValueError("inexact complex polynomial division")
        return q


def cpoly_divrem(f: CPoly, g: CPoly) -> tuple[CPoly, CPoly]:
    if g.is_zero():
        raise DivisionByZeroPoly("division by the zero polynomial")
    r = list(f.coeffs)
    dg = len(g.coeffs) - 1
    if len(r) - 1 < dg:
        return CPoly(), f
    inv = _ginv(g.lc)
    q = [(Fraction(0), Fraction(0))] * (len(r) - dg)
    for n in range(len(r) - 1, dg - 1, -1):
        c = _gmul(r[n], inv)
        if c != (0, 0):
            q[n - dg] = c
            for i in range(dg + 1):
                p = _gmul(c, g.coeffs[i])
                o = r[n - dg + i]
                r[n - dg + i] = (o[0] - p[0], o[1] - p[1])
    return CPoly(q), CPoly(r[:dg])


def cpoly_gcd(f: CPoly, g: CPoly) -> CPoly:
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero polynomials")
    while g:
        f, g = g, cpoly_divrem(f, g)[1]
    return f.monic()
