"""Quaternion and dual-quaternion polynomials and the kinematic actions.

A dual quaternion is ``p + eps*d`` with ``eps**2 = 0``.  Polynomials are stored
component-wise: a :class:`QuatPoly` holds four :class:`RPoly` (coefficients of
``1, i, j, k``) and a :class:`DualQuatPoly` holds a primal and a dual
``QuatPoly``.  The indeterminate ``t`` is central.

Conventions
-----------
* Points are ``x0 + eps*(x1 i + x2 j + x3 k)``, planes are
  ``u1 i + u2 j + u3 k + eps*u0`` (plane ``u0 + u1 x + u2 y + u3 z = 0``).
* A motion ``C`` acts by the sandwich ``x -> eps_conj(C) * x * conj(C)``.
  Acting first by ``C1`` and then by ``C2`` is the action of ``C2 * C1``;
  right factors act in the moving frame.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import (
    NonInvertibleLeadingCoefficient,
    NotAMotionPolynomial,
    SingularMobius,
    ZeroPolynomial,
)
from .ring import NEG_INF, ONE, ZERO, CPoly, RPoly, gcd_many


def _qmul(a, b):
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    )


# ---------------------------------------------------------------------------
# Constant quaternions
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Quat:
    w: Fraction = Fraction(0)
    x: Fraction = Fraction(0)
    y: Fraction = Fraction(0)
    z: Fraction = Fraction(0)

    def __post_init__(self):
        for name in ("w", "x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @property
    def parts(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.w, self.x, self.y, self.z)

    def is_zero(self) -> bool:
        return not any(self.parts)

    def __add__(self, o: "Quat") -> "Quat":
        return Quat(*(a + b for a, b in zip(self.parts, o.parts)))

    def __sub__(self, o: "Quat") -> "Quat":
        return Quat(*(a - b for a, b in zip(self.parts, o.parts)))

    def __neg__(self) -> "Quat":
        return Quat(*(-a for a in self.parts))

    def __mul__(self, o) -> "Quat":
        if isinstance(o, Quat):
            return Quat(*_qmul(self.parts, o.parts))
        if isinstance(o, (int, Fraction)):
            return Quat(*(a * o for a in self.parts))
        return NotImplemented

    def __rmul__(self, o) -> "Quat":
        if isinstance(o, (int, Fraction)):
            return self * o
        return NotImplemented

    def conj(self) -> "Quat":
        return Quat(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> Fraction:
        return sum((a * a for a in self.parts), Fraction(0))

    def inverse(self) -> "Quat":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of the zero quaternion")
        return self.conj() * (1 / n)


Q_ONE = Quat(1)
Q_I = Quat(0, 1)
Q_J = Quat(0, 0, 1)
Q_K = Quat(0, 0, 0, 1)


@dataclass(frozen=True)
class DualQuat:
    primal: Quat = Quat()
    dual: Quat = Quat()

    def __add__(self, o: "DualQuat") -> "DualQuat":
        return DualQuat(self.primal + o.primal, self.dual + o.dual)

    def __sub__(self, o: "DualQuat") -> "DualQuat":
        return DualQuat(self.primal - o.primal, self.dual - o.dual)

    def __neg__(self) -> "DualQuat":
        return DualQuat(-self.primal, -self.dual)

    def __mul__(self, o) -> "DualQuat":
        if isinstance(o, DualQuat):
            return DualQuat(self.primal * o.primal, self.primal * o.dual + self.dual * o.primal)
        if isinstance(o, (int, Fraction)):
            return DualQuat(self.primal * o, self.dual * o)
        return NotImplemented

    def __rmul__(self, o) -> "DualQuat":
        if isinstance(o, (int, Fraction)):
            return self * o
        return NotImplemented

    def is_zero(self) -> bool:
        return self.primal.is_zero() and self.dual.is_zero()

    def conj(self) -> "DualQuat":
        return DualQuat(self.primal.conj(), self.dual.conj())

    def eps_conj(self) -> "DualQuat":
        return DualQuat(self.primal, -self.dual)

    def norm(self) -> tuple[Fraction, Fraction]:
        """``h * conj(h)`` as a dual number ``(a, b)`` meaning ``a + eps*b``."""
        p, d = self.primal, self.dual
        return p.norm(), 2 * sum((x * y for x, y in zip(p.parts, d.parts)), Fraction(0))

    def is_invertible(self) -> bool:
        return not self.primal.is_zero()

    def inverse(self) -> "DualQuat":
        a, b = self.norm()
        if a == 0:
            raise NonInvertibleLeadingCoefficient("dual quaternion with zero primal part")
        # (a + eps b)^-1 = (a - eps b)/a^2
        inv_norm = DualQuat(Quat(1 / a), Quat(-b / (a * a)))
        return self.conj() * inv_norm

    @property
    def parts(self) -> tuple[Fraction, ...]:
        return self.primal.parts + self.dual.parts


# ---------------------------------------------------------------------------
# Polynomials
# ---------------------------------------------------------------------------


def _as_rpoly(x) -> RPoly:
    return RPoly.coerce(x)


class QuatPoly:
    """Quaternion polynomial ``c0 + c1 i + c2 j + c3 k`` with ``c_n`` in ``Q[t]``."""

    __slots__ = ("c",)

    def __init__(self, c0=ZERO, c1=ZERO, c2=ZERO, c3=ZERO):
        object.__setattr__(self, "c", (_as_rpoly(c0), _as_rpoly(c1), _as_rpoly(c2), _as_rpoly(c3)))

    def __setattr__(self, name, value):
        raise AttributeError("QuatPoly is immutable")

    @classmethod
    def const(cls, q: Quat) -> "QuatPoly":
        return cls(*(RPoly([a]) for a in q.parts))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[Quat]) -> "QuatPoly":
        return cls(*(RPoly(q.parts[m] for q in coeffs) for m in range(4)))

    @classmethod
    def from_cpoly(cls, z: CPoly) -> "QuatPoly":
        return cls(z.re, ZERO, ZERO, z.im)

    def to_cpoly(self) -> CPoly:
        if self.c[1] or self.c[2]:
            raise ValueError("not in the complex subalgebra spanned by 1 and k")
        return CPoly.from_parts(self.c[0], self.c[3])

    @property
    def degree(self):
        return max(p.degree for p in self.c)

    def coeff(self, n: int) -> Quat:
        return Quat(*(p[n] for p in self.c))

    def coeffs(self) -> list[Quat]:
        d = self.degree
        return [] if d == NEG_INF else [self.coeff(n) for n in range(int(d) + 1)]

    @property
    def lc(self) -> Quat:
        return self.coeff(int(self.degree)) if not self.is_zero() else Quat()

    def is_zero(self) -> bool:
        return not any(self.c)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, QuatPoly):
            return self.c == other.c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.c)

    def __repr__(self) -> str:
        return "QuatPoly(" + _format_components(self.c, ("", "i", "j", "k")) + ")"

    def __neg__(self) -> "QuatPoly":
        return QuatPoly(*(-p for p in self.c))

    def __add__(self, o) -> "QuatPoly":
        if isinstance(o, (int, Fraction, RPoly)):
            o = QuatPoly(o)
        if not isinstance(o, QuatPoly):
            return NotImplemented
        return QuatPoly(*(a + b for a, b in zip(self.c, o.c)))

    __radd__ = __add__

    def __sub__(self, o) -> "QuatPoly":
        if isinstance(o, (int, Fraction, RPoly)):
            o = QuatPoly(o)
        if not isinstance(o, QuatPoly):
            return NotImplemented
        return QuatPoly(*(a - b for a, b in zip(self.c, o.c)))

    def __rsub__(self, o) -> "QuatPoly":
        return (-self) + o

    def __mul__(self, o) -> "QuatPoly":
        if isinstance(o, (int, Fraction, RPoly)):
            return QuatPoly(*(a * o for a in self.c))
        if isinstance(o, Quat):
            o = QuatPoly.const(o)
        if isinstance(o, QuatPoly):
            return QuatPoly(*_qmul(self.c, o.c))
        return NotImplemented

    def __rmul__(self, o) -> "QuatPoly":
        if isinstance(o, (int, Fraction, RPoly)):
            return QuatPoly(*(o * a for a in self.c))
        if isinstance(o, Quat):
            return QuatPoly.const(o) * self
        return NotImplemented

    def __call__(self, tau) -> Quat:
        return Quat(*(p(Fraction(tau)) for p in self.c))

    def conj(self) -> "QuatPoly":
        return QuatPoly(self.c[0], -self.c[1], -self.c[2], -self.c[3])

    def norm(self) -> RPoly:
        return sum((p * p for p in self.c), ZERO)

    def scalar_part(self) -> RPoly:
        return self.c[0]

    def vector_part(self) -> "QuatPoly":
        return QuatPoly(ZERO, *self.c[1:])

    def is_vectorial(self) -> bool:
        return self.c[0].is_zero()

    def exquo(self, f: RPoly) -> "QuatPoly":
        return QuatPoly(*(p.exquo(f) for p in self.c))

    def map(self, fn) -> "QuatPoly":
        return QuatPoly(*(fn(p) for p in self.c))


Q_ZERO = QuatPoly()


class DualQuatPoly:
    """Dual quaternion polynomial ``P + eps*D``."""

    __slots__ = ("primal", "dual")

    def __init__(self, primal: QuatPoly = Q_ZERO, dual: QuatPoly = Q_ZERO):
        if isinstance(primal, (int, Fraction, RPoly)):
            primal = QuatPoly(primal)
        if isinstance(primal, Quat):
            primal = QuatPoly.const(primal)
        if isinstance(dual, Quat):
            dual = QuatPoly.const(dual)
        object.__setattr__(self, "primal", primal)
        object.__setattr__(self, "dual", dual)

    def __setattr__(self, name, value):
        raise AttributeError("DualQuatPoly is immutable")

    @classmethod
    def from_components(cls, comps: Sequence) -> "DualQuatPoly":
        """Build from the eight real components in the order 1, i, j, k, e, ei, ej, ek."""
        if len(comps) != 8:
            raise ValueError("expected eight components")
        return cls(QuatPoly(*comps[:4]), QuatPoly(*comps[4:]))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[DualQuat]) -> "DualQuatPoly":
        return cls(
            QuatPoly.from_coeffs([h.primal for h in coeffs]),
            QuatPoly.from_coeffs([h.dual for h in coeffs]),
        )

    @classmethod
    def const(cls, h: DualQuat) -> "DualQuatPoly":
        return cls(QuatPoly.const(h.primal), QuatPoly.const(h.dual))

    def components(self) -> tuple[RPoly, ...]:
        return self.primal.c + self.dual.c

    @property
    def degree(self):
        return max(self.primal.degree, self.dual.degree)

    def coeff(self, n: int) -> DualQuat:
        return DualQuat(self.primal.coeff(n), self.dual.coeff(n))

    def coeffs(self) -> list[DualQuat]:
        d = self.degree
        return [] if d == NEG_INF else [self.coeff(n) for n in range(int(d) + 1)]

    @property
    def lc(self) -> DualQuat:
        return self.coeff(int(self.degree)) if not self.is_zero() else DualQuat()

    def is_zero(self) -> bool:
        return self.primal.is_zero() and self.dual.is_zero()

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other) -> bool:
        if isinstance(other, DualQuatPoly):
            return self.primal == other.primal and self.dual == other.dual
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.primal, self.dual))

    def __repr__(self) -> str:
        return "DualQuatPoly(" + _format_components(
            self.components(), ("", "i", "j", "k", "e", "e*i", "e*j", "e*k")
        ) + ")"

    def __neg__(self) -> "DualQuatPoly":
        return DualQuatPoly(-self.primal, -self.dual)

    def __add__(self, o) -> "DualQuatPoly":
        o = _coerce_dq(o)
        if o is NotImplemented:
            return o
        return DualQuatPoly(self.primal + o.primal, self.dual + o.dual)

    __radd__ = __add__

    def __sub__(self, o) -> "DualQuatPoly":
        o = _coerce_dq(o)
        if o is NotImplemented:
            return o
        return DualQuatPoly(self.primal - o.primal, self.dual - o.dual)

    def __rsub__(self, o) -> "DualQuatPoly":
        return (-self) + o

    def __mul__(self, o) -> "DualQuatPoly":
        if isinstance(o, (int, Fraction, RPoly)):
            return DualQuatPoly(self.primal * o, self.dual * o)
        o = _coerce_dq(o)
        if o is NotImplemented:
            return o
        return DualQuatPoly(self.primal * o.primal, self.primal * o.dual + self.dual * o.primal)

    def __rmul__(self, o) -> "DualQuatPoly":
        if isinstance(o, (int, Fraction, RPoly)):
            return DualQuatPoly(o * self.primal, o * self.dual)
        o = _coerce_dq(o)
        if o is NotImplemented:
            return o
        return o * self

    def __call__(self, tau) -> DualQuat:
        return DualQuat(self.primal(tau), self.dual(tau))

    def conj(self) -> "DualQuatPoly":
        return DualQuatPoly(self.primal.conj(), self.dual.conj())

    def eps_conj(self) -> "DualQuatPoly":
        return DualQuatPoly(self.primal, -self.dual)

    def exquo(self, f: RPoly) -> "DualQuatPoly":
        return DualQuatPoly(self.primal.exquo(f), self.dual.exquo(f))

    def map(self, fn) -> "DualQuatPoly":
        return DualQuatPoly(self.primal.map(fn), self.dual.map(fn))


DQ_ONE = DualQuatPoly(QuatPoly(ONE))


def _coerce_dq(o):
    if isinstance(o, DualQuatPoly):
        return o
    if isinstance(o, QuatPoly):
        return DualQuatPoly(o)
    if isinstance(o, DualQuat):
        return DualQuatPoly.const(o)
    if isinstance(o, Quat):
        return DualQuatPoly(QuatPoly.const(o))
    if isinstance(o, (int, Fraction, RPoly)):
        return DualQuatPoly(QuatPoly(o))
    return NotImplemented


def _format_components(comps, units) -> str:
    terms = [f"({p})*{u}" if u else f"({p})" for p, u in zip(comps, units) if p]
    return " + ".join(terms) if terms else "0"


# ---------------------------------------------------------------------------
# Points and planes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PlanePoly:
    """Plane polynomial ``u1 i + u2 j + u3 k + eps*u0``."""

    u0: RPoly = ZERO
    u1: RPoly = ZERO
    u2: RPoly = ZERO
    u3: RPoly = ZERO

    def __post_init__(self):
        for name in ("u0", "u1", "u2", "u3"):
            object.__setattr__(self, name, RPoly.coerce(getattr(self, name)))

    @property
    def components(self) -> tuple[RPoly, RPoly, RPoly, RPoly]:
        return (self.u0, self.u1, self.u2, self.u3)

    @property
    def vector(self) -> tuple[RPoly, RPoly, RPoly]:
        return (self.u1, self.u2, self.u3)

    @property
    def degree(self):
        return max(p.degree for p in self.components)

    def vector_norm(self) -> RPoly:
        return self.u1 * self.u1 + self.u2 * self.u2 + self.u3 * self.u3

    def to_dq(self) -> DualQuatPoly:
        return DualQuatPoly(QuatPoly(ZERO, self.u1, self.u2, self.u3), QuatPoly(self.u0))

    @classmethod
    def from_dq(cls, h: DualQuatPoly) -> "PlanePoly":
        p, d = h.primal.c, h.dual.c
        if p[0] or d[1] or d[2] or d[3]:
            raise ValueError("not a plane polynomial: needs zero primal scalar and dual vector part")
        return cls(d[0], p[1], p[2], p[3])

    def scale(self, f) -> "PlanePoly":
        return PlanePoly(*(f * p for p in self.components))

    def exquo(self, f: RPoly) -> "PlanePoly":
        return PlanePoly(*(p.exquo(f) for p in self.components))

    def map(self, fn) -> "PlanePoly":
        return PlanePoly(*(fn(p) for p in self.components))

    def __call__(self, tau) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(p(Fraction(tau)) for p in self.components)


@dataclass(frozen=True)
class PointPoly:
    """Point polynomial ``x0 + eps*(x1 i + x2 j + x3 k)``."""

    x0: RPoly = ONE
    x1: RPoly = ZERO
    x2: RPoly = ZERO
    x3: RPoly = ZERO

    def __post_init__(self):
        for name in ("x0", "x1", "x2", "x3"):
            object.__setattr__(self, name, RPoly.coerce(getattr(self, name)))

    @property
    def components(self) -> tuple[RPoly, RPoly, RPoly, RPoly]:
        return (self.x0, self.x1, self.x2, self.x3)

    def to_dq(self) -> DualQuatPoly:
        return DualQuatPoly(QuatPoly(self.x0), QuatPoly(ZERO, self.x1, self.x2, self.x3))

    @classmethod
    def from_dq(cls, h: DualQuatPoly) -> "PointPoly":
        p, d = h.primal.c, h.dual.c
        if p[1] or p[2] or p[3] or d[0]:
            raise ValueError("not a point polynomial: needs zero primal vector and dual scalar part")
        return cls(p[0], d[1], d[2], d[3])

    def __call__(self, tau) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return tuple(p(Fraction(tau)) for p in self.components)


def incidence(x: PointPoly, u: PlanePoly) -> RPoly:
    """``x0 u0 + x1 u1 + x2 u2 + x3 u3``; zero iff the point lies on the plane."""
    return sum((a * b for a, b in zip(x.components, u.components)), ZERO)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


class Involutions(NamedTuple):
    conjugate: DualQuatPoly
    eps_conjugate: DualQuatPoly
    vector_part: DualQuatPoly
    scalar_part: DualQuatPoly


def involutions(h: DualQuatPoly) -> Involutions:
    scalar = DualQuatPoly(QuatPoly(h.primal.c[0]), QuatPoly(h.dual.c[0]))
    return Involutions(h.conj(), h.eps_conj(), h - scalar, scalar)


class DualNorm(NamedTuple):
    """``h * conj(h)`` split into primal and dual parts.

    A part is ``None`` when it is not a real polynomial; with a correct
    conjugation this never happens, but the probe is kept explicit.
    """

    primal: RPoly | None
    dual: RPoly | None

    def __mul__(self, other: "DualNorm") -> "DualNorm":
        if None in self or None in other:
            return DualNorm(None, None)
        return DualNorm(self.primal * other.primal, self.primal * other.dual + self.dual * other.primal)


def dq_norm(h: DualQuatPoly) -> DualNorm:
    n = h * h.conj()
    p, d = n.primal, n.dual
    primal = p.c[0] if not p.vector_part() else None
    dual = d.c[0] if not d.vector_part() else None
    return DualNorm(primal, dual)


class MotionCheck(NamedTuple):
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def study_defect(C: DualQuatPoly) -> QuatPoly:
    """``P conj(D) + D conj(P)``; zero exactly when the Study condition holds."""
    P, D = C.primal, C.dual
    return P * D.conj() + D * P.conj()


def is_motion_polynomial(C: DualQuatPoly) -> MotionCheck:
    if C.primal.is_zero():
        return MotionCheck(False, "ZERO_PRIMAL_PART")
    if study_defect(C):
        return MotionCheck(False, "STUDY_CONDITION")
    return MotionCheck(True)


def _require_motion(C: DualQuatPoly) -> None:
    check = is_motion_polynomial(C)
    if not check:
        raise NotAMotionPolynomial(check.reason)


def qpoly_divrem(F: DualQuatPoly, G: DualQuatPoly, side: str = "right") -> tuple[DualQuatPoly, DualQuatPoly]:
    """Polynomial division with an invertible leading coefficient of ``G``.

    ``side="right"`` gives ``F = Q*G + R`` (``G`` is a right divisor),
    ``side="left"`` gives ``F = G*Q + R``.  In both cases ``deg R < deg G``.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    F, G = _coerce_dq(F), _coerce_dq(G)
    if G.is_zero():
        raise NonInvertibleLeadingCoefficient("division by zero")
    lc = G.lc
    if not lc.is_invertible():
        raise NonInvertibleLeadingCoefficient(f"leading coefficient {lc} is not invertible")
    inv = lc.inverse()
    dg = int(G.degree)
    Q = DualQuatPoly()
    R = F
    while not R.is_zero() and R.degree >= dg:
        n = int(R.degree)
        c = R.lc * inv if side == "right" else inv * R.lc
        term = DualQuatPoly.const(c) * RPoly.monomial(n - dg)
        Q = Q + term
        R = R - (term * G if side == "right" else G * term)
        if not R.is_zero() and R.degree >= n:
            raise AssertionError("division failed to reduce the degree")
    return Q, R


def rgcd(w) -> RPoly:
    """Monic gcd of all real coefficient polynomials."""
    if isinstance(w, PlanePoly):
        comps = w.components
    elif isinstance(w, QuatPoly):
        comps = w.c
    else:
        comps = w.components()
    if not any(comps):
        raise ZeroPolynomial("rgcd of zero")
    return gcd_many(comps)


def reduce(w):
    """Split off the real gcd: returns ``(reduced, cofactor)`` with ``w = reduced * cofactor``."""
    g = rgcd(w)
    if g == ONE:
        return w, ONE
    return w.exquo(g), g


def act_on_point(C: DualQuatPoly, x: PointPoly) -> PointPoly:
    _require_motion(C)
    return PointPoly.from_dq(C.eps_conj() * x.to_dq() * C.conj())


def act_on_plane(C: DualQuatPoly, w: PlanePoly) -> PlanePoly:
    _require_motion(C)
    return PlanePoly.from_dq(C.eps_conj() * w.to_dq() * C.conj())


def plane_trajectory(C: DualQuatPoly) -> PlanePoly:
    """Trajectory of the moving plane ``[k]``."""
    return act_on_plane(C, PlanePoly(u3=ONE))


def mobius_rpoly(p: RPoly, n: int, alpha, beta, gamma, delta) -> RPoly:
    """``(gamma t + delta)^n p((alpha t + beta)/(gamma t + delta))`` for ``n >= deg p``."""
    num = RPoly([beta, alpha])
    den = RPoly([delta, gamma])
    out = ZERO
    for i, c in enumerate(p.coeffs):
        if c:
            out = out + c * num**i * den ** (n - i)
    return out


def mobius_reparametrize(w, alpha, beta, gamma, delta, degree: int | None = None):
    """Substitute ``t -> (alpha t + beta)/(gamma t + delta)`` and clear denominators.

    Works on :class:`DualQuatPoly`, :class:`QuatPoly`, :class:`PlanePoly` and
    :class:`RPoly`.  Denominators are cleared by ``(gamma t + delta)**deg w``
    unless ``degree`` is given.
    """
    alpha, beta, gamma, delta = (Fraction(v) for v in (alpha, beta, gamma, delta))
    if alpha * delta - beta * gamma == 0:
        raise SingularMobius("alpha*delta - beta*gamma = 0")
    n = degree if degree is not None else w.degree
    if n == NEG_INF:
        return w
    n = int(n)
    fn = lambda p: mobius_rpoly(p, n, alpha, beta, gamma, delta)  # noqa: E731
    if isinstance(w, RPoly):
        return fn(w)
    return w.map(fn)


def inverse_mobius(alpha, beta, gamma, delta) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    return (Fraction(delta), -Fraction(beta), -Fraction(gamma), Fraction(alpha))
