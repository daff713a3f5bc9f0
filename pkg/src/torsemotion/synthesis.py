"""Construction of rational motions whose moving plane ``[k]`` sweeps a torse.

Given a reduced kinematic plane polynomial ``w`` with ``g = rgcd(vec w)``, the
minimal solution is a motion polynomial ``C = Q*g + eps*D`` with

* ``Q k conj(Q) = sigma * vec(w)/g`` (the primal core),
* ``Q k conj(D) - D k conj(Q) = sigma * w0`` and ``Q conj(D) + D conj(Q) = 0``,

so that ``eps_conj(C) k conj(C) = sigma * g * w``.  Larger solutions come from
right factors ``E`` that fix the plane ``[k]``; the splitting routines go the
other way and remove such factors.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .dq import (
    DualQuat,
    DualQuatPoly,
    PlanePoly,
    Q_ONE,
    Quat,
    QuatPoly,
    dq_norm,
    is_motion_polynomial,
    plane_trajectory,
    qpoly_divrem,
    rgcd,
)
from .errors import (
    GenericityExhausted,
    GenericityFailure,
    InvariantViolation,
    MultiplicityNotOne,
    NoPolynomialSolution,
    NoRealPowerFactor,
    NonCoprimeCore,
    NoSolution,
    NotAFactor,
    NotAMotionPolynomial,
    NotCoprime,
    NotIrreducible,
    NotKinematic,
    NotMotionPolynomials,
    NotQuadratic,
    NotReduced,
    PreconditionViolation,
    UnsupportedFieldExtension,
    ZeroPolynomial,
    ZeroPrimalFamily,
)
from .linalg import solve_affine
from .ring import (
    NEG_INF,
    ONE,
    T,
    ZERO,
    CPoly,
    RPoly,
    cpoly_gcd,
    factor_over_rationals,
    gaussian_factor,
    gaussian_quadratic_roots,
    gcd_many,
    mod_inverse,
    poly_sqrt,
    real_root_count,
    rpoly_gcd,
    squarefree_decompose,
)
from .torse import is_kinematic, vector_gcd

MAX_ATTEMPTS = 32

_K = QuatPoly(ZERO, ZERO, ZERO, ONE)


# ---------------------------------------------------------------------------
# Small helpers
# ---------------------------------------------------------------------------


def _vec(v1, v2, v3) -> QuatPoly:
    return QuatPoly(ZERO, v1, v2, v3)


def k_image(Q: QuatPoly) -> QuatPoly:
    """``Q k conj(Q)``, always a vectorial quaternion polynomial."""
    return Q * _K * Q.conj()


def sum_of_two_squares(q: Fraction) -> tuple[Fraction, Fraction] | None:
    """Rationals ``(x, y)`` with ``x**2 + y**2 = q``, or ``None`` if there are none."""
    from sympy.solvers.diophantine.diophantine import sum_of_squares

    q = Fraction(q)
    if q < 0:
        return None
    if q == 0:
        return Fraction(0), Fraction(0)
    d = q.denominator
    for x, y in sum_of_squares(q.numerator * d, 2, zeros=True):
        return Fraction(x, d), Fraction(y, d)
    return None


def _random_quat(rng: random.Random, size: int) -> Quat:
    while True:
        q = Quat(*(rng.randint(-size, size) for _ in range(4)))
        if not q.is_zero():
            return q


def _has_odd_real_root(p: RPoly) -> bool:
    """True if some real root of ``p`` has odd multiplicity."""
    return any(m % 2 and real_root_count(f) > 0 for f, m in squarefree_decompose(p).parts)


def _cpoly_t_minus(a: Fraction, b: Fraction) -> CPoly:
    return CPoly([(-a, -b), (1, 0)])


# ---------------------------------------------------------------------------
# Complex cofactors
# ---------------------------------------------------------------------------


def complex_cofactor(g: RPoly) -> tuple[CPoly, RPoly]:
    """Return ``(G, ell)`` with ``G * conj(G) = ell * g`` and ``ell`` of minimal degree.

    ``ell`` is the product of the odd-multiplicity real linear factors of
    ``g`` (each once), so ``G k conj(G) = ell * g * k``.  ``G`` is monic when
    ``g`` is monic.
    """
    if g.is_zero():
        raise ZeroPolynomial("complex cofactor of zero")
    if g.lc != 1:
        raise ValueError("expected a monic polynomial")
    G = CPoly([1])
    ell = ONE
    for f, mu in factor_over_rationals(g):
        if f.degree == 1:
            G = G * CPoly.coerce(f) ** ((mu + 1) // 2)
            if mu % 2:
                ell = ell * f
            continue
        if mu % 2 == 0:
            G = G * CPoly.coerce(f) ** (mu // 2)
            continue
        if real_root_count(f) > 0:
            raise UnsupportedFieldExtension(f"{f} has irrational real roots of odd multiplicity")
        if f.degree == 2:
            roots = gaussian_quadratic_roots(f)
            if roots is None:
                raise UnsupportedFieldExtension(f"{f} does not split over the Gaussian rationals")
            G = G * _cpoly_t_minus(*roots) ** mu
            continue
        _, parts = gaussian_factor(f)
        if len(parts) != 2 or parts[0][0].norm() != f:
            raise UnsupportedFieldExtension(f"{f} is not a norm over the Gaussian rationals")
        G = G * parts[0][0] ** mu
    if G.norm() != ell * g:
        raise InvariantViolation("complex cofactor identity failed")
    return G, ell


# ---------------------------------------------------------------------------
# Primal part
# ---------------------------------------------------------------------------


def _primal_in_fixed_frame(v1: RPoly, v2: RPoly, v3: RPoly, s: RPoly):
    """Try to write ``Q k conj(Q) = sigma*v`` with ``Q = a + c j``, ``a, c`` complex.

    With ``w+ = (s+v3)/2``, ``w- = (s-v3)/2`` and ``V = (v1 + v2 k)/2`` one
    needs ``|a|^2 = w+``, ``|c|^2 = w-`` and ``a c = V``.  When ``w+`` and
    ``w-`` are coprime, ``a`` is the monic gcd of ``V`` and ``w+``.  Returns
    ``(Q, sigma)`` or ``None`` if the frame is not generic.
    """
    wp = (s + v3) * Fraction(1, 2)
    wm = (s - v3) * Fraction(1, 2)
    if wp.is_zero():
        return None
    if wm.is_zero():
        if wp.degree > 0:
            return None
    elif rpoly_gcd(wp, wm) != ONE:
        return None
    V = CPoly.from_parts(v1 * Fraction(1, 2), v2 * Fraction(1, 2))
    a = cpoly_gcd(V, CPoly.coerce(wp)) if V else CPoly([1])
    L = wp.lc
    if a.norm() != wp * (1 / L):
        return None
    c = V.exquo(a) * (1 / L, Fraction(0)) if V else CPoly()
    Q = QuatPoly(a.re, -c.im, c.re, a.im)
    mu = sum_of_two_squares(L)
    if mu is not None:
        Q = Q * Quat(mu[0], 0, 0, mu[1])
        return Q, Fraction(1)
    return Q, 1 / L


def primal_core(v1: RPoly, v2: RPoly, v3: RPoly, seed: int = 0, max_attempts: int = MAX_ATTEMPTS):
    """Return ``(Q, sigma)`` with ``Q k conj(Q) = sigma * (v1 i + v2 j + v3 k)``.

    ``sigma`` is a positive rational; it is 1 whenever an exact solution was
    found.  Non-generic frames are handled by rotating ``v`` with rational
    quaternions from a seeded stream.
    """
    v = _vec(v1, v2, v3)
    if v.is_zero():
        raise ZeroPolynomial("zero vector part")
    if gcd_many(v.c) != ONE:
        raise NotReduced("the vector polynomial has a real factor of positive degree")
    s = poly_sqrt(v.norm())
    if s is None:
        raise NotKinematic("the norm of the vector polynomial is not a square")
    rng = random.Random(seed)
    fallback = None
    for attempt in range(max_attempts):
        r = Q_ONE if attempt == 0 else _random_quat(rng, 2 + attempt // 4)
        rv = QuatPoly.const(r.conj()) * v * QuatPoly.const(r)
        found = _primal_in_fixed_frame(rv.c[1], rv.c[2], rv.c[3], s * r.norm())
        if found is None:
            continue
        Qr, sigma = found
        Q = QuatPoly.const(r) * Qr * (1 / r.norm())
        if k_image(Q) != v * sigma:
            raise InvariantViolation("primal core identity failed")
        if sigma == 1:
            return Q, sigma
        if fallback is None:
            fallback = (Q, sigma)
    if fallback is not None:
        return fallback
    raise GenericityExhausted("no generic frame found for the primal core")


def primal_solve(v1, v2, v3, seed: int = 0) -> QuatPoly:
    """Quaternion polynomial ``Q`` with ``Q k conj(Q) = v1 i + v2 j + v3 k`` exactly."""
    v1, v2, v3 = (RPoly.coerce(x) for x in (v1, v2, v3))
    Q, sigma = primal_core(v1, v2, v3, seed)
    if sigma != 1:
        raise UnsupportedFieldExtension(
            f"exact solution needs a norm that is not a sum of two rational squares (scale {sigma})"
        )
    return Q


# ---------------------------------------------------------------------------
# Dual part
# ---------------------------------------------------------------------------


def lambda_reduce(x: RPoly, y: RPoly, a: RPoly, b: RPoly, p: RPoly, bound: int) -> RPoly:
    """Find ``lam`` with ``deg((x + lam*a) mod p)`` and ``deg((y + lam*b) mod p)`` at most ``bound``.

    ``lam = 0`` is returned when it already works.  Otherwise the coefficients
    above ``bound`` are killed by solving a linear system in the ``deg p``
    coefficients of ``lam``; free variables are set to zero.
    """
    if p.is_zero() or p.degree % 2:
        raise PreconditionViolation("modulus must have even degree")
    n = int(p.degree) // 2
    if bound < n:
        raise PreconditionViolation(f"bound {bound} is below half the modulus degree {n}")
    if a == b:
        raise PreconditionViolation("the two multipliers coincide")
    if p.degree > 0 and (rpoly_gcd(a, p) != ONE or rpoly_gcd(b, p) != ONE):
        raise PreconditionViolation("multipliers are not invertible modulo p")
    xr, yr = x % p, y % p
    if xr.degree <= bound and yr.degree <= bound:
        return ZERO
    m = int(p.degree)
    cols_a = [(RPoly.monomial(i) * a) % p for i in range(m)]
    cols_b = [(RPoly.monomial(i) * b) % p for i in range(m)]
    rows, rhs = [], []
    for deg in range(bound + 1, m):
        rows.append([c[deg] for c in cols_a])
        rhs.append(-xr[deg])
        rows.append([c[deg] for c in cols_b])
        rhs.append(-yr[deg])
    sol = solve_affine(rows, rhs, m)
    if sol is None:
        raise PreconditionViolation("no multiplier meets the degree bound")
    return RPoly(sol[0])


@dataclass(frozen=True)
class DualSolution:
    """Dual part together with the intermediate values of its construction."""

    D: QuatPoly
    v3_inv: RPoly
    d1_seed: RPoly
    d2_seed: RPoly
    lam: RPoly
    bound: int


def _dual_scalars(Q: QuatPoly, w0: RPoly, d1: RPoly, d2: RPoly) -> tuple[RPoly, RPoly]:
    """Solve the two scalar equations for ``d0, d3`` given ``d1, d2``.

    ``-q3 d0 + q0 d3 = w0/2 - q2 d1 + q1 d2`` and ``q0 d0 + q3 d3 = -q1 d1 - q2 d2``.
    """
    q0, q1, q2, q3 = Q.c
    p = q0 * q0 + q3 * q3
    e1 = w0 * Fraction(1, 2) - q2 * d1 + q1 * d2
    e2 = -q1 * d1 - q2 * d2
    n0, r0 = divmod(-q3 * e1 + q0 * e2, p)
    n3, r3 = divmod(q0 * e1 + q3 * e2, p)
    if r0 or r3:
        raise NoPolynomialSolution("the scalar components are not polynomial")
    return n0, n3


def dual_equations_hold(Q: QuatPoly, D: QuatPoly, w0: RPoly) -> bool:
    """Check ``Q k conj(D) - D k conj(Q) = w0`` and ``Q conj(D) + D conj(Q) = 0``."""
    first = Q * _K * D.conj() - D * _K * Q.conj()
    second = Q * D.conj() + D * Q.conj()
    return first == QuatPoly(w0) and second.is_zero()


def check_dual_genericity(Q: QuatPoly) -> None:
    """Raise ``GenericityFailure`` unless the coordinate-dependent conditions hold."""
    q0, _, _, q3 = Q.c
    n = Q.degree
    if n == NEG_INF:
        raise ZeroPolynomial("zero primal core")
    p = q0 * q0 + q3 * q3
    if p.degree != 2 * n:
        raise GenericityFailure("q0^2 + q3^2 does not have full degree")
    if n == 0:
        return
    v3 = k_image(Q).c[3]
    for name, x in (("v3", v3), ("q0", q0), ("q3", q3)):
        if x.is_zero() or rpoly_gcd(x, p) != ONE:
            raise GenericityFailure(f"{name} is not invertible modulo q0^2 + q3^2")
    if q3 == -q0:
        raise GenericityFailure("q3 = -q0")


def dual_solve(Q: QuatPoly, w0: RPoly, slack: int = 0) -> DualSolution:
    """Dual part ``D`` of degree at most ``deg Q + slack`` (up to ``deg w0 - deg Q``)."""
    w0 = RPoly.coerce(w0)
    check_dual_genericity(Q)
    q0, q1, q2, q3 = Q.c
    n = int(Q.degree)
    p = q0 * q0 + q3 * q3
    v3 = k_image(Q).c[3]
    v3_inv = mod_inverse(v3, p)
    d1s = (-(w0 * v3_inv * q2) * Fraction(1, 2)) % p
    d2s = ((w0 * v3_inv * q1) * Fraction(1, 2)) % p
    bound = n + slack
    lam = lambda_reduce(d1s, d2s, q3, -q0, p, bound) if n else ZERO
    d1 = (d1s + lam * q3) % p
    d2 = (d2s - lam * q0) % p
    d0, d3 = _dual_scalars(Q, w0, d1, d2)
    D = QuatPoly(d0, d1, d2, d3)
    if not dual_equations_hold(Q, D, w0):
        raise InvariantViolation("dual part does not satisfy its equations")
    return DualSolution(D, v3_inv, d1s, d2s, lam, bound)


@dataclass(frozen=True)
class DualFamily:
    """All dual parts with ``deg d1, deg d2 <= bound``: ``particular + span(directions)``."""

    particular: QuatPoly
    directions: tuple[QuatPoly, ...]
    bound: int

    @property
    def dimension(self) -> int:
        return len(self.directions)


def dual_family(Q: QuatPoly, w0: RPoly, bound: int) -> DualFamily:
    """Every solution ``D`` of the dual equations whose ``d1, d2`` have degree at most ``bound``.

    The unknowns are the coefficients of ``d1`` and ``d2``; they must make
    both scalar components polynomial, which is a linear condition modulo
    ``q0**2 + q3**2``.
    """
    check_dual_genericity(Q)
    w0 = RPoly.coerce(w0)
    q0, q1, q2, q3 = Q.c
    p = q0 * q0 + q3 * q3
    m = int(p.degree)
    nvar = 2 * (bound + 1)

    def numerators(d1, d2, rhs):
        e1 = rhs * Fraction(1, 2) - q2 * d1 + q1 * d2
        e2 = -q1 * d1 - q2 * d2
        return ((-q3 * e1 + q0 * e2) % p, (q0 * e1 + q3 * e2) % p)

    columns = []
    for i in range(nvar):
        mono = RPoly.monomial(i % (bound + 1))
        d1, d2 = (mono, ZERO) if i <= bound else (ZERO, mono)
        columns.append(numerators(d1, d2, ZERO))
    const = numerators(ZERO, ZERO, w0)
    rows, rhs = [], []
    for part in range(2):
        for deg in range(m):
            rows.append([col[part][deg] for col in columns])
            rhs.append(-const[part][deg])
    sol = solve_affine(rows, rhs, nvar)
    if sol is None:
        raise NoPolynomialSolution("no dual part within the degree bound")

    def to_d(vec, rhs_poly):
        d1 = RPoly(vec[: bound + 1])
        d2 = RPoly(vec[bound + 1 :])
        d0, d3 = _dual_scalars(Q, rhs_poly, d1, d2)
        return QuatPoly(d0, d1, d2, d3)

    particular = to_d(sol[0], w0)
    directions = tuple(to_d(k, ZERO) for k in sol[1])
    return DualFamily(particular, directions, bound)


# ---------------------------------------------------------------------------
# Verification and equivalence
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    h: Optional[RPoly]
    rho: Optional[Fraction]
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


def verify_trajectory(C: DualQuatPoly, w: PlanePoly) -> VerifyResult:
    """Check ``eps_conj(C) k conj(C) = rho * h * w`` with ``h`` monic and ``rho > 0``."""
    check = is_motion_polynomial(C)
    if not check:
        return VerifyResult(False, None, None, f"not a motion polynomial: {check.reason}")
    if not any(w.vector):
        return VerifyResult(False, None, None, "torse has zero vector part")
    traj = plane_trajectory(C)
    names = ("u0", "u1", "u2", "u3")
    ratio = None
    for name, x, y in zip(names, traj.components, w.components):
        if y:
            q, r = divmod(x, y)
            if r:
                return VerifyResult(False, None, None, f"{name}: {x} is not a multiple of {y}")
            ratio = q
            break
    if ratio is None or ratio.is_zero():
        return VerifyResult(False, None, None, "trajectory is not a nonzero multiple")
    for name, x, y in zip(names, traj.components, w.components):
        expected = ratio * y
        if x != expected:
            first = int((x - expected).degree)
            return VerifyResult(
                False, None, None,
                f"{name}: coefficient of t^{first} is {x[first]}, expected {expected[first]}",
            )
    rho = ratio.lc
    if rho <= 0:
        return VerifyResult(False, None, None, f"negative scale {rho}")
    return VerifyResult(True, ratio.monic(), rho)


def is_plane_fixing(E: DualQuat | DualQuatPoly) -> bool:
    """Shape ``e0 + e3 k + eps (e5 i + e6 j)`` with nonzero primal part."""
    if isinstance(E, DualQuat):
        E = DualQuatPoly.const(E)
    p, d = E.primal.c, E.dual.c
    return not (p[1] or p[2] or d[0] or d[3]) and bool(p[0] or p[3])


def essential_equivalence(C1: DualQuatPoly, C2: DualQuatPoly) -> Optional[DualQuat]:
    """Constant plane-fixing ``E`` with ``C2 = C1 * E``, or ``None``."""
    if not is_motion_polynomial(C1) or not is_motion_polynomial(C2):
        raise NotMotionPolynomials("both arguments must be motion polynomials")
    if C1.degree != C2.degree:
        return None
    basis = []
    for m in range(8):
        parts = [Fraction(0)] * 8
        parts[m] = Fraction(1)
        e = DualQuat(Quat(*parts[:4]), Quat(*parts[4:]))
        basis.append((C1 * DualQuatPoly.const(e)).components())
    target = C2.components()
    n = int(C2.degree)
    rows, rhs = [], []
    for comp in range(8):
        for d in range(n + 1):
            rows.append([b[comp][d] for b in basis])
            rhs.append(target[comp][d])
    sol = solve_affine(rows, rhs, 8)
    if sol is None:
        return None
    x = sol[0]
    E = DualQuat(Quat(*x[:4]), Quat(*x[4:]))
    if C1 * DualQuatPoly.const(E) != C2 or not is_plane_fixing(E):
        return None
    return E


def compose_family(C: DualQuatPoly, e0=ZERO, e3=ZERO, e5=ZERO, e6=ZERO) -> DualQuatPoly:
    """``C * (e0 + e3 k + eps (e5 i + e6 j))``; the trajectory scales by ``e0**2 + e3**2``."""
    e0, e3, e5, e6 = (RPoly.coerce(x) for x in (e0, e3, e5, e6))
    if e0.is_zero() and e3.is_zero():
        raise ZeroPrimalFamily("e0 and e3 are both zero")
    E = DualQuatPoly(QuatPoly(e0, ZERO, ZERO, e3), QuatPoly(ZERO, e5, e6, ZERO))
    return C * E


def family_dimension(Q: QuatPoly, w0: RPoly, bound: int) -> int:
    """Dimension of the affine space of dual parts with ``deg d1, deg d2 <= bound``."""
    return dual_family(Q, w0, bound).dimension


# ---------------------------------------------------------------------------
# Synthesis
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SynthesisResult:
    """A motion ``C`` with ``plane_trajectory(C) = rho * h * w``.

    ``Q`` is the primal core in the original frame (``Q k conj(Q) = sigma *
    vec(w)/g``), ``coordinate_change`` the constant quaternion ``a`` used to
    make the dual solve generic, and ``factor`` the plane-fixing right factor
    appended to the minimal solution (``None`` for a minimal solution).
    """

    C: DualQuatPoly
    h: RPoly
    rho: Fraction
    Q: QuatPoly
    g: RPoly
    coordinate_change: Quat
    transcript: tuple[tuple[str, dict], ...] = field(default=())
    factor: Optional[DualQuatPoly] = None

    @property
    def degree(self) -> int:
        return int(self.C.degree)


def _check_input(w: PlanePoly, auto_reduce: bool) -> tuple[PlanePoly, RPoly]:
    if not any(w.vector):
        raise NotKinematic("zero vector part")
    common = rgcd(w)
    if common != ONE:
        if not auto_reduce:
            raise NotReduced(f"plane polynomial has the real factor {common}")
        w = w.exquo(common)
    return w, common


def synthesize_minimal(
    w: PlanePoly, seed: int = 0, max_attempts: int = MAX_ATTEMPTS, auto_reduce: bool = False
) -> SynthesisResult:
    """Motion of minimal degree ``deg w - deg(vec w / g)/2`` whose moving plane sweeps ``w``."""
    w, removed = _check_input(w, auto_reduce)
    steps: list[tuple[str, dict]] = []
    if removed != ONE:
        steps.append(("reduce", {"removed": str(removed)}))
    s = is_kinematic(w)
    if s is None:
        raise NotKinematic("the vector norm is not a square")
    g = vector_gcd(w)
    v = [p.exquo(g) for p in w.vector]
    Q, sigma = primal_core(*v, seed=seed)
    n = int(Q.degree)
    deg_w = int(w.degree)
    slack = deg_w - 2 * n
    steps.append(("primal", {"g": str(g), "deg_Q": n, "sigma": str(sigma)}))
    # seed 0 tries the given frame first; other seeds start in a random frame
    rng = random.Random(seed)
    for attempt in range(max_attempts):
        a = Q_ONE if attempt == 0 and seed == 0 else _random_quat(rng, 1 + attempt // 4)
        Qa = QuatPoly.const(a.conj()) * Q
        w0a = w.u0 * (a.norm() * sigma)
        try:
            dual = dual_solve(Qa, w0a, slack)
        except (GenericityFailure, NoPolynomialSolution) as exc:
            steps.append(("retry", {"attempt": attempt, "reason": exc.code}))
            continue
        C = DualQuatPoly.const(DualQuat(a)) * DualQuatPoly(Qa * g, dual.D)
        rho = sigma * a.norm() ** 2
        steps.append(("coordinate_change", {"attempt": attempt, "a": [str(x) for x in a.parts]}))
        steps.append(("dual", {"bound": dual.bound, "lambda": str(dual.lam)}))
        result = verify_trajectory(C, w)
        if not result.ok or result.h != g or result.rho != rho:
            raise InvariantViolation(f"synthesized motion fails verification: {result.witness}")
        expected = deg_w - n
        if C.degree != expected:
            raise InvariantViolation(f"degree {C.degree} differs from the minimal degree {expected}")
        steps.append(("verify", {"h": str(result.h), "rho": str(rho), "degree": expected}))
        return SynthesisResult(C, g, rho, Q, g, a, tuple(steps))
    raise GenericityExhausted(f"no generic coordinate frame in {max_attempts} attempts")


def synthesize_with_cofactor(
    w: PlanePoly, h: RPoly, seed: int = 0, max_attempts: int = MAX_ATTEMPTS, auto_reduce: bool = False
) -> SynthesisResult:
    """Motion with ``plane_trajectory(C) = rho * h * w`` for a prescribed cofactor ``h``.

    A solution exists iff ``h`` is a multiple of ``g = rgcd(vec w)`` (else
    ``NoSolution("MINIMALITY")``) and every real root of ``h * g`` has even
    multiplicity (else ``NoSolution("SATURATION")``).  It is the minimal
    solution times a plane-fixing factor ``E`` of norm ``h/g``.
    """
    h = RPoly.coerce(h)
    if h.is_zero():
        raise ZeroPolynomial("cofactor is zero")
    w, _ = _check_input(w, auto_reduce)
    g = vector_gcd(w)
    hm = h.monic()
    if not g.divides(hm):
        raise NoSolution("MINIMALITY", f"cofactor {hm} is not a multiple of the minimal cofactor {g}")
    if _has_odd_real_root(hm * g):
        raise NoSolution("SATURATION", f"the torse scaled by {hm} is not saturated")
    base = synthesize_minimal(w, seed, max_attempts)
    f = hm.exquo(g)
    G, ell = complex_cofactor(f)
    if ell != ONE:
        raise InvariantViolation("cofactor quotient has odd real roots")
    E = DualQuatPoly(QuatPoly.from_cpoly(G))
    C = base.C * E
    result = verify_trajectory(C, w)
    if not result.ok or result.h != hm:
        raise InvariantViolation(f"composed motion fails verification: {result.witness}")
    steps = base.transcript + (("factor", {"norm": str(f), "degree": int(G.degree)}),)
    return SynthesisResult(C, hm, result.rho, base.Q, g, base.coordinate_change, steps, E)


# ---------------------------------------------------------------------------
# Right-factor splitting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitResult:
    quotient: DualQuatPoly
    factor: DualQuatPoly
    norm_of_factor: RPoly


def _require_motion(C: DualQuatPoly) -> None:
    check = is_motion_polynomial(C)
    if not check:
        raise NotAMotionPolynomial(check.reason)


def _finish_split(C: DualQuatPoly, E: DualQuatPoly, norm: RPoly) -> SplitResult:
    quotient, rem = qpoly_divrem(C, E, "right")
    if rem:
        raise InvariantViolation("factor does not divide the motion from the right")
    if quotient * E != C:
        raise InvariantViolation("split does not reconstruct the input")
    if dq_norm(E) != (norm, ZERO):
        raise InvariantViolation("factor norm mismatch")
    if not is_motion_polynomial(quotient):
        raise InvariantViolation("quotient is not a motion polynomial")
    return SplitResult(quotient, E, norm)


def split_quadratic(C: DualQuatPoly, f: RPoly) -> SplitResult:
    """Split ``C = C_tilde * E`` with ``E`` linear, ``N(E) = f`` and ``E`` fixing ``[k]``."""
    _require_motion(C)
    f = RPoly.coerce(f)
    if f.degree != 2:
        raise NotQuadratic(f"{f} is not quadratic")
    f = f.monic()
    if real_root_count(f) > 0:
        raise NotIrreducible(f"{f} has real roots")
    if not f.divides(C.primal.norm()):
        raise NotAFactor(f"{f} does not divide the primal norm")
    if gaussian_quadratic_roots(f) is None:
        raise UnsupportedFieldExtension(f"{f} has no Gaussian-rational roots")
    _, R = qpoly_divrem(C, DualQuatPoly(f))
    r1, r0 = R.coeff(1), R.coeff(0)
    if not r1.is_invertible():
        raise MultiplicityNotOne("remainder has a non-invertible leading coefficient")
    h = -(r1.inverse() * r0)
    E = DualQuatPoly(QuatPoly(T)) - DualQuatPoly.const(h)
    if dq_norm(E) != (f, ZERO):
        raise MultiplicityNotOne(f"no linear right factor of norm {f}")
    if not is_plane_fixing(E):
        raise PreconditionViolation("the linear right factor does not fix the plane [k]")
    return _finish_split(C, E, f)


def split_even_power(C: DualQuatPoly, f: RPoly) -> SplitResult:
    """Split ``C = C_tilde * (f^m + eps F)`` where ``f^m`` is the largest power dividing the primal part."""
    _require_motion(C)
    f = RPoly.coerce(f)
    if f.degree not in (1, 2):
        raise NotQuadratic(f"{f} must be linear or quadratic")
    f = f.monic()
    if f.degree == 2 and real_root_count(f) > 0:
        raise NotIrreducible(f"{f} has real roots")
    P = C.primal
    m = 0
    while all((f ** (m + 1)).divides(p) for p in P.c):
        m += 1
    if m == 0:
        raise NoRealPowerFactor(f"{f} does not divide the primal part")
    fm = f**m
    Q = P.exquo(fm)
    if rpoly_gcd(f, rgcd(Q)) != ONE:
        raise NonCoprimeCore("core still divisible by f")
    R = C.dual.map(lambda p: p % fm)
    try:
        q_inv = mod_inverse(Q.norm(), fm)
    except NotCoprime as exc:
        raise NonCoprimeCore(f"norm of the core is not invertible modulo {fm}") from exc
    F = (Q.conj() * R * q_inv).map(lambda p: p % fm)
    if F.c[0]:
        raise InvariantViolation("dual part of the factor is not vectorial")
    if F.c[3]:
        raise PreconditionViolation("the factor does not fix the plane [k]")
    E = DualQuatPoly(QuatPoly(fm), F)
    return _finish_split(C, E, fm * fm)


__all__ = [
    "DualFamily",
    "DualSolution",
    "SplitResult",
    "SynthesisResult",
    "VerifyResult",
    "complex_cofactor",
    "compose_family",
    "dual_equations_hold",
    "dual_family",
    "dual_solve",
    "essential_equivalence",
    "family_dimension",
    "is_plane_fixing",
    "k_image",
    "lambda_reduce",
    "primal_core",
    "primal_solve",
    "split_even_power",
    "split_quadratic",
    "sum_of_two_squares",
    "synthesize_minimal",
    "synthesize_with_cofactor",
    "verify_trajectory",
]
