"""Classification of plane polynomials (rational torses).

For a plane polynomial ``u`` the interesting data are the real gcd ``g`` of its
vector part, whether the vector-part norm is a square (kinematic), whether the
real zeros of ``g`` all have even multiplicity (saturated), and the degree of
the Gauss map.  These determine the minimal degree of a rational motion whose
moving plane ``[k]`` sweeps the torse.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .dq import PlanePoly, mobius_reparametrize, reduce, rgcd
from .errors import (
    FailedToEqualize,
    InvariantViolation,
    UnsupportedFieldExtension,
    ZeroVectorPart,
)
from .ring import (
    ONE,
    RPoly,
    factor_over_rationals,
    gcd_many,
    poly_sqrt,
    real_root_count,
    rpoly_lcm,
    squarefree_decompose,
)


def _require_vector(u: PlanePoly) -> None:
    if not any(u.vector):
        raise ZeroVectorPart("the vector part of the plane polynomial is zero")


def vector_gcd(u: PlanePoly) -> RPoly:
    """Monic gcd of ``u1, u2, u3``."""
    _require_vector(u)
    return gcd_many(u.vector)


def canonical_representative(components: Sequence[tuple[RPoly, RPoly]]) -> PlanePoly:
    """Reduced polynomial representative of a torse given by rational functions.

    ``components`` holds ``(numerator, denominator)`` pairs in the order
    ``u0, u1, u2, u3``.  Denominators are cleared with their least common
    multiple and the result is divided by its real gcd.  The output is scaled
    so that its first nonzero vector coefficient has a positive leading
    coefficient.
    """
    if len(components) != 4:
        raise ValueError("expected four (numerator, denominator) pairs")
    nums = [RPoly.coerce(n) for n, _ in components]
    dens = [RPoly.coerce(d) for _, d in components]
    if any(d.is_zero() for d in dens):
        raise ZeroDivisionError("zero denominator")
    if not any(nums[1:]):
        raise ZeroVectorPart("the vector part of the torse is zero")
    m = ONE
    for d in dens:
        m = rpoly_lcm(m, d)
    cleared = PlanePoly(*(n * m.exquo(d) for n, d in zip(nums, dens)))
    reduced, _ = reduce(cleared)
    lead = next(p for p in reduced.vector if p).lc
    return reduced.scale(1 / lead) if lead < 0 else reduced


def is_kinematic(u: PlanePoly) -> Optional[RPoly]:
    """Return ``s`` with ``s**2 = u1**2 + u2**2 + u3**2`` or ``None``.

    ``None`` means the norm is not a square over the reals (some real
    multiplicity is odd).  If it is a square over the reals but its leading
    coefficient is not a rational square, ``UnsupportedFieldExtension`` is
    raised: the torse is kinematic but only over an extension of the rationals.
    """
    _require_vector(u)
    n = u.vector_norm()
    s = poly_sqrt(n)
    if s is not None:
        return s
    if any(m % 2 for _, m in squarefree_decompose(n).parts):
        return None
    raise UnsupportedFieldExtension(
        f"vector norm is a square only after scaling by an irrational constant (leading coefficient {n.lc})"
    )


@dataclass(frozen=True)
class SaturationResult:
    saturated: bool
    ell: RPoly


def saturating_factor(g: RPoly) -> RPoly:
    """Product of the real linear factors of ``g`` with odd multiplicity, each once.

    Raises ``UnsupportedFieldExtension`` when an odd-multiplicity part has
    irrational real roots.
    """
    ell = ONE
    for part, mult in squarefree_decompose(g).parts:
        if mult % 2 == 0:
            continue
        residual = ONE
        for f, _ in factor_over_rationals(part):
            if f.degree == 1:
                ell = ell * f
            else:
                residual = residual * f
        if residual.degree > 0 and real_root_count(residual) > 0:
            raise UnsupportedFieldExtension(
                f"odd-multiplicity factor {residual} has irrational real roots"
            )
    return ell


def saturation(u: PlanePoly) -> SaturationResult:
    ell = saturating_factor(vector_gcd(u))
    return SaturationResult(ell == ONE, ell)


def _divisors(fact) -> list[RPoly]:
    ranges = [range(m + 1) for _, m in fact.factors]
    out = []
    for exps in itertools.product(*ranges):
        d = ONE
        for (f, _), e in zip(fact.factors, exps):
            d = d * f**e
        if d != ONE:
            out.append(d)
    return out


def minimally_saturated(u: PlanePoly) -> bool:
    """Saturated, and no real factor ``f`` of ``u`` leaves ``u/f`` saturated."""
    if not saturation(u).saturated:
        return False
    common = rgcd(u)
    if common == ONE:
        return True
    for f in _divisors(factor_over_rationals(common)):
        try:
            if saturation(u.exquo(f)).saturated:
                return False
        except UnsupportedFieldExtension:
            continue
    return True


@dataclass(frozen=True)
class TorseAnalysis:
    """Summary of a plane polynomial.

    Saturation data (``ell``, ``saturated``, ``minimally_saturated``) refer to
    the input as given.  Degree data (``g``, ``deg_u``, ``deg_gauss`` and the
    predictions) refer to its reduced representative, so they do not depend on
    the chosen representative.
    """

    reduced: bool
    kinematic: bool
    norm_sqrt: Optional[RPoly]
    g: RPoly
    ell: Optional[RPoly]
    saturated: Optional[bool]
    minimally_saturated: Optional[bool]
    deg_u: int
    deg_gauss: int
    minimal_motion_degree: Optional[int]
    essentially_unique: Optional[bool]
    unsupported_reason: Optional[str] = None
    reduction_cofactor: RPoly = field(default=ONE)

    @property
    def supported(self) -> bool:
        return self.unsupported_reason is None


def analyze(u: PlanePoly) -> TorseAnalysis:
    _require_vector(u)
    w, cofactor = reduce(u)
    g = vector_gcd(w)
    deg_u = int(w.degree)
    deg_gauss = int(max(p.degree for p in w.vector)) - int(g.degree)
    unsupported = None

    try:
        s = is_kinematic(w)
    except UnsupportedFieldExtension:
        s = None
        unsupported = UnsupportedFieldExtension.code
    kinematic = s is not None or unsupported is not None

    try:
        sat = saturation(u)
        ell, saturated = sat.ell, sat.saturated
        min_sat = minimally_saturated(u)
    except UnsupportedFieldExtension:
        ell = saturated = min_sat = None
        unsupported = UnsupportedFieldExtension.code

    minimal = unique = None
    if kinematic:
        if deg_gauss % 2:
            raise InvariantViolation(f"odd Gauss map degree {deg_gauss} for a kinematic torse")
        minimal = deg_u - deg_gauss // 2
        unique = deg_u == deg_gauss
    return TorseAnalysis(
        reduced=cofactor == ONE,
        kinematic=kinematic,
        norm_sqrt=s,
        g=g,
        ell=ell,
        saturated=saturated,
        minimally_saturated=min_sat,
        deg_u=deg_u,
        deg_gauss=deg_gauss,
        minimal_motion_degree=minimal,
        essentially_unique=unique,
        unsupported_reason=unsupported,
        reduction_cofactor=cofactor,
    )


def _mobius_candidates(limit: int):
    for n in range(1, limit + 1):
        for beta in (n, -n):
            yield Fraction(beta)


def equalize_degrees(u: PlanePoly, max_attempts: int = 64) -> tuple[PlanePoly, tuple[Fraction, Fraction, Fraction, Fraction]]:
    """Reparametrize so that all nonzero components have the same degree.

    Uses ``t -> (beta t + 1)/t`` for ``beta = 1, -1, 2, -2, ...``; after
    clearing denominators a component ``p`` has degree ``deg u`` exactly when
    ``p(beta) != 0``.  Zero components stay zero.  Returns the new polynomial
    and the transform ``(alpha, beta, gamma, delta)``.
    """
    _require_vector(u)
    nonzero = [p for p in u.components if p]
    identity = (Fraction(1), Fraction(0), Fraction(0), Fraction(1))
    if len({p.degree for p in nonzero}) == 1:
        return u, identity
    tried = 0
    for beta in _mobius_candidates(max_attempts):
        tried += 1
        if tried > max_attempts:
            break
        if all(p(beta) != 0 for p in nonzero):
            m = (beta, Fraction(1), Fraction(1), Fraction(0))
            out = mobius_reparametrize(u, *m)
            if len({p.degree for p in out.components if p}) != 1:
                raise InvariantViolation("reparametrization did not equalize degrees")
            return out, m
    raise FailedToEqualize(f"no suitable reparametrization among {max_attempts} candidates")


__all__ = [
    "SaturationResult",
    "TorseAnalysis",
    "analyze",
    "canonical_representative",
    "equalize_degrees",
    "is_kinematic",
    "minimally_saturated",
    "saturating_factor",
    "saturation",
    "vector_gcd",
]
