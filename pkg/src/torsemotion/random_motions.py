"""Seeded random motion polynomials for round-trip testing.

Motions are products of linear rotation factors ``t - h`` (``h = p + eps d``
with ``d`` a vector orthogonal to the vector part of ``p``) and constant
translations ``1 + eps tau``.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .dq import DQ_ONE, DualQuat, DualQuatPoly, Quat, QuatPoly
from .ring import T


def _rand_frac(rng: random.Random, size: int) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 2))


def _cross(a, b):
    return (a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0])


def random_rotation_factor(rng: random.Random, size: int = 3) -> DualQuatPoly:
    """``t - (p + eps d)`` with ``d`` orthogonal to the axis of ``p``."""
    while True:
        axis = tuple(_rand_frac(rng, size) for _ in range(3))
        if any(axis):
            break
    p = Quat(_rand_frac(rng, size), *axis)
    d = _cross(axis, tuple(_rand_frac(rng, size) for _ in range(3)))
    h = DualQuat(p, Quat(0, *d))
    return DualQuatPoly(QuatPoly(T)) - DualQuatPoly.const(h)


def random_translation(rng: random.Random, size: int = 3) -> DualQuatPoly:
    tau = Quat(0, *(_rand_frac(rng, size) for _ in range(3)))
    return DualQuatPoly.const(DualQuat(Quat(1), tau))


def random_motion_polynomial(rng: random.Random, degree: int, translations: int = 1) -> DualQuatPoly:
    """Product of ``degree`` rotation factors with ``translations`` translations mixed in."""
    factors = [random_rotation_factor(rng) for _ in range(degree)]
    for _ in range(translations):
        factors.insert(rng.randint(0, len(factors)), random_translation(rng))
    C = DQ_ONE
    for f in factors:
        C = C * f
    return C
