"""Built-in worked examples and their end-to-end runs.

The fixtures hold the worked examples in exact arithmetic.  The degree-4
motion of example 6 needs an ``(i - j + k) t^5`` primal term; without it the
polynomial fails the Study condition.  Both versions are kept, see
:data:`EXAMPLE6_MISSING_TERM`.
"""

from __future__ import annotations

from fractions import Fraction as F
from typing import Callable

from .dq import DualQuat, DualQuatPoly, PlanePoly, Quat, QuatPoly, dq_norm, is_motion_polynomial
from .ring import RPoly, T, squarefree_decompose
from .synthesis import (
    complex_cofactor,
    dual_solve,
    essential_equivalence,
    split_even_power,
    split_quadratic,
    synthesize_minimal,
    synthesize_with_cofactor,
    verify_trajectory,
)
from .torse import analyze, canonical_representative, is_kinematic, saturation


def _dq(terms: dict[int, tuple[tuple, tuple]]) -> DualQuatPoly:
    n = max(terms)
    zero = ((0, 0, 0, 0), (0, 0, 0, 0))
    coeffs = []
    for d in range(n + 1):
        p, e = terms.get(d, zero)
        coeffs.append(DualQuat(Quat(*p), Quat(*e)))
    return DualQuatPoly.from_coeffs(coeffs)


def _scaled(c: F, parts) -> tuple:
    return tuple(c * x for x in parts)


# example 1: a rational-function torse, components (numerator, denominator) for u0, u1, u2, u3
EXAMPLE1_RATIONAL = (
    (RPoly([1, 1]), RPoly([0, -1, 1])),
    (RPoly([1, 1]), RPoly([0, 1])),
    (RPoly([1]), RPoly([-1, 1])),
    (RPoly([2, 2]), RPoly([-1, 1])),
)
EXAMPLE1_REDUCED = PlanePoly(RPoly([1, 1]), RPoly([-1, 0, 1]), T, RPoly([0, 2, 2]))

# example 2: a real polynomial and its complex cofactor
EXAMPLE2_G = RPoly([0, 1]) ** 2 * RPoly([-1, 1]) ** 3 * RPoly([1, 0, 1])

# example 3: a torse that is neither saturated nor kinematic
EXAMPLE3_PLANE = PlanePoly(
    RPoly.monomial(8),
    EXAMPLE2_G * T,
    EXAMPLE2_G * RPoly([-1, 1]),
    EXAMPLE2_G * RPoly([-2, 1]),
)

# example 4: a kinematic torse whose vector part has the real factor h
EXAMPLE4_H = RPoly([10, -6, 1])
EXAMPLE4_V = (RPoly([2, -6, 2]), RPoly([-4, 4, -2]), RPoly([4, -2, -1]))
EXAMPLE4_U0 = RPoly([20, -14, 2])
EXAMPLE4_PLANE = PlanePoly(EXAMPLE4_U0, *(EXAMPLE4_H * v for v in EXAMPLE4_V))
EXAMPLE4_Q = QuatPoly(RPoly([1]), RPoly([0, 1]), RPoly([1, -1]), RPoly([-2, 1]))

EXAMPLE4_MOTION = _dq({
    3: ((0, 1, -1, 1), (0, 0, 0, 0)),
    2: ((1, -6, 7, -8), (0, 0, 0, 0)),
    1: ((-6, 10, -16, 22), _scaled(F(1, 15), (-32, 8, 9, 1))),
    0: ((10, 0, 10, -20), _scaled(F(1, 3), (13, -2, -1, 6))),
})

# example 5: a degree-4 solution with cofactor (t^2 + 1) h and its linear right factor
EXAMPLE5_MOTION = _dq({
    4: ((0, 1, -1, 1), (-2, 1, 1, 0)),
    3: ((2, -5, 8, -8), (13, -8, -8, 1)),
    2: ((-14, 3, -22, 21), _scaled(F(1, 15), (-437, 383, 324, -104))),
    1: ((32, 16, 20, -14), _scaled(F(1, 15), (306, -589, -207, 302))),
    0: ((-20, -10, 0, -10), _scaled(F(1, 3), (-24, 91, -32, -43))),
})
EXAMPLE5_FACTOR = _dq({
    1: ((1, 0, 0, 0), (0, 1, -1, 0)),
    0: ((0, 0, 0, -1), (0, 1, 1, 0)),
})

# example 6: a solution with cofactor t^4 h and its quadratic right factor
EXAMPLE6_MISSING_TERM = _dq({5: ((0, 1, -1, 1), (0, 0, 0, 0))})
EXAMPLE6_MOTION_TRUNCATED = _dq({
    4: ((1, -6, 7, -8), (-2, 1, 1, 0)),
    3: ((-6, 10, -16, 22), _scaled(F(1, 15), (163, -112, -111, 16))),
    2: ((10, 0, 10, -20), _scaled(F(1, 3), (-68, 73, 62, -15))),
    1: ((0, 0, 0, 0), (16, -38, -14, 16)),
    0: ((0, 0, 0, 0), (-10, 30, -10, -10)),
})
EXAMPLE6_MOTION = EXAMPLE6_MOTION_TRUNCATED + EXAMPLE6_MISSING_TERM
EXAMPLE6_FACTOR = _dq({
    2: ((1, 0, 0, 0), (0, 0, 0, 0)),
    1: ((0, 0, 0, 0), (0, 1, -1, 0)),
    0: ((0, 0, 0, 0), (0, 1, 1, 0)),
})


# ---------------------------------------------------------------------------
# Runs
# ---------------------------------------------------------------------------


def _verdict(ok: bool) -> str:
    return "ok" if ok else "FAILED"


def demo_example1() -> dict:
    rep = canonical_representative(EXAMPLE1_RATIONAL)
    return {
        "input": [f"({n})/({d})" for n, d in EXAMPLE1_RATIONAL],
        "representative": rep,
        "degree": int(rep.degree),
        "verdict": _verdict(rep == EXAMPLE1_REDUCED),
    }


def demo_example2() -> dict:
    G, ell = complex_cofactor(EXAMPLE2_G)
    parts = squarefree_decompose(EXAMPLE2_G).parts
    ok = G.norm() == ell * EXAMPLE2_G and ell == RPoly([-1, 1]) and G.degree == 4
    return {
        "g": EXAMPLE2_G,
        "squarefree_parts": [(str(f), m) for f, m in parts],
        "G": G,
        "ell": ell,
        "verdict": _verdict(ok),
    }


def demo_example3() -> dict:
    sat = saturation(EXAMPLE3_PLANE)
    s = is_kinematic(EXAMPLE3_PLANE)
    ok = not sat.saturated and sat.ell == RPoly([-1, 1]) and s is None
    return {
        "plane": EXAMPLE3_PLANE,
        "saturated": sat.saturated,
        "ell": sat.ell,
        "kinematic": s is not None,
        "verdict": _verdict(ok),
    }


def demo_example4(seed: int = 0) -> dict:
    info = analyze(EXAMPLE4_PLANE)
    dual = dual_solve(EXAMPLE4_Q, EXAMPLE4_U0, slack=int(EXAMPLE4_H.degree))
    result = synthesize_minimal(EXAMPLE4_PLANE, seed=seed)
    check = verify_trajectory(result.C, EXAMPLE4_PLANE)
    fixture = verify_trajectory(EXAMPLE4_MOTION, EXAMPLE4_PLANE)
    core_primal = EXAMPLE4_MOTION.primal == EXAMPLE4_Q * EXAMPLE4_H
    ok = (
        check.ok and check.h == EXAMPLE4_H and result.degree == 3
        and fixture.ok and fixture.h == EXAMPLE4_H
        and dual.D == EXAMPLE4_MOTION.dual and core_primal
    )
    return {
        "plane": EXAMPLE4_PLANE,
        "analysis": info,
        "dual_part_with_given_core": {
            "v3_inv": dual.v3_inv, "d1": dual.D.c[1], "d2": dual.D.c[2],
            "d0": dual.D.c[0], "d3": dual.D.c[3], "lambda": dual.lam,
        },
        "synthesized": result.C,
        "verify": {"ok": check.ok, "h": check.h, "rho": check.rho},
        "fixture_verify": {"ok": fixture.ok, "h": fixture.h, "rho": fixture.rho},
        "verdict": _verdict(ok),
    }


def demo_example5(seed: int = 0) -> dict:
    split = split_quadratic(EXAMPLE5_MOTION, RPoly([1, 0, 1]))
    fixture = verify_trajectory(EXAMPLE5_MOTION, EXAMPLE4_PLANE)
    quotient = verify_trajectory(split.quotient, EXAMPLE4_PLANE)
    link = essential_equivalence(split.quotient, EXAMPLE4_MOTION)
    built = synthesize_with_cofactor(EXAMPLE4_PLANE, RPoly([1, 0, 1]) * EXAMPLE4_H, seed=seed)
    ok = (
        fixture.ok and fixture.h == RPoly([1, 0, 1]) * EXAMPLE4_H
        and quotient.ok and quotient.h == EXAMPLE4_H
        and split.quotient * split.factor == EXAMPLE5_MOTION
        and EXAMPLE4_MOTION * EXAMPLE5_FACTOR == EXAMPLE5_MOTION
        and link is not None and built.degree == 4
    )
    return {
        "motion": EXAMPLE5_MOTION,
        "fixture_verify": {"ok": fixture.ok, "h": fixture.h, "rho": fixture.rho},
        "factor": split.factor,
        "quotient": split.quotient,
        "quotient_verify": {"ok": quotient.ok, "h": quotient.h, "rho": quotient.rho},
        "constant_link_to_cubic": link,
        "synthesized_degree_4": built.C,
        "verdict": _verdict(ok),
    }


def demo_example6() -> dict:
    split = split_even_power(EXAMPLE6_MOTION, T)
    fixture = verify_trajectory(EXAMPLE6_MOTION, EXAMPLE4_PLANE)
    truncated = is_motion_polynomial(EXAMPLE6_MOTION_TRUNCATED)
    quotient = verify_trajectory(split.quotient, EXAMPLE4_PLANE)
    ok = (
        fixture.ok and fixture.h == RPoly.monomial(4) * EXAMPLE4_H
        and split.quotient * split.factor == EXAMPLE6_MOTION
        and EXAMPLE4_MOTION * EXAMPLE6_FACTOR == EXAMPLE6_MOTION
        and quotient.ok and quotient.h == EXAMPLE4_H
        and dq_norm(split.factor).primal == RPoly.monomial(4)
    )
    return {
        "motion": EXAMPLE6_MOTION,
        "truncated_version_is_motion": bool(truncated),
        "fixture_verify": {"ok": fixture.ok, "h": fixture.h, "rho": fixture.rho},
        "factor": split.factor,
        "quotient": split.quotient,
        "quotient_verify": {"ok": quotient.ok, "h": quotient.h, "rho": quotient.rho},
        "verdict": _verdict(ok),
    }


DEMOS: dict[str, Callable[[], dict]] = {
    "example1": demo_example1,
    "example2": demo_example2,
    "example3": demo_example3,
    "example4": demo_example4,
    "example5": demo_example5,
    "example6": demo_example6,
}
