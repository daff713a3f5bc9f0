"""Exception types.

Every error carries a machine-readable ``code`` used by the CLI and by the
JSON diagnostics of :class:`~torsemotion.torse.TorseAnalysis`.
"""

from __future__ import annotations


class TorseMotionError(Exception):
    code = "ERROR"


class ZeroPolynomial(TorseMotionError, ValueError):
    code = "ZERO_POLYNOMIAL"


class DivisionByZeroPoly(TorseMotionError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO_POLY"


class BothZero(TorseMotionError, ValueError):
    code = "BOTH_ZERO"


class NotCoprime(TorseMotionError, ValueError):
    code = "NOT_COPRIME"


class NotQuadratic(TorseMotionError, ValueError):
    code = "NOT_QUADRATIC"


class NotIrreducible(TorseMotionError, ValueError):
    code = "NOT_IRREDUCIBLE"


class UnsupportedFieldExtension(TorseMotionError):
    """The exact answer needs coefficients outside the rationals."""

    code = "UNSUPPORTED_FIELD_EXTENSION"


class NonInvertibleLeadingCoefficient(TorseMotionError, ValueError):
    code = "NON_INVERTIBLE_LEADING_COEFFICIENT"


class NotAMotionPolynomial(TorseMotionError, ValueError):
    code = "NOT_A_MOTION_POLYNOMIAL"


class NotMotionPolynomials(NotAMotionPolynomial):
    code = "NOT_MOTION_POLYNOMIALS"


class SingularMobius(TorseMotionError, ValueError):
    code = "SINGULAR_MOBIUS"


class ZeroVectorPart(TorseMotionError, ValueError):
    code = "ZERO_VECTOR_PART"


class FailedToEqualize(TorseMotionError):
    code = "FAILED_TO_EQUALIZE"


class NotKinematic(TorseMotionError):
    code = "NOT_KINEMATIC"


class NotReduced(TorseMotionError, ValueError):
    code = "NOT_REDUCED"


class GenericityFailure(TorseMotionError):
    """A coordinate-dependent genericity condition failed; retry in new coordinates."""

    code = "GENERICITY_FAILURE"


class GenericityExhausted(TorseMotionError):
    code = "GENERICITY_EXHAUSTED"


class NoPolynomialSolution(TorseMotionError):
    code = "NO_POLYNOMIAL_SOLUTION"


class PreconditionViolation(TorseMotionError, ValueError):
    code = "PRECONDITION_VIOLATION"


class NoSolution(TorseMotionError):
    """No motion exists for the requested cofactor.

    ``reason`` is ``"MINIMALITY"`` when the cofactor is not a multiple of the
    minimal one and ``"SATURATION"`` when the scaled torse is not saturated.
    """

    code = "NO_SOLUTION"

    def __init__(self, reason: str, message: str = ""):
        super().__init__(message or reason)
        self.reason = reason


class NotAFactor(TorseMotionError, ValueError):
    code = "NOT_A_FACTOR"


class MultiplicityNotOne(TorseMotionError):
    code = "MULTIPLICITY_NOT_ONE"


class NoRealPowerFactor(TorseMotionError, ValueError):
    code = "NO_REAL_POWER_FACTOR"


class NonCoprimeCore(TorseMotionError):
    code = "NON_COPRIME_CORE"


class ZeroPrimalFamily(TorseMotionError, ValueError):
    code = "ZERO_PRIMAL_FAMILY"


class InvariantViolation(TorseMotionError, AssertionError):
    """Internal consistency check failed. Always a bug or unsupported input."""

    code = "INVARIANT_VIOLATION"
