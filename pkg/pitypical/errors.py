from __future__ import annotations


class PiTypicalError(Exception):
    """Root of every error raised by the library."""


class FieldSpecError(PiTypicalError, ValueError):
    pass


class NotEisenstein(FieldSpecError):
    pass


class ReducibleResidual(FieldSpecError):
    pass


class BadPrecision(FieldSpecError):
    pass


class SpecMismatch(PiTypicalError, ValueError):
    pass


class NotDivisible(PiTypicalError, ArithmeticError):
    pass


class NotUnit(PiTypicalError, ArithmeticError):
    pass


class PrecisionExhausted(PiTypicalError, ArithmeticError):
    """Raised when a computation runs out of p-adic digits; callers retry at a larger M."""


class NonzeroConstant(PiTypicalError, ValueError):
    pass


class FrobeniusSeriesError(PiTypicalError, ValueError):
    pass


class BadLinearTerm(FrobeniusSeriesError):
    pass


class BadFrobeniusReduction(FrobeniusSeriesError):
    pass


class DivisionObstruction(PiTypicalError, ArithmeticError):
    pass


class IntegralityFailure(PiTypicalError, ArithmeticError):
    pass


class OutOfRange(PiTypicalError, IndexError):
    pass


class CertificateFailure(PiTypicalError, AssertionError):
    pass


class MismatchAgainstQnPlus1(PiTypicalError, AssertionError):
    pass
