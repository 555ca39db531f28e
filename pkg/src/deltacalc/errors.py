"""Exception hierarchy shared by all modules."""


class DeltaCalcError(Exception):
    """Base class for library errors."""


class ZeroDenominator(DeltaCalcError, ZeroDivisionError):
    pass


class PoleAtPoint(DeltaCalcError):
    pass


class NotUnivariate(DeltaCalcError, ValueError):
    pass


class DegreeExceeded(DeltaCalcError, ValueError):
    pass


class UnsupportedBasis(DeltaCalcError, ValueError):
    pass


class DegreeMismatch(DeltaCalcError, ValueError):
    pass


class NonIntegralMultiplicity(DeltaCalcError, ValueError):
    pass


class NotPartitionContent(DeltaCalcError, ValueError):
    pass


class SingularSystem(DeltaCalcError):
    pass


class NotSymmetric(DeltaCalcError):
    pass


class NotSubstaircase(DeltaCalcError, ValueError):
    pass


class LengthMismatch(DeltaCalcError, ValueError):
    pass


class DivisionFailure(DeltaCalcError):
    pass


class BadParams(DeltaCalcError, ValueError):
    pass


class NotZeroDimensional(DeltaCalcError):
    pass


class NotEquivariant(DeltaCalcError):
    pass


class DuplicatePoints(DeltaCalcError, ValueError):
    pass


class NotPolynomial(DeltaCalcError, ValueError):
    pass


class ZeroColumn(DeltaCalcError, ValueError):
    pass


class BudgetExceeded(DeltaCalcError):
    pass


class NotConvex(DeltaCalcError, ValueError):
    pass


class SingularBasis(DeltaCalcError):
    pass
