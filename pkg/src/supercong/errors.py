"""Exception hierarchy shared by every module of the package."""


class SupercongError(Exception):
    """Base class for all library errors."""


class NotPrime(SupercongError, ValueError):
    pass


class NonUnitDenominator(SupercongError, ValueError):
    """A rational argument has a denominator divisible by the prime."""


class NotAUnit(SupercongError, ValueError):
    pass


class OrderTooLarge(SupercongError, ValueError):
    """Requested Taylor order exceeds p - 2."""


class MissingOrder(SupercongError, ValueError):
    pass


class UnsupportedModulus(SupercongError, ValueError):
    pass


class LowerParameterPole(SupercongError, ZeroDivisionError):
    """A lower Pochhammer symbol vanishes inside the truncation window."""

    def __init__(self, parameter, k):
        self.parameter = parameter
        self.k = k
        super().__init__(f"lower parameter {parameter} vanishes at k={k}")

    def __reduce__(self):
        return (type(self), (self.parameter, self.k))


class PrecisionUnreachable(SupercongError, ArithmeticError):
    pass


class NotTerminating(SupercongError, ValueError):
    pass


class ZeroProduct(SupercongError, ValueError):
    pass


class DegeneratePlane(SupercongError, ValueError):
    """Every linear coefficient of a hyperplane vanishes mod p."""


class BasePointOnIntersection(SupercongError, ValueError):
    pass


class PrimeTooSmall(SupercongError, ValueError):
    pass


class NodesCollide(SupercongError, ValueError):
    """Two interpolation nodes agree mod p."""


class GridTooLarge(SupercongError, ValueError):
    pass


class UnsupportedDecomposition(SupercongError, ValueError):
    pass


class UnknownTheorem(SupercongError, KeyError):
    pass
