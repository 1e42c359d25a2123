"""Exception types raised across the package."""


class SymRankError(Exception):
    """Base class for all errors raised by symrank."""


class NonPrimeCharacteristic(SymRankError, ValueError):
    pass


class ReduciblePolynomial(SymRankError, ValueError):
    """A tower step polynomial factors over the field below it.

    ``witness`` holds a proper monic factor (coefficients, constant term
    first) when one was found, else ``None``.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class CapExceeded(SymRankError, RuntimeError):
    pass


class ZeroArgument(SymRankError, ValueError):
    pass


class ScalarNotInBase(SymRankError, ValueError):
    pass


class DegenerateGenerator(SymRankError, ValueError):
    pass


class NotRankOne(SymRankError, ValueError):
    def __init__(self, index, message=None):
        super().__init__(message or f"matrix {index} does not have rank one")
        self.index = index


class NotSymmetric(SymRankError, ValueError):
    def __init__(self, index, message=None):
        super().__init__(message or f"matrix {index} is not symmetric")
        self.index = index


class ZeroAlpha(SymRankError, ValueError):
    pass


class ZeroEta(SymRankError, ValueError):
    pass


class SolutionNotInBase(SymRankError, ArithmeticError):
    """A Frobenius-stable square system produced a solution outside F_q."""


class UnsupportedQ(SymRankError, ValueError):
    pass


class OddDefect(SymRankError, ValueError):
    pass


class BadDistance(SymRankError, ValueError):
    pass


class BadCode(SymRankError, ValueError):
    pass


class SingularP(SymRankError, ValueError):
    pass


class InvalidCertificate(SymRankError, ValueError):
    pass


class ReproductionMismatch(SymRankError, AssertionError):
    def __init__(self, cell, message=None):
        super().__init__(message or f"reproduction mismatch at {cell}")
        self.cell = cell
