"""Exception types raised across the package."""


class QFlagError(Exception):
    """Base class for every error raised by qflag."""


class NotDivisible(QFlagError, ArithmeticError):
    pass


class MissingVariable(QFlagError, KeyError):
    pass


class IndexOutOfRange(QFlagError, IndexError):
    pass


class CapMismatch(QFlagError, ValueError):
    pass


class NotAUnit(QFlagError, ArithmeticError):
    pass


class InvalidArguments(QFlagError, ValueError):
    pass


class NotPrime(QFlagError, ValueError):
    pass


class ZeroDimensional(QFlagError, ValueError):
    pass
