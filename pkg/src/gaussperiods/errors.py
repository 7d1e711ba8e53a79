"""Exception hierarchy shared by every module of the package."""


class GaussPeriodError(Exception):
    """Base class for all errors raised by gaussperiods."""


class NotPrime(GaussPeriodError, ValueError):
    pass


class NotCoprime(GaussPeriodError, ValueError):
    pass


class NotPrimitiveRoot(GaussPeriodError, ValueError):
    pass


class DegreeTooLarge(GaussPeriodError, ValueError):
    pass


class IrreducibilityViolation(GaussPeriodError, ValueError):
    """Raised when q is not a primitive root mod r, so Phi_r splits over F_q."""


class CtxMismatch(GaussPeriodError, TypeError):
    pass


class DivisionByZero(GaussPeriodError, ZeroDivisionError):
    pass


class ResourceExceeded(GaussPeriodError, RuntimeError):
    """A computation ran past its configured work budget."""


class NotCaseOne(GaussPeriodError, ValueError):
    """The instance does not satisfy 'q is a primitive root mod r = 2n+1'."""


class NotInSubfield(GaussPeriodError, ValueError):
    pass


class NotAUnitOfSubgroup(GaussPeriodError, ArithmeticError):
    pass


class LengthMismatch(GaussPeriodError, ValueError):
    pass


class OracleBudgetExceeded(GaussPeriodError, RuntimeError):
    pass
