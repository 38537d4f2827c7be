"""
Structured exception classes for qeulerian.
Every error carries a machine-readable code and the process exit code
the command-line front end reports for it.
"""
from typing import Optional

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CONFIGURATION = 3


class QEulerianException(Exception):
    """Base exception for qeulerian."""

    def __init__(
        self,
        message: str,
        error_code: Optional[str] = None,
        exit_code: int = EXIT_FAILURE
    ):
        """
        Initialize exception.

        Args:
            message: Error message
            error_code: Machine-readable error code
            exit_code: Process exit code used by the CLI
        """
        super().__init__(message)
        self.message = message
        self.error_code = error_code or self.__class__.__name__
        self.exit_code = exit_code


class KernelError(QEulerianException):
    """Malformed algebraic input (arity mismatch, negative exponent)."""

    def __init__(self, message: str = "Malformed polynomial input"):
        super().__init__(message, "KERNEL_ERROR")


class AlphabetError(QEulerianException):
    """Variable outside the fixed alphabet."""

    def __init__(self, message: str = "Unknown variable"):
        super().__init__(message, "ALPHABET_ERROR")


class NotDivisibleError(QEulerianException):
    """Exact division left a nonzero remainder."""

    def __init__(self, message: str = "Polynomial is not divisible"):
        super().__init__(message, "NOT_DIVISIBLE")


class DivisionByZeroError(QEulerianException, ZeroDivisionError):
    """Division by zero or evaluation at a pole."""

    def __init__(self, message: str = "Division by zero"):
        QEulerianException.__init__(self, message, "DIVISION_BY_ZERO")


class CapabilityError(QEulerianException):
    """Operation requires a ring capability the ring lacks."""

    def __init__(self, message: str = "Ring lacks a required capability"):
        super().__init__(message, "CAPABILITY_ERROR")


class SeriesError(QEulerianException):
    """Invalid truncated power series operation."""

    def __init__(self, message: str = "Invalid series operation"):
        super().__init__(message, "SERIES_ERROR")


class PermutationError(QEulerianException):
    """Malformed permutation word."""

    def __init__(self, message: str = "Malformed permutation"):
        super().__init__(message, "PERMUTATION_ERROR", EXIT_USAGE)


class StatisticError(QEulerianException):
    """Unknown statistic or invalid weight assignment."""

    def __init__(self, message: str = "Invalid statistic weight"):
        super().__init__(message, "STATISTIC_ERROR")


class DecompositionError(QEulerianException):
    """Decomposition or group action invariant violated."""

    def __init__(self, message: str = "Decomposition failed"):
        super().__init__(message, "DECOMPOSITION_ERROR")


class GuardError(QEulerianException):
    """Requested size exceeds an enumeration or table guard."""

    def __init__(self, message: str = "Size outside guard range"):
        super().__init__(message, "GUARD_ERROR", EXIT_CONFIGURATION)


class DegenerateSchemeError(QEulerianException):
    """Substitution scheme violates x != y or u1 != 0."""

    def __init__(self, message: str = "Degenerate substitution scheme"):
        super().__init__(message, "DEGENERATE_SCHEME")


class UnknownIdentityError(QEulerianException):
    """Unknown verifier id."""

    def __init__(self, message: str = "Unknown identity id"):
        super().__init__(message, "UNKNOWN_IDENTITY", EXIT_USAGE)


class UnknownFamilyError(QEulerianException):
    """Unknown polynomial family."""

    def __init__(self, message: str = "Unknown family"):
        super().__init__(message, "UNKNOWN_FAMILY", EXIT_USAGE)


class ConfigurationError(QEulerianException):
    """Configuration error."""

    def __init__(self, message: str = "Configuration error"):
        super().__init__(message, "CONFIGURATION_ERROR", EXIT_CONFIGURATION)
