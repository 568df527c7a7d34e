"""Exception hierarchy shared by every module."""


class CircuitSplitError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class UndefinedOperation(CircuitSplitError, ArithmeticError):
    pass


class NetworkFormatError(CircuitSplitError, ValueError):
    pass


class MatrixError(CircuitSplitError, ValueError):
    pass


class SplitSystemError(CircuitSplitError, ValueError):
    pass


class EmbeddingError(CircuitSplitError):
    pass


class SizeGuardError(CircuitSplitError):
    pass


class NotKalmansonError(CircuitSplitError):
    """Raised with the offending quadruple (or triple) of labels."""

    def __init__(self, message, witness=None, block=None):
        super().__init__(message)
        self.witness = witness
        self.block = block
