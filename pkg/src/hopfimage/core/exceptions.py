# exceptions.py

from typing import Any, Optional


class HopfImageError(Exception):
    """Base class for every error raised by hopfimage."""
    pass


class ConfigurationError(HopfImageError):
    """Exception raised for errors in the configuration."""
    pass


class ProcessingError(HopfImageError):
    """Exception raised when an input document cannot be parsed or interpreted."""
    pass


class DimensionError(HopfImageError, ValueError):
    """Matrix or tuple shapes do not fit together."""
    pass


class InvalidInputError(HopfImageError, ValueError):
    """Input violates a mathematical precondition (Hadamard, unitarity, ...)."""
    pass


class DomainError(HopfImageError, ValueError):
    """Oracle requested outside the range where its formula holds."""
    pass


class SizeGuardError(HopfImageError):
    """An enumeration would exceed its configured guard."""

    def __init__(self, message: str, limit: int):
        super().__init__(message)
        self.limit = limit


class CapacityError(HopfImageError):
    """The transfer matrix would be larger than the configured cap."""

    def __init__(self, required: int, cap: int, level: Optional[int] = None, max_level: Optional[int] = None):
        if max_level is not None and level is not None and level > max_level:
            message = f"Level k = {level} exceeds the maximum level {max_level}"
        else:
            message = f"Transfer matrix needs n^k = {required} rows, cap is {cap}"
        super().__init__(message)
        self.required = required
        self.cap = cap
        self.level = level
        self.max_level = max_level


class NonConvergenceError(HopfImageError):
    """Cesàro averaging did not reach the tolerance within max_rounds."""

    def __init__(self, residual: float, rounds: int):
        super().__init__(
            f"Cesàro averaging did not converge after {rounds} rounds "
            f"(last residual {residual:.3e}); either ||T|| > 1 or T mixes slowly"
        )
        self.residual = residual
        self.rounds = rounds


class InconsistencyError(HopfImageError):
    """Kernel-rank and Cesàro-rank multiplicities disagree."""

    def __init__(self, kernel: int, cesaro: int, level: Optional[int] = None):
        where = f" at level k={level}" if level is not None else ""
        super().__init__(
            f"Eigenvalue-1 multiplicity methods disagree{where}: kernel={kernel}, cesaro={cesaro}"
        )
        self.kernel = kernel
        self.cesaro = cesaro
        self.level = level


class CertificationError(HopfImageError):
    """A level failed during certification; the partial report is attached."""

    def __init__(self, message: str, partial_report: Any):
        super().__init__(message)
        self.partial_report = partial_report


class NumericalError(HopfImageError):
    """A dense linear-algebra routine failed, e.g. an SVD that did not converge."""
    pass
