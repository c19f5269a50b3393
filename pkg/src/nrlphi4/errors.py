"""Exception types shared across the package."""


class NRLError(Exception):
    """Base class for all errors raised by nrlphi4."""


class DegenerateMassError(NRLError, ValueError):
    pass


class LogSingularityError(NRLError, ValueError):
    pass


class DomainError(NRLError, ValueError):
    pass


class ToleranceError(NRLError, RuntimeError):
    """Quadrature did not reach the requested accuracy."""

    def __init__(self, message, estimate=None, error=None):
        super().__init__(message)
        self.estimate = estimate
        self.error = error


class ResonancePoleError(NRLError, ArithmeticError):
    def __init__(self, message, k):
        super().__init__(message)
        self.k = k


class SolverError(NRLError, RuntimeError):
    """Root finder or eigensolver failure; ``best`` carries the last estimate."""

    def __init__(self, message, best=None):
        super().__init__(message)
        self.best = best


class CalibrationError(NRLError, RuntimeError):
    pass


class BasisSizeError(NRLError, ValueError):
    def __init__(self, message, required):
        super().__init__(message)
        self.required = required


class SuperluminalBoostError(NRLError, ValueError):
    pass


class ConfigError(NRLError, ValueError):
    def __init__(self, message, line=None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class ContractError(NRLError, ValueError):
    pass
