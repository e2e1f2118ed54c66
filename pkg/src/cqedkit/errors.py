"""Exception types raised across the package."""


class CqedkitError(Exception):
    """Base class for all errors raised by cqedkit."""


class DomainError(CqedkitError, ValueError):
    """A physical parameter is outside its valid domain."""


class ConvergenceError(CqedkitError):
    """An iterative solver stopped before reaching its accuracy target.

    The ``worst_residual`` attribute carries the largest residual observed
    when the iteration was abandoned, when available.
    """

    def __init__(self, message: str, worst_residual: float | None = None):
        super().__init__(message)
        self.worst_residual = worst_residual


class CutoffError(CqedkitError):
    """Charge-basis cutoff adaptation did not converge below its cap."""


class MatrixValidationError(CqedkitError, ValueError):
    """A matrix violates a structural requirement (shape, symmetry, signs)."""


class ReductionError(CqedkitError):
    """Network reduction failed: eliminated block singular or ill-conditioned."""


class ConfigurationError(CqedkitError, ValueError):
    """Inconsistent or incomplete configuration (e.g. missing ground role)."""


class SchemaError(CqedkitError, ValueError):
    """A document does not match the expected schema.

    ``path`` points at the offending item, e.g. ``qubits[0].ic_total``.
    """

    def __init__(self, message: str, path: str = ""):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


class DegeneracyError(CqedkitError):
    """Dispersive formula evaluated at or too close to a resonance."""


class LabelingError(CqedkitError):
    """Dressed states cannot be unambiguously matched to bare product states."""


class InfeasibleTargetError(CqedkitError):
    """Inverse-fit target cannot be reached inside the search bracket.

    ``bracket`` is the (low, high) interval that was searched.
    """

    def __init__(self, message: str, bracket: tuple[float, float] | None = None):
        super().__init__(message)
        self.bracket = bracket


class AnalysisError(CqedkitError):
    """Device-level analysis failed; the message names the element."""
