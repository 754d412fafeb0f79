"""Exception types shared across the package."""


class EtaStringsError(Exception):
    """Base class for all package-specific errors."""


class DomainError(EtaStringsError):
    """Argument outside the supported domain of an operation."""


class PoleError(EtaStringsError):
    """Evaluation requested at or too near the zeta pole s = 1."""


class DenominatorZeroError(EtaStringsError):
    """Evaluation requested too close to a zero of a conversion denominator."""


class NoZeroInBracketError(EtaStringsError):
    """Refinement bracket does not contain an interior minimum below threshold."""


class ClassificationError(EtaStringsError):
    """A refined zero candidate matches neither zero family."""


class DegenerateGeometryError(EtaStringsError):
    """Geometric fit requested on degenerate (coincident) data."""


class IllConditionedError(EtaStringsError):
    """Linear system for a geometric fit is too ill-conditioned to solve."""
