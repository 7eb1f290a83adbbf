"""Exception types shared across the package."""


class SymconError(Exception):
    """Base class for all library errors."""


class ParameterError(SymconError, ValueError):
    """An argument violates a precondition (bad partition, size mismatch, ...)."""


class DegreeError(SymconError, ValueError):
    """An operation requiring homogeneous input received mixed degrees."""


class TruncationError(SymconError, ValueError):
    """A graded series was queried beyond its truncation degree."""


class CapacityError(SymconError, ValueError):
    """A request exceeds the configured size limits."""


class CatalogError(SymconError, LookupError):
    """An unknown identity-catalog key or selector."""
