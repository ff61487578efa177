"""Exception types shared across the package."""


class BiplaneError(Exception):
    """Base class for all package errors."""


class InputError(BiplaneError, ValueError):
    """Malformed or inconsistent input (distinct from a failed verification)."""


class ScaleError(BiplaneError):
    """A computation exceeds the documented desk-scale bounds."""
