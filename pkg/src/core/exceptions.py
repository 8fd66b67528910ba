"""Custom exceptions for RSK Lab."""


class RSKLabError(Exception):
    """Base exception for all library errors."""
    pass


class ValidationError(RSKLabError):
    """Malformed permutation, partition or tableau input."""

    def __init__(self, message: str, invariant: str = None, value=None):
        super().__init__(message)
        self.invariant = invariant
        self.value = value

    def __str__(self):
        if self.invariant:
            return f"[{self.invariant}] {super().__str__()}"
        return super().__str__()


class DuplicateEntryError(ValidationError):
    """Row insertion of an entry that is already in the tableau."""

    def __init__(self, entry: int):
        super().__init__(f"entry {entry} already present", invariant="distinct-entries", value=entry)


class ShapeMismatchError(ValidationError):
    """Tableau pair with unequal shapes or a non-standard recording tableau."""
    pass


class SizeMismatchError(ValidationError):
    """Two permutations (or partitions) of different size."""
    pass


class DomainError(RSKLabError):
    """Argument outside the mathematical domain of an operation."""
    pass


class ResourceRefusal(RSKLabError):
    """Requested search space is too large to enumerate."""

    def __init__(self, message: str, estimate: int = 0):
        super().__init__(message)
        self.estimate = estimate

    def __str__(self):
        return f"{super().__str__()} (estimated {self.estimate:,} evaluations)"


class VerificationFailure(RSKLabError):
    """A verification check failed."""

    def __init__(self, message: str, checks: list = None):
        super().__init__(message)
        self.checks = checks or []


class ConfigError(RSKLabError):
    """Configuration related errors."""
    pass
