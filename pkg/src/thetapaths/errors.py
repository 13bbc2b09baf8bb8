class ResourceLimitError(RuntimeError):
    """Raised when a requested enumeration would exceed the configured cap."""

    def __init__(self, what: str, n: int, predicted: int, cap: int):
        self.what = what
        self.n = n
        self.predicted = predicted
        self.cap = cap
        super().__init__(
            f"refusing to enumerate {predicted} {what} for n={n} (cap is {cap})"
        )


class ShapeMismatchError(ValueError):
    pass


class ContractViolation(ValueError):
    """An operation received input outside its documented domain."""


# Largest family we are willing to materialize, overridable per call.
DEFAULT_CAP = 10**8


class DomainMismatchError(TypeError):
    """A map was applied to an object of the wrong kind."""
