"""Exception types shared across the library."""


class ValidationError(ValueError):
    """Input fails a structural invariant; `witness` names the offending data."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class PreconditionError(ValueError):
    """Operation invoked on input that violates a documented precondition."""


class SizeGuardError(ValueError):
    """Brute-force operation refused: input exceeds its size guard."""
