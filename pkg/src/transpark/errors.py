"""Exception hierarchy shared by the library and the CLI."""


class TransparkError(Exception):
    pass


class InputError(TransparkError, ValueError):
    """Malformed or inconsistent set-system input."""


class BudgetExceeded(TransparkError):
    """A computation would exceed its configured size budget."""


class NonGenericError(TransparkError):
    """A representation failed genericity certification."""


class InternalCheckError(TransparkError):
    """An invariant guaranteed by theory failed; indicates a bug."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness
