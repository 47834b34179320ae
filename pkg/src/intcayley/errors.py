class DomainError(ValueError):
    """Bad user input: malformed spec, invalid element, violated precondition."""


class InvalidElementError(DomainError):
    pass


class ParseError(DomainError):
    pass


class PreconditionError(DomainError):
    pass


class UnsupportedSpecError(DomainError):
    pass


class InconsistencyError(RuntimeError):
    """Two independent decision paths disagreed. Always a bug."""
