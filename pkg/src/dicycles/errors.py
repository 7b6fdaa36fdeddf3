"""Exception types shared across the package."""


class InvalidParameterError(ValueError):
    """An argument violates an operation's precondition."""


class DomainError(ValueError):
    """A numeric argument is outside the function's domain."""


class SizeLimitError(ValueError):
    """Exact enumeration was requested above the configured size limit."""


class UndefinedDensityError(ValueError):
    """p-density requested with reference density p = 0."""


class GraphParseError(ValueError):
    """Malformed graph file; carries the offending line number."""

    def __init__(self, message: str, line_no: int):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class PasteFailureError(RuntimeError):
    """No connecting edge found between two consecutive paths."""

    def __init__(self, junction: int, message: str = ""):
        super().__init__(message or f"no connecting edge at junction {junction}")
        self.junction = junction


class PreconditionFailure(RuntimeError):
    """A checked runtime precondition (e.g. bi-density) does not hold."""


class EmptyInputError(ValueError):
    """An aggregate was requested over an empty collection."""


class ConfigError(ValueError):
    """Experiment configuration is invalid."""
