"""Exception hierarchy shared by all tensorcc modules."""


class TensorCCError(Exception):
    """Base class for every error raised by tensorcc."""


class GraphInputError(TensorCCError, ValueError):
    """Malformed graph input: bad endpoints, self-loops, empty graphs.

    ``line`` is the 1-based source line when the input came from text.
    """

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ParseError(GraphInputError):
    """Edge-list text that cannot be tokenized."""


class DomainError(TensorCCError, ValueError):
    """Argument outside the domain of a formula (e.g. degree below 2)."""


class CapacityError(TensorCCError):
    """A computation would exceed its configured size budget."""
