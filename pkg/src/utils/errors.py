from typing import Optional


class EnumerationError(Exception):
    """Base class for every error raised by the enumeration toolkit."""


class ConfigurationError(EnumerationError, ValueError):
    """A configured value is out of range or unknown."""


class GraphParseError(EnumerationError, ValueError):
    """Edge-list text could not be parsed."""

    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class GraphValidationError(EnumerationError, ValueError):
    """Input parsed but violates a graph invariant (self-loop, id out of range)."""


class ContractViolation(EnumerationError, ValueError):
    """A precondition of a graph query does not hold."""


class ComponentTooSmall(EnumerationError):
    """A connected component has fewer than k vertices."""

    def __init__(self, size: int, k: int):
        self.size = size
        self.k = k
        super().__init__(f"component of size {size} cannot hold a {k}-set")


class DictionaryCapExceeded(EnumerationError):
    """The solution dictionary grew past its configured entry limit."""

    def __init__(self, cap: int):
        self.cap = cap
        super().__init__(f"solution dictionary exceeded {cap} entries")


class OracleCapExceeded(EnumerationError):
    """Instance too large for brute-force subset iteration."""


class ExactSmallDegreeCase(EnumerationError):
    """The counting bound is singular for max degree below 2."""

    def __init__(self, delta: int, exact_count: Optional[int] = None):
        self.delta = delta
        self.exact_count = exact_count
        super().__init__(f"bound undefined for max degree {delta}; count exactly")


class RecipeError(EnumerationError, ValueError):
    """Invalid graph recipe parameters."""


class UnknownAlgorithmError(EnumerationError, ValueError):
    """Algorithm name is not one of the supported enumerators."""
