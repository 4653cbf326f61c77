"""Exception types shared across the toolkit."""


class ImscError(Exception):
    """Base class for every toolkit-specific error."""


class UniverseTooLarge(ImscError):
    """The item universe exceeds the guard of the brute-force miner."""


class InconsistentStore(ImscError):
    """A frequent-itemset store contradicts the database it claims to describe."""


class InvalidParams(ImscError):
    """Generator parameters are out of range."""


class MalformedLine(ImscError):
    """A data file line cannot be parsed; carries the 1-based line number."""

    def __init__(self, line_number: int, message: str):
        super().__init__(f"line {line_number}: {message}")
        self.line_number = line_number


class InvariantViolation(ImscError):
    """A frequent-itemset store breaks one of its structural invariants."""


class MissingSubsetCount(ImscError):
    """Rule generation needed a subset count the store does not hold."""


class ResultMismatch(ImscError):
    """The benchmark's incremental result disagreed with the baseline miner."""
