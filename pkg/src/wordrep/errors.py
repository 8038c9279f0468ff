"""Shared exception types."""


class ParseError(ValueError):
    """Malformed graph, word, or orientation text."""


class VerificationError(RuntimeError):
    """A constructed object failed its mandatory self-check.

    Raised when a post-verified construction does not match its target;
    signals an internal defect rather than bad user input.
    """
