"""Shared exception types for domain-level and input-shape failures."""


class DomainError(ValueError):
    """Raised when an input violates a mathematical precondition.

    The CLI maps this to exit code 1, as opposed to malformed input
    (bad JSON, unknown flags) which exits with code 2.
    """


class FormatError(ValueError):
    """Raised when input is structurally malformed before any mathematics
    runs: bad JSON shapes, unparsable rationals, missing keys.

    The CLI maps this to exit code 2.
    """
