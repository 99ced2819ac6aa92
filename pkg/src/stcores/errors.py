"""Shared exception type.

Everything a caller can trigger with bad input (malformed text, a pair that
is not coprime, a partition that is not an s-core, ...) raises DomainError.
Internal impossibilities raise RuntimeError and are never caught.
"""


class DomainError(ValueError):
    """Invalid input for the requested operation."""
