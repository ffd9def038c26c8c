"""
Custom exceptions for the dessin correlator engines.

Engines raise these; the CLI turns them into structured error JSON.
"""


class DessinError(Exception):
    """Base error for every engine in this package."""
    pass


class ContractViolation(DessinError):
    """A precondition was not met (arity, basis, size or box mismatch)."""
    pass


class SizeLimitError(DessinError):
    """Requested size exceeds a configured bound (oracle, truncation, table)."""
    pass


class CacheError(DessinError):
    """The character-table cache directory cannot be used."""
    pass


class InputError(DessinError):
    """A command-line argument could not be parsed."""
    pass
