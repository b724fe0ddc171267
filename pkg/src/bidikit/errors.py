"""Exception types shared across the package.

Every error carries a stable ``code`` string; the CLI and the HTTP service
surface that code in their diagnostics, so it is part of the public contract.
"""

from __future__ import annotations


class BidikitError(Exception):
    """Base class for all errors raised by this package."""

    code = "ERROR"


class InputError(BidikitError):
    """Caller supplied something invalid (id, document, argument)."""

    code = "INPUT_ERROR"


class DuplicateIdError(InputError):
    code = "DUPLICATE_ID"


class DanglingEndpointError(InputError):
    code = "DANGLING_ENDPOINT"


class IllegalSignsError(InputError):
    code = "ILLEGAL_SIGNS"


class UnknownIdError(InputError):
    code = "UNKNOWN_ID"


class EndpointMismatchError(InputError):
    code = "ENDPOINT_MISMATCH"


class SpecMismatchError(InputError):
    """A degree specification does not cover exactly the vertex set."""

    code = "SPEC_MISMATCH"


class ConflictError(InputError):
    """Forced and forbidden edge sets overlap."""

    code = "CONFLICT"


class BadComponentError(InputError):
    code = "BAD_COMPONENT"


class PartitionMismatchError(InputError):
    """A partition was paired with a graph it does not belong to."""

    code = "PARTITION_MISMATCH"


class ParseError(InputError):
    code = "PARSE_ERROR"


class ValidationError(InputError):
    code = "VALIDATION_ERROR"


class NotFactorizableError(BidikitError):
    """The graph has no factor for the given degree specification."""

    code = "NOT_FACTORIZABLE"


class NegativeRestrictionError(BidikitError):
    """Restricting a degree specification produced a negative demand."""

    code = "NEGATIVE_RESTRICTION"


class ConsistencyError(BidikitError):
    """An internal invariant failed; this always indicates a bug."""

    code = "INTERNAL_CONSISTENCY"
