"""Exception types shared across the package.

Two families matter to callers: ``InputError`` covers everything a user can
trigger with bad input (the CLI maps it to exit code 2), while
``InternalError`` flags a broken library invariant (exit code 3).
"""
from __future__ import annotations


class HessfanoError(Exception):
    """Base class for all errors raised by this package."""


class InputError(HessfanoError):
    """Invalid input or an unsatisfied operation precondition."""


class InternalError(HessfanoError):
    """An internal invariant failed; this always indicates a bug."""


# --- Hessenberg functions ---

class TooShortError(InputError):
    """The value sequence has fewer than two entries."""


class NotIncreasingError(InputError):
    """The value sequence is not weakly increasing."""


class OutOfRangeError(InputError):
    """Some value violates i <= h(i) <= n."""


class DisconnectedError(InputError):
    """h(j) = j for some j < n; such functions are rejected up front."""


class BadBandError(InputError):
    """Band width outside 1..n-1."""


class IndexOutOfRangeError(InputError):
    """A 1-based index argument lies outside the operation's domain."""


class CapExceededError(InputError):
    """Requested enumeration size exceeds the configured cap."""


class NonTerminationError(InternalError):
    """An iteration guaranteed to terminate did not; signals a bug."""


# --- permutations and weights ---

class SizeMismatchError(InputError):
    """Operands live in symmetric groups of different ranks."""


class LengthMismatchError(InputError):
    """A coefficient sequence has the wrong length."""


class ParseError(InputError):
    """A textual argument could not be parsed."""


class NotAPermutationError(InputError):
    """A value sequence is not a bijection of 1..n."""


# --- witnesses ---

class NotNefError(InputError):
    """The operation requires a nef Hessenberg function."""


class NotRestrictableError(InputError):
    """Restriction is undefined (n = 2 or h(1) = n)."""


class NotCase2Error(InputError):
    """The anti-canonical coefficient at position h(1) does not vanish."""


class NotCase2bError(InputError):
    """The crossing data has no non-trivial level to correct."""


class SearchSpaceTooLargeError(InputError):
    """The block subgroup is bigger than the brute-force cap."""


class CertificateFailureError(InternalError):
    """A guaranteed bigness certificate could not be produced."""


# --- degrees ---

class NonDominantWeightError(InputError):
    """The operation requires a dominant weight."""


class NotComparableError(InputError):
    """The two permutations are not comparable in Bruhat order."""
