"""Exception hierarchy shared by every layer of the package."""


class MatroidError(Exception):
    """Base class for all errors raised by this package."""


class InputError(MatroidError, ValueError):
    """Malformed or out-of-range input (unknown labels, bad subsets, bad files)."""


class InvalidMatroidError(InputError):
    """A candidate circuit list does not describe an oriented matroid."""


class CapacityError(MatroidError):
    """The instance is too large for the exponential algorithms."""


class PreconditionError(MatroidError):
    """An operation was called outside of the hypotheses it requires."""


class InternalConsistencyError(MatroidError, AssertionError):
    """A constructed answer failed its own verification. Always a bug."""
