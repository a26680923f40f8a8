"""Exception taxonomy.

Domain errors (bad input, unsupported parameters) and internal invariant
failures share a base class so callers can catch everything the package
raises on purpose with one except clause.
"""


class CharkitError(Exception):
    pass


class BadSpec(CharkitError):
    """Group spec string does not parse."""


class BadParameters(CharkitError):
    """Spec parses but the parameters are outside the supported domain."""


class InvalidPermutation(CharkitError):
    pass


class ClosureExceedsCap(CharkitError):
    """Generated group would be larger than the order cap."""


class CapExceeded(CharkitError):
    """A size limit other than group order (conductor, corpus) was exceeded."""


class ContextMismatch(CharkitError):
    """Cyclotomic operands live in incompatible contexts."""


class NotCoprime(CharkitError):
    pass


class GroupMismatch(CharkitError):
    """Class functions attached to different groups were combined."""


class NotSubgroup(CharkitError):
    pass


class NotACharacter(CharkitError):
    """Decomposition produced a multiplicity that is not a nonnegative integer."""


class DegreeMismatch(CharkitError):
    pass


class EvenOrder(CharkitError):
    """Operation requires a group of odd order."""


class NoSuitablePrime(CharkitError):
    pass


class BadCorpusSpec(CharkitError):
    pass


class InternalInconsistency(CharkitError):
    """A self-check failed; this is a bug, never a caller error."""
