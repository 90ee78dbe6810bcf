"""Exception hierarchy shared by all mobzero modules."""


class AlgebraError(Exception):
    """Base class for every error raised by this library."""


class MembershipError(AlgebraError):
    """A word is not an element of the monoid it was used with."""


class SpecError(AlgebraError):
    """A declarative spec (monoid, ideal, series input) is malformed or
    incompatible with the structure it is applied to."""


class InfiniteGradeError(AlgebraError):
    """The monoid cannot enumerate its elements of a given order."""


class TruncationError(AlgebraError):
    """A coefficient beyond the truncation order was requested; it is not
    determined by the stored data."""


class MonoidMismatchError(AlgebraError):
    """Two series over different monoids (or different rings) were combined."""


class ProperError(AlgebraError):
    """A series had a nonzero (or non-unit) coefficient at the identity where
    a proper series (or a 1 + proper one) was required."""


class ContextMismatchError(AlgebraError):
    """A series does not live over the monoid expected by a quotient context."""
