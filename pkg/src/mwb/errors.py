"""Shared exception types.

Everything raised on purpose by this package derives from MwbError, so
callers (and the command-line driver) can catch one type and report cleanly.
"""


class MwbError(Exception):
    pass


class ZeroVector(MwbError):
    """A lattice vector that must be nonzero (or nonnegative) is not."""


class EmptyIdeal(MwbError):
    """An operation needs at least one generator."""


class ZeroIdeal(MwbError):
    """The zero ideal reached an operation that cannot accept it."""


class AmbientMismatch(MwbError):
    """Operands live over different ambient rings."""


class IncompleteSubstitution(MwbError):
    """A substitution map does not cover every variable."""


class EmptyCenter(MwbError):
    """A blow-up center with no data (no ordinary part, zero monomial part)."""


class HypothesisViolated(MwbError):
    """A divisibility hypothesis needed for restriction fails."""


class BadOrder(MwbError):
    """Unknown monomial order code."""


class NoRectifiableContact(MwbError):
    """No stored generator yields a coordinate maximal contact."""


class InvariantNotDropped(MwbError):
    """A blow-up step failed to strictly decrease the invariant."""


class DepthExceeded(MwbError):
    """The resolution driver hit its step budget."""
