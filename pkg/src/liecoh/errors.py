"""Exception hierarchy for liecoh.

Every error raised on purpose by the library derives from LiecohError, so
callers (in particular the CLI) can distinguish "bad mathematical input"
from genuine bugs.  Errors flagging *internal* inconsistencies
(RepresentationLawError on a derived module, ChainMapError) indicate an
implementation defect and are surfaced, never swallowed.
"""


class LiecohError(Exception):
    """Base class for all liecoh errors."""


class DimensionMismatchError(LiecohError):
    """Operands live in spaces of incompatible dimensions."""


class ContainmentError(LiecohError):
    """A subspace argument is not contained where it must be."""


class NotAnIdealError(LiecohError):
    """A subspace that must be a Lie ideal is not one."""


class NotASubalgebraError(LiecohError):
    """A subspace that must be bracket-closed is not."""


class NotNilpotentError(LiecohError):
    """An operation that requires a nilpotent Lie algebra got a non-nilpotent one."""


class AdaptedBasisError(LiecohError):
    """The given basis cannot be reordered into one adapted to the filtration."""


class CharacterError(LiecohError):
    """A would-be character does not vanish on the derived subalgebra."""


class RepresentationLawError(LiecohError):
    """Action matrices do not satisfy the bracket relations of the algebra."""


class ChainMapError(LiecohError):
    """A map that must commute with the differentials does not."""


class ZeroElementError(LiecohError):
    """The zero element has no degree."""


class InvalidAlgebraError(LiecohError):
    """Structure constants violate antisymmetry or the Jacobi identity."""


class InvariantError(LiecohError):
    """A cross-theorem consistency invariant failed on a concrete instance."""
