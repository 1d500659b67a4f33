"""Exception types shared across the package."""


class ParinvError(Exception):
    """Base class for all errors raised by this package."""


class NonSquareError(ParinvError):
    """A square matrix was required."""


class BadIndexError(ParinvError):
    """An index or index list is out of range or not strictly increasing."""


class SizeMismatchError(ParinvError):
    """Operand shapes are incompatible."""


class NotUnitriangularError(ParinvError):
    """A matrix expected to be upper unitriangular is not."""


class SupportViolationError(ParinvError):
    """A matrix has a nonzero entry outside the allowed position set."""


class AnchorMissingError(ParinvError):
    """The last column carries no base root, so the anchored machinery is undefined."""


class StructuralViolationError(ParinvError):
    """An internal structural invariant failed; indicates a bug in the library."""


class NotAMonomialError(ParinvError):
    """A generator did not restrict to a single signed monomial on canonical matrices."""


class ZeroBaseMinorError(ParinvError):
    """Some base minor vanishes at the given point, so the fibration map is undefined."""


class DegenerateOrbitError(ParinvError):
    """The orbit of the given matrix misses the canonical set.

    Carries the reduction stage and, when known, the offending position.
    """

    def __init__(self, stage, position=None):
        self.stage = stage
        self.position = position
        msg = f"degenerate orbit at stage {stage!r}"
        if position is not None:
            msg += f", position {position}"
        super().__init__(msg)
