"""Exception types shared across the package."""


class DualredError(Exception):
    """Base class for all package errors."""


class NonHomogeneousInput(DualredError):
    """An input polynomial, matrix, or differential is not homogeneous
    for the declared weights and twists."""


class TwistMismatch(DualredError):
    """Declared generator degrees are inconsistent with the entries of a
    matrix or differential."""


class OutsideValidityWindow(DualredError):
    """A homological degree was requested outside the range certified by
    the truncation bookkeeping of a complex."""


class NotConcentrated(DualredError):
    """A complex expected to have homology in a single homological degree
    does not."""


class NotFiniteDimensional(DualredError):
    """A module required to be finite dimensional over the base field
    is not."""


class CoefficientNotFinitelyGenerated(DualredError):
    """A coefficient bimodule cannot be finitely presented over the
    enveloping algebra."""


class TooLarge(DualredError):
    """A dense computation exceeds the configured size cap."""


class PresentationsNotIsomorphic(DualredError):
    """A claimed identification between two presented algebras fails its
    Groebner containment or composite-identity checks."""


class SessionError(DualredError):
    """A session file is malformed.  Carries the offending position."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = "line %d, col %d: %s" % (line, col if col is not None else 0, message)
        super().__init__(message)


class UndefinedName(SessionError):
    """A session line references a module name that was never defined."""
