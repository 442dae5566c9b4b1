"""Exception hierarchy shared by every module of the package."""


class NilorderError(Exception):
    """Base class for all package errors."""


class RepresentationMismatch(NilorderError, ValueError):
    """Two elements of incompatible kind, degree, dimension or modulus were combined."""


class GroupTooLarge(NilorderError):
    def __init__(self, cap):
        super().__init__(f"group closure exceeded the cap of {cap} elements")
        self.cap = cap


class MembershipError(NilorderError, ValueError):
    """An element was expected to lie in a group and does not."""


class DomainError(NilorderError, ValueError):
    """An argument is outside the documented domain of an operation."""


class PreconditionError(NilorderError):
    """A structural hypothesis (e.g. nilpotency class <= 2) does not hold."""


class ConfigurationError(NilorderError):
    """A verification check was requested on a group it does not apply to."""


class TheoremViolation(NilorderError):
    """A proven identity failed on concrete data.

    This always indicates an implementation bug; it is the backbone of the
    verification oracle.
    """


class InternalInconsistency(NilorderError):
    """Two computation routes that must agree did not."""


class SpecFormatError(NilorderError, ValueError):
    """A group spec file or element string could not be parsed."""
