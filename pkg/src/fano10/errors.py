"""Exception hierarchy shared by every module.

The CLI maps :class:`DomainError` to exit code 3 and
:class:`InternalVerificationFailed` to exit code 4.
"""


class LatticeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LatticeError, ValueError):
    """The input is outside the domain of the requested operation."""


class NonSquare(DomainError):
    pass


class NonSymmetric(DomainError):
    pass


class Degenerate(DomainError):
    pass


class InvalidParameter(DomainError):
    pass


class ZeroVector(DomainError):
    pass


class OwnerMismatch(DomainError):
    pass


class NotEven(DomainError):
    """A quadratic form q_L was requested on an odd lattice."""


class TooLarge(DomainError):
    pass


class NotIsotropic(DomainError):
    pass


class NotIsometry(DomainError):
    pass


class NotFiniteIndex(DomainError):
    pass


class NotExtendable(DomainError):
    pass


class NotCyclic(DomainError):
    pass


class NotAdmissible(DomainError):
    pass


class UnsupportedShape(DomainError):
    pass


class HNotNorm10(DomainError):
    pass


class InternalVerificationFailed(LatticeError):
    """A self-check failed; indicates a bug rather than bad input."""


class MethodDisagreement(InternalVerificationFailed):
    pass
