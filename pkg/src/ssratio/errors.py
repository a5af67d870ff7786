"""Exception hierarchy shared by every solver module."""


class SSRError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SSRError, ValueError):
    """Malformed user input (bad instance, bad epsilon, too few elements)."""


class EmptyInput(InputError):
    pass


class NonPositiveElement(InputError):
    pass


class InvalidEpsilon(InputError):
    pass


class InstanceTooSmall(InputError):
    pass


class Infeasible(InputError):
    pass


class ZeroSum(SSRError, ValueError):
    pass


class GuardError(SSRError):
    """A configured resource cap would be exceeded."""


class SizeGuard(GuardError):
    pass


class CapacityGuard(GuardError):
    pass


class TooLarge(GuardError):
    pass


class InternalInvariantViolation(SSRError, AssertionError):
    """A proven invariant failed at runtime, which points at a bug."""
