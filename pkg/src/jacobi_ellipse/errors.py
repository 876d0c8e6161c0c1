"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(DomainError):
    """The function has a pole at the requested argument."""


class NoRootError(RuntimeError):
    """A bracketing root search could not establish a sign change."""


class InvariantError(AssertionError):
    """A computed result violates an invariant it is required to satisfy."""
