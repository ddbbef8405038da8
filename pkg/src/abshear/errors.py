"""Exception hierarchy shared by all modules."""


class AbShearError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(AbShearError, ValueError):
    """Non-finite or otherwise malformed numeric input."""


class DomainError(AbShearError, ValueError):
    """A point lies inside the solenoid (r < R) where no field model exists."""


class GeometryError(DomainError):
    """A finite-difference stencil or grid crosses into the solenoid."""


class EdgeAngleError(DomainError):
    """Upper/lower speed difference requested at a leading or trailing edge."""


class PreconditionError(AbShearError):
    """A numerical precondition (e.g. 2 v0 sin(theta) > delta) is violated."""


class ConfigError(AbShearError):
    """Configuration file cannot be read or contains invalid entries."""
