"""Shear of the vector potential around an Aharonov-Bohm solenoid."""

from .constants import CONSTANTS, PhysicalConstants
from .core import (
    BeamConfig,
    FieldPoint,
    SolenoidConfig,
    load_config,
    point_from_cartesian,
    point_from_polar,
    validate_outside,
)
from .errors import (
    AbShearError,
    ConfigError,
    DomainError,
    EdgeAngleError,
    GeometryError,
    InvalidArgumentError,
    PreconditionError,
)
from .kernels import BACKEND

__version__ = "0.1.0"
