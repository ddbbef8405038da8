"""
Configurations and plane geometry around the solenoid.

Angles are in radians, measured counter-clockwise from the positive x-axis
with the solenoid axis at the origin. Degrees only appear in CLI output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

from .errors import ConfigError, DomainError, InvalidArgumentError

__all__ = [
    "TAU",
    "SolenoidConfig",
    "BeamConfig",
    "FieldPoint",
    "normalize_angle",
    "point_from_polar",
    "point_from_cartesian",
    "validate_outside",
    "require_outside",
    "DEFAULT_FLUX",
    "DEFAULT_RADIUS",
    "DEFAULT_SPEED",
    "load_config",
    "parse_config",
]

TAU = 2.0 * math.pi

# flux ~1e-15 Wb and v0 = 0.6e8 m/s (10 keV) are the experiment-scale values;
# R = 1 um puts the upper/lower peak speed asymmetry at ~1 part in 1e6.
DEFAULT_FLUX = 1.0e-15
DEFAULT_RADIUS = 1.0e-6
DEFAULT_SPEED = 6.0e7


@dataclass(frozen=True)
class SolenoidConfig:
    """Enclosed magnetic flux (Wb, any sign) and solenoid radius (m)."""

    flux: float = DEFAULT_FLUX
    radius: float = DEFAULT_RADIUS

    def __post_init__(self):
        if not math.isfinite(self.flux):
            raise InvalidArgumentError(f"flux must be finite, got {self.flux!r}")
        if not (math.isfinite(self.radius) and self.radius > 0.0):
            raise InvalidArgumentError(f"radius must be finite and > 0, got {self.radius!r}")


@dataclass(frozen=True)
class BeamConfig:
    """Free-stream electron speed v0 (m/s), treated non-relativistically."""

    speed: float = DEFAULT_SPEED

    def __post_init__(self):
        if not (math.isfinite(self.speed) and self.speed >= 0.0):
            raise InvalidArgumentError(f"speed must be finite and >= 0, got {self.speed!r}")

    def kinetic_energy(self, mass: float | None = None) -> float:
        """Non-relativistic kinetic energy in joules."""
        if mass is None:
            from .constants import CONSTANTS

            mass = CONSTANTS.m
        return 0.5 * mass * self.speed**2


@dataclass(frozen=True)
class FieldPoint:
    """A point in the plane, carried in both polar and Cartesian form.

    Build instances with :func:`point_from_polar` or
    :func:`point_from_cartesian`; the constructor does no conversion.
    """

    r: float
    theta: float
    x: float
    y: float


def normalize_angle(theta: float) -> float:
    """Map ``theta`` into [0, 2*pi)."""
    t = theta % TAU
    # tiny negative inputs round up to exactly TAU
    if t >= TAU:
        t = 0.0
    return t


def _check_finite(**values):
    for name, v in values.items():
        if not math.isfinite(v):
            raise InvalidArgumentError(f"{name} must be finite, got {v!r}")


def point_from_polar(r: float, theta: float) -> FieldPoint:
    _check_finite(r=r, theta=theta)
    if r < 0.0:
        raise InvalidArgumentError(f"r must be >= 0, got {r!r}")
    t = normalize_angle(theta)
    return FieldPoint(r=float(r), theta=t, x=r * math.cos(t), y=r * math.sin(t))


def point_from_cartesian(x: float, y: float) -> FieldPoint:
    """Build a point from Cartesian coordinates.

    The origin maps to ``theta = 0`` by convention; physics code never
    evaluates there because every model requires ``r >= R > 0``.
    """
    _check_finite(x=x, y=y)
    r = math.hypot(x, y)
    t = 0.0 if r == 0.0 else normalize_angle(math.atan2(y, x))
    return FieldPoint(r=r, theta=t, x=float(x), y=float(y))


def validate_outside(p: FieldPoint, cfg: SolenoidConfig) -> bool:
    """True iff the point is on or outside the solenoid surface."""
    return p.r >= cfg.radius


def require_outside(p: FieldPoint, cfg: SolenoidConfig) -> None:
    if not validate_outside(p, cfg):
        raise DomainError(
            f"point r={p.r!r} m lies inside the solenoid (R={cfg.radius!r} m)"
        )


_KEYS = {"flux_wb": "flux", "radius_m": "radius", "speed_mps": "speed"}


def parse_config(text: str) -> tuple[SolenoidConfig, BeamConfig]:
    """Parse ``key = value`` lines; ``#`` starts a comment.

    Recognised keys are ``flux_wb``, ``radius_m`` and ``speed_mps``. Missing
    keys fall back to the module defaults, unknown keys are an error.
    """
    values = {"flux": DEFAULT_FLUX, "radius": DEFAULT_RADIUS, "speed": DEFAULT_SPEED}
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, _, val = (s.strip() for s in line.partition("="))
        if key not in _KEYS:
            raise ConfigError(f"line {lineno}: unknown key {key!r}")
        if key in seen:
            raise ConfigError(f"line {lineno}: duplicate key {key!r}")
        seen.add(key)
        try:
            values[_KEYS[key]] = float(val)
        except ValueError:
            raise ConfigError(f"line {lineno}: {key} is not a number: {val!r}") from None
    try:
        return (
            SolenoidConfig(flux=values["flux"], radius=values["radius"]),
            BeamConfig(speed=values["speed"]),
        )
    except InvalidArgumentError as exc:
        raise ConfigError(str(exc)) from None


def load_config(path: str | Path | None) -> tuple[SolenoidConfig, BeamConfig]:
    if path is None:
        return SolenoidConfig(), BeamConfig()
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {str(path)!r}: {exc.strerror}") from None
    return parse_config(text)
