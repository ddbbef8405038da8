"""
Analytic fields outside the solenoid.

The vector potential is purely azimuthal, ``A_theta = flux / (2 pi r)``
(Coulomb gauge, so ``A_r = 0``). The electron velocity field is potential
flow past a cylinder of radius R with circulation ``gamma = -(e/m) flux``.
Every function here is defined only for ``r >= R``.
"""

from __future__ import annotations

import math
from typing import NamedTuple

from . import constants
from .core import BeamConfig, FieldPoint, SolenoidConfig, require_outside

__all__ = [
    "PolarVector",
    "CartesianVector",
    "vector_potential",
    "vector_potential_dr",
    "vector_potential_cartesian",
    "circulation_gamma",
    "velocity_potential",
    "velocity_field",
    "velocity_cartesian",
    "to_cartesian",
]


class PolarVector(NamedTuple):
    vr: float
    vtheta: float


class CartesianVector(NamedTuple):
    vx: float
    vy: float


def to_cartesian(v: PolarVector, p: FieldPoint) -> CartesianVector:
    """Rotate polar components at ``p`` into the solenoid x/y frame."""
    c, s = math.cos(p.theta), math.sin(p.theta)
    return CartesianVector(v.vr * c - v.vtheta * s, v.vr * s + v.vtheta * c)


def vector_potential(p: FieldPoint, cfg: SolenoidConfig) -> PolarVector:
    """Vector potential in T m."""
    require_outside(p, cfg)
    return PolarVector(0.0, cfg.flux / (2.0 * math.pi * p.r))


def vector_potential_dr(r: float, cfg: SolenoidConfig) -> float:
    """Radial derivative of A_theta, ``-flux / (2 pi r^2)`` (T)."""
    return -cfg.flux / (2.0 * math.pi * r * r)


def vector_potential_cartesian(p: FieldPoint, cfg: SolenoidConfig) -> CartesianVector:
    require_outside(p, cfg)
    k = cfg.flux / (2.0 * math.pi * p.r * p.r)
    return CartesianVector(-k * p.y, k * p.x)


def circulation_gamma(cfg: SolenoidConfig) -> float:
    """Velocity circulation in m^2/s; negative for positive flux."""
    return -constants.CONSTANTS.charge_to_mass * cfg.flux


def velocity_potential(p: FieldPoint, beam: BeamConfig, cfg: SolenoidConfig) -> float:
    require_outside(p, cfg)
    R = cfg.radius
    return (
        beam.speed * math.cos(p.theta) * (p.r + R * R / p.r)
        + circulation_gamma(cfg) / (2.0 * math.pi) * p.theta
    )


def velocity_field(p: FieldPoint, beam: BeamConfig, cfg: SolenoidConfig) -> PolarVector:
    """Electron velocity (m/s) in polar components.

    ``vr`` vanishes identically on the surface r = R because the factor
    ``1 - R^2/r^2`` is exactly zero there.
    """
    require_outside(p, cfg)
    a = (cfg.radius / p.r) ** 2
    vr = beam.speed * math.cos(p.theta) * (1.0 - a)
    vt = -beam.speed * math.sin(p.theta) * (1.0 + a) + circulation_gamma(cfg) / (
        2.0 * math.pi * p.r
    )
    return PolarVector(vr, vt)


def velocity_cartesian(p: FieldPoint, beam: BeamConfig, cfg: SolenoidConfig) -> CartesianVector:
    return to_cartesian(velocity_field(p, beam, cfg), p)
