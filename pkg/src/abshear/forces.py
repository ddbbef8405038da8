"""
Force distributions on an electron crossing the shear field.

Forces come from the convective derivative of the vector potential,
``(v . grad) A``, scaled by the electron charge. With ``A = A_theta(r)``
along theta-hat this is::

    (v . grad) A = -(v_theta A_theta / r) r_hat + v_r dA_theta/dr theta_hat

so the tangential (shear) force is carried by the radial velocity and the
radial (centripetal) force by the tangential velocity. The same result is
the inner product ``e v . sigma`` with the AB shear tensor, whose only
non-zero entries are ``sigma_r_theta = sigma_theta_r = -flux/(2 pi r^2)``.

Cartesian forces drop the circulation term by default: at experiment scale
it is ~1e-6 of the free-stream term.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import List

import numpy as np

from . import constants
from . import kernels
from .core import (
    BeamConfig,
    FieldPoint,
    SolenoidConfig,
    point_from_cartesian,
    point_from_polar,
    require_outside,
)
from .errors import DomainError, InvalidArgumentError
from .fields import (
    PolarVector,
    circulation_gamma,
    vector_potential,
    vector_potential_dr,
    velocity_field,
)

__all__ = [
    "ForceSample",
    "ShearTensorAB",
    "StreamlinePath",
    "convective_derivative",
    "force_tangential",
    "force_radial",
    "force_from_shear_tensor",
    "force_cartesian",
    "force_scale",
    "zero_force_angle",
    "angle_average_force",
    "net_lateral_force",
    "net_lateral_force_closed_form",
    "golden_section_max",
    "tangential_peak_radius",
    "trace_streamline",
    "free_stream_shear_force",
]


@dataclass(frozen=True)
class ForceSample:
    f_r: float
    f_theta: float
    f_x: float
    f_y: float
    at: FieldPoint


@dataclass(frozen=True)
class ShearTensorAB:
    """The single independent entry of the AB shear tensor at ``radius``."""

    sigma_rtheta: float
    radius: float

    @classmethod
    def at(cls, r: float, cfg: SolenoidConfig) -> "ShearTensorAB":
        if r < cfg.radius:
            raise DomainError(f"r={r!r} m lies inside the solenoid (R={cfg.radius!r} m)")
        return cls(sigma_rtheta=-cfg.flux / (2.0 * math.pi * r * r), radius=r)

    def as_matrix(self) -> np.ndarray:
        """2x2 tensor in the (r, theta) basis."""
        s = self.sigma_rtheta
        return np.array([[0.0, s], [s, 0.0]])


@dataclass(frozen=True)
class StreamlinePath:
    points: List[FieldPoint]
    step: float
    hit_boundary: bool = False

    def xy(self) -> np.ndarray:
        return np.array([(p.x, p.y) for p in self.points])


def force_scale(r: float, beam: BeamConfig, cfg: SolenoidConfig) -> float:
    """``e v0 flux / (2 pi r^2)``, the common magnitude of all force terms (N)."""
    return constants.CONSTANTS.e * beam.speed * cfg.flux / (2.0 * math.pi * r * r)


def convective_derivative(p: FieldPoint, beam: BeamConfig, cfg: SolenoidConfig) -> PolarVector:
    """``(v . grad) A`` in T m/s, polar components."""
    v = velocity_field(p, beam, cfg)
    a_theta = vector_potential(p, cfg).vtheta
    return PolarVector(-v.vtheta * a_theta / p.r, v.vr * vector_potential_dr(p.r, cfg))


def _velocity(p, beam, cfg, include_circulation):
    if include_circulation:
        return velocity_field(p, beam, cfg)
    return velocity_field(p, beam, SolenoidConfig(flux=0.0, radius=cfg.radius))


def force_tangential(p: FieldPoint, beam: BeamConfig, cfg: SolenoidConfig) -> float:
    """Shear force ``e v_r dA_theta/dr`` (N); zero on the surface and at theta = pi/2."""
    require_outside(p, cfg)
    return constants.CONSTANTS.e * velocity_field(p, beam, cfg).vr * vector_potential_dr(p.r, cfg)


def force_radial(
    p: FieldPoint, beam: BeamConfig, cfg: SolenoidConfig, include_circulation: bool = True
) -> float:
    """Centripetal force ``-e v_theta A_theta / r`` (N).

    With ``include_circulation=False`` the circulation part of ``v_theta``
    is dropped, leaving ``e v0 sin(theta) (1 + R^2/r^2) flux/(2 pi r^2)``.
    """
    v = _velocity(p, beam, cfg, include_circulation)
    a_theta = vector_potential(p, cfg).vtheta
    return -constants.CONSTANTS.e * v.vtheta * a_theta / p.r


def force_from_shear_tensor(v: PolarVector, sigma: ShearTensorAB) -> PolarVector:
    """Force ``e v . sigma`` (N) for a velocity ``v`` at the tensor's radius."""
    e = constants.CONSTANTS.e
    return PolarVector(e * v.vtheta * sigma.sigma_rtheta, e * v.vr * sigma.sigma_rtheta)


def force_cartesian(
    p: FieldPoint, beam: BeamConfig, cfg: SolenoidConfig, include_circulation: bool = False
) -> ForceSample:
    """Polar and Cartesian force components at ``p``.

    By default the circulation term is excluded everywhere, and ``f_x``,
    ``f_y`` use the expanded forms::

        F_x = 2 e v0 sin cos flux/(2 pi r^2)
        F_y = e v0 [sin^2 (1 + R^2/r^2) - cos^2 (1 - R^2/r^2)] flux/(2 pi r^2)

    which equal the rotation of ``(f_r, f_theta)`` up to rounding. With
    ``include_circulation=True`` the exact rotation is returned instead.
    """
    require_outside(p, cfg)
    f_t = force_tangential(p, beam, cfg)
    f_r = force_radial(p, beam, cfg, include_circulation=include_circulation)
    c, s = math.cos(p.theta), math.sin(p.theta)
    if include_circulation:
        f_x = f_r * c - f_t * s
        f_y = f_r * s + f_t * c
    else:
        a = (cfg.radius / p.r) ** 2
        k = force_scale(p.r, beam, cfg)
        f_x = 2.0 * k * s * c
        f_y = k * (s * s * (1.0 + a) - c * c * (1.0 - a))
    return ForceSample(f_r=f_r, f_theta=f_t, f_x=f_x, f_y=f_y, at=p)


def free_stream_shear_force(r: float, beam: BeamConfig, cfg: SolenoidConfig) -> float:
    """Large-r limit of the tangential force, ``e v0 sigma_r_theta`` (N)."""
    return constants.CONSTANTS.e * beam.speed * ShearTensorAB.at(r, cfg).sigma_rtheta


def zero_force_angle(r: float, cfg: SolenoidConfig) -> float:
    """Angle in [0, pi/4] where the lateral force vanishes at radius ``r``.

    ``tan^2(theta0) = (1 - R^2/r^2) / (1 + R^2/r^2)``; the other zeros sit
    at ``pi - theta0``, ``pi + theta0`` and ``2 pi - theta0``.
    """
    if r < cfg.radius:
        raise DomainError(f"r={r!r} m lies inside the solenoid (R={cfg.radius!r} m)")
    a = (cfg.radius / r) ** 2
    return math.atan(math.sqrt((1.0 - a) / (1.0 + a)))


def angle_average_force(
    r: float,
    component: str,
    theta_range=(0.0, math.pi),
    n: int = 4096,
    beam: BeamConfig | None = None,
    cfg: SolenoidConfig | None = None,
    include_circulation: bool = False,
) -> float:
    """Composite-trapezoid mean of ``F_x`` or ``F_y`` over an angle range (N)."""
    beam = beam or BeamConfig()
    cfg = cfg or SolenoidConfig()
    if component not in ("x", "y"):
        raise InvalidArgumentError(f"component must be 'x' or 'y', got {component!r}")
    if r < cfg.radius:
        raise DomainError(f"r={r!r} m lies inside the solenoid (R={cfg.radius!r} m)")
    a, b = (float(t) for t in theta_range)
    if not (math.isfinite(a) and math.isfinite(b) and b > a):
        raise InvalidArgumentError(f"invalid angle range {theta_range!r}")
    if n < 2:
        raise InvalidArgumentError(f"need at least 2 samples, got {n}")
    gamma = circulation_gamma(cfg) if include_circulation else 0.0
    return kernels.impl.angle_average(
        r, 0 if component == "x" else 1, a, b, int(n),
        beam.speed, cfg.radius, cfg.flux, constants.CONSTANTS.e, gamma,
    )


def net_lateral_force(
    r_max: float,
    n_r: int = 16385,
    n_theta: int = 65,
    beam: BeamConfig | None = None,
    cfg: SolenoidConfig | None = None,
) -> float:
    """Integral of the lateral force distribution over the annulus R <= r <= r_max.

    Trapezoid in r times trapezoid in theta over [0, 2 pi], area element
    ``r dr dtheta``; the result is in N m^2.
    """
    beam = beam or BeamConfig()
    cfg = cfg or SolenoidConfig()
    if not r_max > cfg.radius:
        raise InvalidArgumentError(f"r_max must exceed R={cfg.radius!r}, got {r_max!r}")
    if n_r < 2 or n_theta < 2:
        raise InvalidArgumentError("need at least 2 samples per axis")
    return kernels.impl.lateral_force_annulus(
        cfg.radius, r_max, int(n_r), int(n_theta), beam.speed, cfg.flux, constants.CONSTANTS.e
    )


def net_lateral_force_closed_form(r_max: float, beam: BeamConfig, cfg: SolenoidConfig) -> float:
    """``e v0 flux (1 - R^2/r_max^2) / 2``, the exact annulus integral."""
    return 0.5 * constants.CONSTANTS.e * beam.speed * cfg.flux * (1.0 - (cfg.radius / r_max) ** 2)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_section_max(f, a: float, b: float, tol: float = 1e-10, max_iter: int = 200) -> float:
    """Location of the maximum of a unimodal ``f`` on [a, b]."""
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= tol * (abs(a) + abs(b)):
            break
        if fc > fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def tangential_peak_radius(beam: BeamConfig, cfg: SolenoidConfig, upper: float = 5.0) -> float:
    """r/R maximising ``|F_theta(r, pi)|`` on [1, upper]."""
    R = cfg.radius

    def mag(x):
        return abs(force_tangential(point_from_polar(x * R, math.pi), beam, cfg))

    return golden_section_max(mag, 1.0, upper, tol=1e-12)


def trace_streamline(
    start: FieldPoint,
    dt: float | None = None,
    max_steps: int = 20000,
    beam: BeamConfig | None = None,
    cfg: SolenoidConfig | None = None,
) -> StreamlinePath:
    """Integrate ``dx/dt = v(x)`` with fixed-step RK4 from ``start``.

    Stops after ``max_steps``, when x first exceeds ``|start.x|`` (only with
    a non-zero free stream, which defines downstream), or just before a step
    would land inside the solenoid; the last case sets ``hit_boundary``.
    ``dt`` defaults to ``0.01 R / v0``.
    """
    beam = beam or BeamConfig()
    cfg = cfg or SolenoidConfig()
    require_outside(start, cfg)
    R = cfg.radius
    if dt is None:
        if beam.speed == 0.0:
            raise InvalidArgumentError("dt is required when the free-stream speed is zero")
        dt = 0.01 * R / beam.speed
    if not (math.isfinite(dt) and dt > 0.0):
        raise InvalidArgumentError(f"dt must be finite and > 0, got {dt!r}")
    stop_x = abs(start.x) if beam.speed > 0.0 else math.inf
    xs, ys, hit = kernels.impl.streamline_rk4(
        start.x, start.y, dt, int(max_steps), beam.speed, R, circulation_gamma(cfg), stop_x
    )
    points = [start] + [point_from_cartesian(x, y) for x, y in zip(xs[1:], ys[1:])]
    return StreamlinePath(points=points, step=dt, hit_boundary=bool(hit))
