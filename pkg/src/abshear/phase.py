"""
Semi-classical AB phase from the tangential speed on the solenoid surface.

On r = R the radial velocity vanishes and the tangential speed is
``|-2 v0 sin(theta) + gamma/(2 pi R)|``. Pairing each upper-half angle
theta with its mirror ``2 pi - theta`` on the lower half, the speed
difference is the constant ``2 delta`` with ``delta = e flux/(2 pi m R)``,
provided ``2 v0 sin(theta) > |delta|`` at every sampled angle. Accumulating
the wavenumber difference over a half turn (``theta_t = pi``) gives::

    dphi = R pi (m / hbar) (|v_upper| - |v_lower|) = e flux / hbar

Sign convention: differences are taken upper minus lower by direct
evaluation, which makes ``dphi`` carry the sign of the flux (and hence the
opposite sign of the velocity circulation). ``PhaseResult.circulation_sign``
records the sign of gamma for callers that use the circulation-based sign.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Tuple

import numpy as np

from . import constants
from .core import BeamConfig, SolenoidConfig
from .errors import EdgeAngleError, InvalidArgumentError, PreconditionError
from .fields import circulation_gamma

__all__ = [
    "PhaseResult",
    "circulation_speed",
    "tangential_speed_at_R",
    "speed_difference",
    "ab_phase_numeric",
    "ab_phase_analytic",
    "peak_velocity_asymmetry",
]


@dataclass(frozen=True)
class PhaseResult:
    delta_phi_numeric: float
    delta_phi_analytic: float
    speed_diff_trace: List[Tuple[float, float]] = field(repr=False)
    asymmetry: float
    circulation_sign: int

    @property
    def speed_diff_mean(self) -> float:
        return float(np.mean([d for _, d in self.speed_diff_trace]))

    @property
    def speed_diff_std(self) -> float:
        return float(np.std([d for _, d in self.speed_diff_trace]))


def circulation_speed(cfg: SolenoidConfig) -> float:
    """``delta = e flux / (2 pi m R)``, minus the circulation speed on the surface (m/s)."""
    return -circulation_gamma(cfg) / (2.0 * math.pi * cfg.radius)


def tangential_speed_at_R(theta: float, beam: BeamConfig, cfg: SolenoidConfig) -> float:
    """Tangential speed on the surface, direct from the potential-flow velocity."""
    g = circulation_gamma(cfg) / (2.0 * math.pi * cfg.radius)
    return abs(-2.0 * beam.speed * math.sin(theta) + g)


def _check_resolvable(sin_theta: float, beam: BeamConfig, delta: float) -> None:
    if not 2.0 * beam.speed * sin_theta > abs(delta):
        raise PreconditionError(
            f"2 v0 sin(theta) = {2.0 * beam.speed * sin_theta!r} m/s does not exceed "
            f"|delta| = {abs(delta)!r} m/s; upper/lower speeds are not separable"
        )


def _mirrored_difference(s, v0, g):
    # |a1| - |a2| with a1 = -2 v0 s + g (upper) and a2 = 2 v0 s + g (mirror);
    # (a1^2 - a2^2) / (|a1| + |a2|) avoids cancelling two ~2 v0 sized terms
    return -8.0 * v0 * s * g / (np.abs(-2.0 * v0 * s + g) + np.abs(2.0 * v0 * s + g))


def speed_difference(theta_upper: float, beam: BeamConfig, cfg: SolenoidConfig) -> float:
    """``|v_theta(theta)| - |v_theta(2 pi - theta)|`` on r = R (m/s).

    Undefined at the leading and trailing edges (theta = pi, 0), where the
    two paths meet.
    """
    if not (math.isfinite(theta_upper) and 0.0 < theta_upper < math.pi):
        raise EdgeAngleError(
            f"theta_upper must lie strictly inside (0, pi), got {theta_upper!r}"
        )
    s = math.sin(theta_upper)
    delta = circulation_speed(cfg)
    _check_resolvable(s, beam, delta)
    return float(_mirrored_difference(s, beam.speed, -delta))


def ab_phase_analytic(cfg: SolenoidConfig) -> float:
    c = constants.CONSTANTS
    return c.e * cfg.flux / c.hbar


def peak_velocity_asymmetry(beam: BeamConfig, cfg: SolenoidConfig) -> float:
    """``2 e A_theta(R) / (m v0)``: relative gap between upper and lower peak speeds."""
    if not beam.speed > 0.0:
        raise InvalidArgumentError("peak velocity asymmetry needs v0 > 0")
    a_theta = cfg.flux / (2.0 * math.pi * cfg.radius)
    return 2.0 * constants.CONSTANTS.charge_to_mass * a_theta / beam.speed


def ab_phase_numeric(beam: BeamConfig, cfg: SolenoidConfig, n_samples: int = 1002) -> PhaseResult:
    """Accumulate the upper/lower wavenumber difference over a half turn.

    ``n_samples`` angles run from the leading edge (pi) to the trailing edge
    (0); the two edges are dropped, so ``n_samples - 2`` interior angles
    enter the mean speed difference.
    """
    if n_samples < 3:
        raise InvalidArgumentError(f"n_samples must be >= 3, got {n_samples}")
    c = constants.CONSTANTS
    thetas = np.linspace(math.pi, 0.0, n_samples)[1:-1]
    s = np.sin(thetas)
    delta = circulation_speed(cfg)
    _check_resolvable(float(s.min()), beam, delta)
    diffs = _mirrored_difference(s, beam.speed, -delta)
    traversed = math.pi
    dphi = cfg.radius * traversed * (c.m / c.hbar) * float(np.mean(diffs))
    gamma = circulation_gamma(cfg)
    return PhaseResult(
        delta_phi_numeric=dphi,
        delta_phi_analytic=ab_phase_analytic(cfg),
        speed_diff_trace=list(zip(thetas.tolist(), diffs.tolist())),
        asymmetry=peak_velocity_asymmetry(beam, cfg),
        circulation_sign=int(math.copysign(1, gamma)) if gamma != 0.0 else 0,
    )
