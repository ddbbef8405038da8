"""
Tabulated figure data and CSV output.

Every emitter returns ``(header, rows)``; :func:`write_csv` formats floats
in scientific notation with 9 significant digits so output is byte-stable.
"""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

from .core import BeamConfig, SolenoidConfig, point_from_cartesian, point_from_polar
from .errors import PreconditionError
from .fields import velocity_cartesian, velocity_field
from .forces import force_radial, force_scale, force_tangential, trace_streamline, zero_force_angle

__all__ = ["FIGURES", "fig3a", "fig3b", "figB1", "figC1", "streamlines", "write_csv", "format_value"]


def _radii(samples: int, rmax: float) -> np.ndarray:
    return np.logspace(0.0, math.log10(rmax), samples)


def _norm(beam: BeamConfig, cfg: SolenoidConfig) -> float:
    k = force_scale(cfg.radius, beam, cfg)
    if k == 0.0:
        raise PreconditionError("force normalisation e v0 flux/(2 pi R^2) is zero")
    return k


def fig3a(beam, cfg, samples=400, rmax=10.0):
    """Tangential force at theta = pi over r/R, normalised by e v0 flux/(2 pi R^2)."""
    k = _norm(beam, cfg)
    rows = [
        (x, force_tangential(point_from_polar(x * cfg.radius, math.pi), beam, cfg) / k)
        for x in _radii(samples, rmax)
    ]
    return ("r_over_R", "f_theta_norm"), rows


def fig3b(beam, cfg, samples=400, rmax=10.0):
    """Radial force at theta = pi/2 without the circulation term."""
    k = _norm(beam, cfg)
    rows = [
        (
            x,
            force_radial(point_from_polar(x * cfg.radius, 0.5 * math.pi), beam, cfg,
                         include_circulation=False) / k,
        )
        for x in _radii(samples, rmax)
    ]
    return ("r_over_R", "f_r_norm"), rows


def figB1(beam, cfg, samples=400, rmax=10.0):
    rows = [(x, math.degrees(zero_force_angle(x * cfg.radius, cfg))) for x in _radii(samples, rmax)]
    return ("r_over_R", "theta0_deg"), rows


def figC1(beam, cfg, samples=720, rmax=None):
    """Surface velocity on the upper half (theta) and its mirror (360 - theta)."""
    if not beam.speed > 0.0:
        raise PreconditionError("figC1 normalises by v0, which must be > 0")
    rows = []
    for deg in np.linspace(0.0, 180.0, samples):
        up = point_from_polar(cfg.radius, math.radians(deg))
        lo = point_from_polar(cfg.radius, math.radians(360.0 - deg))
        rows.append(
            (
                deg,
                velocity_cartesian(up, beam, cfg).vx / beam.speed,
                velocity_cartesian(lo, beam, cfg).vx / beam.speed,
                velocity_field(up, beam, cfg).vtheta,
                velocity_field(lo, beam, cfg).vtheta,
            )
        )
    return ("theta_deg", "vx_upper_norm", "vx_lower_norm", "vtheta_upper_mps", "vtheta_lower_mps"), rows


def streamlines(beam, cfg, samples=11, rmax=10.0, dt=None, max_steps=20000):
    """Streamlines seeded at x = -rmax R, y evenly spread over [-5R, 5R]."""
    R = cfg.radius
    rows = []
    for path_id, y0 in enumerate(np.linspace(-5.0 * R, 5.0 * R, samples)):
        path = trace_streamline(
            point_from_cartesian(-rmax * R, float(y0)), dt=dt, max_steps=max_steps, beam=beam, cfg=cfg
        )
        rows.extend((path_id, step, p.x, p.y) for step, p in enumerate(path.points))
    return ("path_id", "step", "x_m", "y_m"), rows


FIGURES = {
    "fig3a": fig3a,
    "fig3b": fig3b,
    "figB1": figB1,
    "figC1": figC1,
    "streamlines": streamlines,
}


def format_value(v) -> str:
    if isinstance(v, (int, np.integer)) and not isinstance(v, bool):
        return str(int(v))
    return f"{float(v):.8e}"


def write_csv(path, header, rows) -> None:
    lines = [",".join(header)]
    lines.extend(",".join(format_value(v) for v in row) for row in rows)
    Path(path).write_text("\n".join(lines) + "\n")
