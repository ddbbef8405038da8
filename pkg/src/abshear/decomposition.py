"""
Split a vector-field gradient into shear, curl and divergence.

For a 3x3 Jacobian ``J[i, j] = dA_i/dx_j``::

    J_ij = sigma_ij - 1/2 eps_ijk curl_k + 1/3 delta_ij div

where ``sigma`` is the symmetric traceless part. Planar fields are embedded
at z = 0, so their z row and column are zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import kernels
from .core import FieldPoint, SolenoidConfig, point_from_cartesian, require_outside
from .errors import DomainError, GeometryError, InvalidArgumentError
from .fields import CartesianVector

__all__ = [
    "LEVI_CIVITA",
    "GradientDecomposition",
    "decompose",
    "recompose",
    "jacobian_fd",
    "ab_jacobian",
    "shear_rtheta_analytic",
    "shear_invariant_magnitude",
    "GRID_COLUMNS",
    "decompose_grid",
]


def _levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    for i, j, k in ((0, 1, 2), (1, 2, 0), (2, 0, 1)):
        eps[i, j, k] = 1.0
        eps[j, i, k] = -1.0
    return eps


LEVI_CIVITA = _levi_civita()


@dataclass(frozen=True)
class GradientDecomposition:
    shear: np.ndarray
    curl: np.ndarray
    divergence: float


def decompose(J) -> GradientDecomposition:
    J = np.asarray(J, dtype=float)
    if J.shape != (3, 3):
        raise InvalidArgumentError(f"Jacobian must be 3x3, got shape {J.shape}")
    if not np.all(np.isfinite(J)):
        raise InvalidArgumentError("Jacobian has non-finite entries")
    div = float(np.trace(J))
    shear = 0.5 * (J + J.T) - np.eye(3) * (div / 3.0)
    # curl_k = eps_kij dA_j/dx_i = eps_kij J_ji
    curl = np.einsum("kij,ji->k", LEVI_CIVITA, J)
    return GradientDecomposition(shear=shear, curl=curl, divergence=div)


def recompose(d: GradientDecomposition) -> np.ndarray:
    return (
        np.asarray(d.shear, dtype=float)
        - 0.5 * np.einsum("ijk,k->ij", LEVI_CIVITA, d.curl)
        + np.eye(3) * (d.divergence / 3.0)
    )


def jacobian_fd(
    field: Callable[[FieldPoint], CartesianVector],
    p: FieldPoint,
    h: float,
    cfg: Optional[SolenoidConfig] = None,
) -> np.ndarray:
    """Central-difference Jacobian of a planar field at ``p``.

    Each column is ``(f(x + h e_j) - f(x - h e_j)) / 2h``. With ``cfg`` the
    four stencil points are checked against the solenoid before evaluation;
    without it, a :class:`DomainError` raised by ``field`` is reported as a
    :class:`GeometryError` all the same.
    """
    if not (math.isfinite(h) and h > 0.0):
        raise InvalidArgumentError(f"step must be finite and > 0, got {h!r}")
    stencil = [
        point_from_cartesian(p.x + h, p.y),
        point_from_cartesian(p.x - h, p.y),
        point_from_cartesian(p.x, p.y + h),
        point_from_cartesian(p.x, p.y - h),
    ]
    try:
        if cfg is not None:
            for q in stencil:
                require_outside(q, cfg)
        fxp, fxm, fyp, fym = (field(q) for q in stencil)
    except GeometryError:
        raise
    except DomainError as exc:
        raise GeometryError(f"stencil at ({p.x!r}, {p.y!r}) with h={h!r} crosses the solenoid") from exc
    J = np.zeros((3, 3))
    inv = 1.0 / (2.0 * h)
    J[0, 0] = (fxp[0] - fxm[0]) * inv
    J[1, 0] = (fxp[1] - fxm[1]) * inv
    J[0, 1] = (fyp[0] - fym[0]) * inv
    J[1, 1] = (fyp[1] - fym[1]) * inv
    return J


def ab_jacobian(p: FieldPoint, cfg: SolenoidConfig) -> np.ndarray:
    """Closed-form Jacobian of ``A = flux/(2 pi r^2) (-y, x)``."""
    require_outside(p, cfg)
    k = cfg.flux / (2.0 * math.pi)
    r4 = p.r**4
    J = np.zeros((3, 3))
    J[0, 0] = 2.0 * k * p.x * p.y / r4
    J[0, 1] = k * (p.y * p.y - p.x * p.x) / r4
    J[1, 0] = J[0, 1]
    J[1, 1] = -J[0, 0]
    return J


def shear_rtheta_analytic(r: float, cfg: SolenoidConfig) -> float:
    """Polar shear component ``1/2 (dA_theta/dr - A_theta/r) = -flux/(2 pi r^2)``."""
    if r < cfg.radius:
        raise DomainError(f"r={r!r} m lies inside the solenoid (R={cfg.radius!r} m)")
    return -cfg.flux / (2.0 * math.pi * r * r)


def shear_invariant_magnitude(d: GradientDecomposition) -> float:
    """In-plane principal shear ``sqrt(s_xy^2 + ((s_xx - s_yy)/2)^2)``.

    Invariant under rotation about z, so a Cartesian decomposition can be
    compared directly with the polar ``|sigma_r_theta|``.
    """
    s = d.shear
    return math.hypot(s[0, 1], 0.5 * (s[0, 0] - s[1, 1]))


GRID_COLUMNS = (
    "x_m", "y_m", "div", "curl_z", "sigma_xx", "sigma_xy", "sigma_yy",
    "shear_mag", "shear_mag_analytic",
)


def decompose_grid(
    cfg: SolenoidConfig,
    half_width: float,
    n: int,
    h: Optional[float] = None,
    rel_step: float = 1e-4,
) -> np.ndarray:
    """Finite-difference decomposition of the AB potential on an n x n grid.

    The grid spans ``[-half_width, half_width]`` on both axes. Points with
    ``r < R + 2h`` are masked out, ``h`` being the absolute step if given
    and ``r * rel_step`` otherwise. Returns one row per kept point with the
    columns in :data:`GRID_COLUMNS`, in row-major (y outer, x inner) order.
    """
    if n < 1:
        raise InvalidArgumentError(f"grid needs n >= 1, got {n}")
    if h is not None and not (math.isfinite(h) and h > 0.0):
        raise InvalidArgumentError(f"step must be finite and > 0, got {h!r}")
    axis = np.linspace(-half_width, half_width, n)
    X, Y = np.meshgrid(axis, axis)
    xs, ys = X.ravel(), Y.ravel()
    r = np.hypot(xs, ys)
    hs = np.full_like(r, h) if h is not None else r * rel_step
    keep = r >= cfg.radius + 2.0 * hs
    if not np.any(keep):
        raise GeometryError("every grid point lies within two steps of the solenoid")
    xs, ys, r, hs = xs[keep], ys[keep], r[keep], hs[keep]
    R2 = cfg.radius**2
    for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        if np.any((xs + dx * hs) ** 2 + (ys + dy * hs) ** 2 < R2):
            raise GeometryError("a finite-difference stencil crosses the solenoid")
    d = kernels.impl.ab_grid_decompose(xs, ys, hs, cfg.flux)
    out = np.empty((xs.size, len(GRID_COLUMNS)))
    out[:, 0] = xs
    out[:, 1] = ys
    out[:, 2:8] = d
    out[:, 8] = np.abs(cfg.flux) / (2.0 * math.pi * r * r)
    return out
