"""
End-to-end verification run used by ``abshear verify``.

Checks fall in two groups: property checks evaluated on the caller's
configuration, and reference-value checks that always run on the default
configuration (flux 1e-15 Wb, R = 1 um, v0 = 6e7 m/s) against frozen
numbers. Reference values are quoted to a few significant digits and are
accepted within one unit of their last quoted digit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from decimal import Decimal
from typing import List

import numpy as np

from . import constants
from .constants import PhysicalConstants
from .core import BeamConfig, SolenoidConfig, point_from_cartesian, point_from_polar
from .decomposition import (
    decompose,
    jacobian_fd,
    recompose,
    shear_invariant_magnitude,
    shear_rtheta_analytic,
)
from .errors import PreconditionError
from .fields import vector_potential_cartesian, velocity_cartesian, velocity_field
from .forces import (
    angle_average_force,
    force_cartesian,
    force_scale,
    net_lateral_force,
    tangential_peak_radius,
    trace_streamline,
    zero_force_angle,
)
from .phase import ab_phase_numeric, peak_velocity_asymmetry, speed_difference

__all__ = ["Check", "RunReport", "run_checks", "reference_checks", "SEED"]

SEED = 20230203


@dataclass(frozen=True)
class Check:
    name: str
    expected: float
    actual: float
    tolerance: float
    passed: bool


@dataclass
class RunReport:
    checks: List[Check] = field(default_factory=list)

    @property
    def overall(self) -> bool:
        return all(c.passed for c in self.checks)

    def close(self, name, expected, actual, rel=0.0, atol=0.0):
        tol = max(rel * abs(expected), atol)
        ok = bool(math.isfinite(actual) and abs(actual - expected) <= tol)
        self.checks.append(Check(name, float(expected), float(actual), tol, ok))

    def at_most(self, name, actual, bound):
        ok = bool(math.isfinite(actual) and actual <= bound)
        self.checks.append(Check(name, 0.0, float(actual), float(bound), ok))

    def truth(self, name, ok):
        self.checks.append(Check(name, 1.0, 1.0 if ok else 0.0, 0.0, bool(ok)))

    def quoted(self, name, literal: str, actual):
        """Compare with a printed reference value, allowing one unit in its last digit."""
        d = Decimal(literal)
        unit = float(Decimal(1).scaleb(d.as_tuple().exponent))
        self.close(name, float(d), actual, atol=unit)

    def format(self) -> str:
        w = max(len(c.name) for c in self.checks)
        lines = [f"{'check':<{w}}  {'expected':>16}  {'actual':>16}  {'tolerance':>10}  result"]
        for c in self.checks:
            lines.append(
                f"{c.name:<{w}}  {c.expected:>16.9e}  {c.actual:>16.9e}  {c.tolerance:>10.3e}  "
                f"{'PASS' if c.passed else 'FAIL'}"
            )
        lines.append(f"overall = {'PASS' if self.overall else 'FAIL'}")
        return "\n".join(lines)


def _shear_oracle(rep, beam, cfg, rng):
    R = cfg.radius
    r = rng.uniform(1.5 * R, 50.0 * R, 1000)
    th = rng.uniform(0.0, 2.0 * math.pi, 1000)
    err = div = curl = 0.0
    for ri, ti in zip(r, th):
        p = point_from_polar(ri, ti)
        d = decompose(jacobian_fd(lambda q: vector_potential_cartesian(q, cfg), p, ri * 1e-4, cfg))
        ref = abs(shear_rtheta_analytic(p.r, cfg))
        err = max(err, abs(shear_invariant_magnitude(d) - ref) / ref)
        div = max(div, abs(d.divergence) / ref)
        curl = max(curl, abs(d.curl[2]) / ref)
    rep.at_most("1 shear oracle max rel error", err, 1e-5)
    rep.at_most("1 shear oracle max |div| / scale", div, 1e-6)
    rep.at_most("1 shear oracle max |curl_z| / scale", curl, 1e-6)


def _recompose(rep, rng):
    worst = 0.0
    for _ in range(1000):
        J = rng.standard_normal((3, 3))
        worst = max(worst, np.max(np.abs(recompose(decompose(J)) - J)) / np.max(np.abs(J)))
    rep.at_most("2 decompose/recompose max rel error", worst, 1e-12)


def _impenetrability(rep, beam, cfg):
    vr = [velocity_field(point_from_polar(cfg.radius, t), beam, cfg).vr
          for t in np.linspace(0.0, 2.0 * math.pi, 720, endpoint=False)]
    rep.at_most("3 max |v_r(R, theta)| over 720 angles", max(abs(v) for v in vr), 0.0)


def _line_integral(field_fn, r, n):
    th = np.linspace(0.0, 2.0 * math.pi, n)
    vals = np.empty(n)
    for i, t in enumerate(th):
        p = point_from_polar(r, t)
        fx, fy = field_fn(p)
        vals[i] = -fx * r * math.sin(t) + fy * r * math.cos(t)
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    return float(np.dot(w, vals) * (2.0 * math.pi / (n - 1)))


def _circulation(rep, beam, cfg):
    c = constants.CONSTANTS
    r = 2.0 * cfg.radius
    flux = _line_integral(lambda p: vector_potential_cartesian(p, cfg), r, 10_000)
    gamma = _line_integral(lambda p: velocity_cartesian(p, beam, cfg), r, 10_000)
    rep.close("4 circulation of A at 2R = flux", cfg.flux, flux, rel=1e-6)
    rep.close("4 circulation of v at 2R = -(e/m) flux", -(c.e / c.m) * cfg.flux, gamma, rel=1e-6)


def _peak(rep, beam, cfg):
    rep.close("5 tangential force peak r/R", math.sqrt(2.0), tangential_peak_radius(beam, cfg), atol=1e-6)


def _longitudinal(rep, beam, cfg):
    for k in (1.1, 2.0, 10.0):
        r = k * cfg.radius
        avg = angle_average_force(r, "x", (0.0, math.pi), 4096, beam, cfg)
        rep.at_most(f"6 |<F_x>| over [0, pi] at r={k}R / scale", abs(avg) / abs(force_scale(r, beam, cfg)), 1e-12)


def _lateral_average(rep, beam, cfg):
    R = cfg.radius
    r = 2.0 * R
    expected = force_scale(r, beam, cfg) * (R / r) ** 2
    rep.close("7 <F_y> over [0, pi] at 2R", expected,
              angle_average_force(r, "y", (0.0, math.pi), 4096, beam, cfg), rel=1e-9)
    rep.close("7 <F_y> over [0, 2pi] = over [0, pi]",
              angle_average_force(r, "y", (0.0, math.pi), 4096, beam, cfg),
              angle_average_force(r, "y", (0.0, 2.0 * math.pi), 4096, beam, cfg), rel=1e-9)
    th = np.linspace(0.0, math.pi, 4096)
    w = np.ones(th.size)
    w[0] = w[-1] = 0.5
    rep.close("7 <sin^2> over half period", 0.5, float(np.dot(w, np.sin(th) ** 2) / (th.size - 1)), atol=1e-12)
    rep.close("7 <cos^2> over half period", 0.5, float(np.dot(w, np.cos(th) ** 2) / (th.size - 1)), atol=1e-12)


def _net_lateral(rep, beam, cfg):
    c = constants.CONSTANTS
    rmax = 10.0 * cfg.radius
    val = net_lateral_force(rmax, beam=beam, cfg=cfg)
    expected = c.e * beam.speed * cfg.flux * (1.0 - (cfg.radius / rmax) ** 2) / 2.0
    rep.close("8 net lateral force to 10R", expected, val, rel=1e-6)
    rep.truth("8 net lateral force has the sign of the flux", math.copysign(1.0, val) == math.copysign(1.0, cfg.flux))
    flipped = net_lateral_force(rmax, beam=beam, cfg=replace(cfg, flux=-cfg.flux))
    rep.close("8 flux reversal reverses net lateral force", -val, flipped, rel=1e-12)


def _zero_locus(rep, beam, cfg):
    R = cfg.radius
    rep.close("9 theta0(sqrt2 R) in degrees", 30.0, math.degrees(zero_force_angle(math.sqrt(2.0) * R, cfg)), rel=1e-12)
    for k in (1.01, math.sqrt(2.0), 10.0):
        r = k * R
        fy = force_cartesian(point_from_polar(r, zero_force_angle(r, cfg)), beam, cfg).f_y
        rep.at_most(f"9 |F_y| on zero locus at r={k:.4g}R / scale", abs(fy) / abs(force_scale(r, beam, cfg)), 1e-12)


def _phase(rep, beam, cfg):
    c = constants.CONSTANTS
    res = ab_phase_numeric(beam, cfg, 1002)
    rep.close("10 numeric phase = e flux / hbar", c.e * cfg.flux / c.hbar, res.delta_phi_numeric, rel=1e-9)
    doubled = ab_phase_numeric(replace(beam, speed=2.0 * beam.speed), cfg, 1002)
    rep.close("10 phase unchanged by doubling v0", res.delta_phi_numeric, doubled.delta_phi_numeric, rel=1e-12)
    diffs = np.array([d for _, d in res.speed_diff_trace])
    rep.at_most("11 speed difference std / mean", float(np.std(diffs) / abs(np.mean(diffs))), 1e-9)
    rep.close("11 speed difference = e flux / (pi m R)",
              c.e * cfg.flux / (math.pi * c.m * cfg.radius), float(np.mean(diffs)), rel=1e-9)


def _streamline(rep, beam, cfg):
    R = cfg.radius
    cfg0 = replace(cfg, flux=0.0)
    path = trace_streamline(point_from_cartesian(-10.0 * R, 2.0 * R), dt=0.005 * R / beam.speed,
                            max_steps=100_000, beam=beam, cfg=cfg0)
    xy = path.xy()
    (x0, y0), (x1, y1) = xy[-2], xy[-1]
    y_end = y0 + (y1 - y0) * (10.0 * R - x0) / (x1 - x0)
    rep.truth("13 streamline reaches x = +10R", x1 > 10.0 * R >= x0 and not path.hit_boundary)
    rep.at_most("13 |y(+10R) - y(-10R)| / R", abs(y_end - 2.0 * R) / R, 1e-3)


def reference_checks(rep: RunReport) -> None:
    """Frozen reference values on the default configuration."""
    rep.truth("constants are CODATA 2018", constants.CONSTANTS == PhysicalConstants())
    beam, cfg = BeamConfig(), SolenoidConfig()
    R = cfg.radius
    rep.quoted("ref circulation gamma (m^2/s)", "-1.75882e-4",
               velocity_field(point_from_polar(R, 0.0), beam, cfg).vtheta * 2.0 * math.pi * R)
    rep.quoted("ref <F_y> over [0, pi] at 2R (N)", "9.5623e-17",
               angle_average_force(2.0 * R, "y", (0.0, math.pi), 4096, beam, cfg))
    rep.quoted("ref net lateral force to 10R (N m^2)", "4.7585e-27", net_lateral_force(10.0 * R, beam=beam, cfg=cfg))
    rep.quoted("ref numeric phase (rad)", "1.51926", ab_phase_numeric(beam, cfg).delta_phi_numeric)
    rep.quoted("ref speed difference (m/s)", "55.99", speed_difference(0.5 * math.pi, beam, cfg))
    asym = peak_velocity_asymmetry(beam, cfg)
    rep.quoted("ref peak velocity asymmetry", "9.33e-7", asym)
    rep.truth("12 asymmetry is of order 1 part in 1e6", 1e-7 <= asym < 1e-5)


def run_checks(beam: BeamConfig | None = None, cfg: SolenoidConfig | None = None) -> RunReport:
    beam = beam or BeamConfig()
    cfg = cfg or SolenoidConfig()
    if cfg.flux == 0.0 or beam.speed == 0.0:
        raise PreconditionError("verification needs a non-zero flux and a non-zero free-stream speed")
    rng = np.random.default_rng(SEED)
    rep = RunReport()
    _shear_oracle(rep, beam, cfg, rng)
    _recompose(rep, rng)
    _impenetrability(rep, beam, cfg)
    _circulation(rep, beam, cfg)
    _peak(rep, beam, cfg)
    _longitudinal(rep, beam, cfg)
    _lateral_average(rep, beam, cfg)
    _net_lateral(rep, beam, cfg)
    _zero_locus(rep, beam, cfg)
    _phase(rep, beam, cfg)
    _streamline(rep, beam, cfg)
    reference_checks(rep)
    return rep
