"""One test per acceptance criterion; each logs a PASS/FAIL line via ``record``.

Quoted reference literals are checked to one unit in their last digit.
"""

import math
from dataclasses import replace

import numpy as np
from abshear import constants, kernels
from abshear.core import BeamConfig, SolenoidConfig, point_from_cartesian, point_from_polar
from abshear.decomposition import decompose, jacobian_fd, recompose, shear_invariant_magnitude
from abshear.fields import vector_potential_cartesian, velocity_cartesian, velocity_field
from abshear.forces import (
    angle_average_force,
    force_cartesian,
    net_lateral_force,
    tangential_peak_radius,
    trace_streamline,
    zero_force_angle,
)
from abshear.phase import ab_phase_numeric, peak_velocity_asymmetry

BEAM, CFG = BeamConfig(), SolenoidConfig()
R = CFG.radius
E, M, HBAR = 1.602176634e-19, 9.1093837015e-31, 1.054571817e-34
BACKENDS = [kernels.python_impl] + ([kernels.compiled_impl] if kernels.compiled_impl else [])


def scale(r, flux=CFG.flux):
    return E * BEAM.speed * flux / (2 * math.pi * r * r)


def each_backend(monkeypatch, fn):
    out = []
    for impl in BACKENDS:
        monkeypatch.setattr(kernels, "impl", impl)
        out.append(fn())
    return out


def test_c01_shear_oracle(record):
    rng = np.random.default_rng(1)
    err = div = curl = 0.0
    for r, t in zip(rng.uniform(1.5 * R, 50 * R, 1000), rng.uniform(0, 2 * math.pi, 1000)):
        p = point_from_polar(r, t)
        d = decompose(jacobian_fd(lambda q: vector_potential_cartesian(q, CFG), p, r * 1e-4))
        ref = CFG.flux / (2 * math.pi * r * r)
        err = max(err, abs(shear_invariant_magnitude(d) - ref) / ref)
        div = max(div, abs(d.divergence) / ref)
        curl = max(curl, abs(d.curl[2]) / ref)
    record(1, err <= 1e-5 and div <= 1e-6 and curl <= 1e-6,
           f"shear rel err {err:.2e} <= 1e-5, |div| {div:.2e}, |curl_z| {curl:.2e} <= 1e-6 (x scale)")


def test_c02_recompose_identity(record):
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(1000):
        J = rng.standard_normal((3, 3)) * 10.0 ** rng.uniform(-20, 20)
        worst = max(worst, np.max(np.abs(recompose(decompose(J)) - J)) / np.max(np.abs(J)))
    record(2, worst <= 1e-12, f"max rel recompose error {worst:.2e} <= 1e-12")


def test_c03_impenetrability(record):
    vr = [velocity_field(point_from_polar(R, t), BEAM, CFG).vr
          for t in np.linspace(0, 2 * math.pi, 720, endpoint=False)]
    worst = max(abs(v) for v in vr)
    record(3, worst == 0.0, f"max |v_r(R, theta)| over 720 angles = {worst!r}")


def test_c04_circulation_recovery(record):
    n = 20000
    t = np.linspace(0, 2 * math.pi, n, endpoint=False)  # periodic rectangle rule
    r = 2 * R

    def loop(fn):
        tot = 0.0
        for ti in t:
            fx, fy = fn(point_from_polar(r, ti))
            tot += r * (-fx * math.sin(ti) + fy * math.cos(ti))
        return tot * 2 * math.pi / n

    flux = loop(lambda p: vector_potential_cartesian(p, CFG))
    gamma = loop(lambda p: velocity_cartesian(p, BEAM, CFG))
    e1 = abs(flux - CFG.flux) / CFG.flux
    e2 = abs(gamma + E / M * CFG.flux) / (E / M * CFG.flux)
    record(4, e1 <= 1e-6 and e2 <= 1e-6, f"flux rel err {e1:.2e}, gamma rel err {e2:.2e} <= 1e-6")


def test_c05_tangential_peak(record):
    x = tangential_peak_radius(BEAM, CFG)
    record(5, abs(x - math.sqrt(2)) <= 1e-6, f"peak r/R = {x:.9f}, |x - sqrt2| = {abs(x - math.sqrt(2)):.1e} <= 1e-6")


def test_c06_longitudinal_null(record, monkeypatch):
    worst = 0.0
    for k in (1.1, 2.0, 10.0):
        r = k * R
        avgs = each_backend(monkeypatch, lambda: angle_average_force(r, "x", (0, math.pi), 4096, BEAM, CFG))
        worst = max(worst, max(abs(a) for a in avgs) / scale(r))
    record(6, worst <= 1e-12, f"max |<F_x>| / scale = {worst:.2e} <= 1e-12 at r in 1.1R, 2R, 10R")


def test_c07_lateral_average(record, monkeypatch):
    r = 2 * R
    expected = E * BEAM.speed * (R / r) ** 2 * CFG.flux / (2 * math.pi * r * r)
    avgs = each_backend(monkeypatch, lambda: angle_average_force(r, "y", (0, math.pi), 4096, BEAM, CFG))
    rel = max(abs(a - expected) / expected for a in avgs)
    th = np.linspace(0, math.pi, 4097)
    w = np.full(th.size, 1.0)
    w[[0, -1]] = 0.5
    s2 = float(w @ np.sin(th) ** 2) / (th.size - 1)
    c2 = float(w @ np.cos(th) ** 2) / (th.size - 1)
    ok = rel <= 1e-9 and abs(expected - 9.5623e-17) <= 0.00005e-17 and abs(s2 - 0.5) <= 1e-12 and abs(c2 - 0.5) <= 1e-12
    record(7, ok, f"<F_y>(2R) = {avgs[0]:.6e} N, rel err {rel:.1e} <= 1e-9; <sin^2> = {s2:.15f}, <cos^2> = {c2:.15f}")


def test_c08_net_lateral(record, monkeypatch):
    expected = E * BEAM.speed * CFG.flux * 0.99 / 2
    vals = each_backend(monkeypatch, lambda: net_lateral_force(10 * R, beam=BEAM, cfg=CFG))
    flipped = net_lateral_force(10 * R, beam=BEAM, cfg=replace(CFG, flux=-CFG.flux))
    rel = max(abs(v - expected) / expected for v in vals)
    ok = rel <= 1e-6 and min(vals) > 0 and flipped < 0 and abs(expected - 4.7585e-27) <= 0.00005e-27
    record(8, ok, f"net = {vals[0]:.6e} N m^2, rel err {rel:.1e} <= 1e-6, flipped flux gives {flipped:.4e}")


def test_c09_zero_force_locus(record):
    deg = math.degrees(zero_force_angle(math.sqrt(2) * R, CFG))
    worst = 0.0
    for k in (1.05, math.sqrt(2), 3.0, 10.0):
        r = k * R
        worst = max(worst, abs(force_cartesian(point_from_polar(r, zero_force_angle(r, CFG)), BEAM, CFG).f_y) / scale(r))
    record(9, abs(deg - 30.0) <= 1e-12 * 30 and worst <= 1e-12,
           f"theta0(sqrt2 R) = {deg!r} deg; max |F_y| on locus / scale = {worst:.1e} <= 1e-12")


def test_c10_phase(record):
    res = ab_phase_numeric(BEAM, CFG)
    exact = E * CFG.flux / HBAR
    rel = abs(res.delta_phi_numeric - exact) / exact
    doubled = ab_phase_numeric(BeamConfig(2 * BEAM.speed), CFG).delta_phi_numeric
    inv = abs(doubled - res.delta_phi_numeric) / exact
    ok = rel <= 1e-9 and inv <= 1e-9 and abs(res.delta_phi_numeric - 1.51926) <= 1e-5
    record(10, ok, f"dphi = {res.delta_phi_numeric:.10f} rad, rel err {rel:.1e} <= 1e-9, v0 doubling shift {inv:.1e}")


def test_c11_speed_difference_constant(record):
    res = ab_phase_numeric(BEAM, CFG, 1002)
    d = np.array([v for _, v in res.speed_diff_trace])
    ratio = float(np.std(d) / abs(np.mean(d)))
    expected = E * CFG.flux / (math.pi * M * R)
    ok = d.size == 1000 and ratio <= 1e-9 and abs(np.mean(d) - expected) <= 1e-9 * expected and abs(expected - 55.99) <= 1e-2
    record(11, ok, f"{d.size} angles, std/mean = {ratio:.1e} <= 1e-9, mean = {np.mean(d):.6f} m/s")


def test_c12_asymmetry(record):
    a = peak_velocity_asymmetry(BEAM, CFG)
    expected = 2 * E * (CFG.flux / (2 * math.pi * R)) / (M * BEAM.speed)
    ok = abs(a - expected) <= 1e-12 * expected and abs(a - 9.33e-7) <= 1e-9 and 1e-7 <= a < 1e-5
    record(12, ok, f"2 e A_theta / (m v0) = {a:.4e}, order 1e-6")


def test_c13_streamline_symmetry(record, monkeypatch):
    cfg0 = replace(CFG, flux=0.0)

    def end_offset():
        path = trace_streamline(point_from_cartesian(-10 * R, 2 * R), dt=0.005 * R / BEAM.speed,
                                max_steps=100000, beam=BEAM, cfg=cfg0)
        (x0, y0), (x1, y1) = path.xy()[-2:]
        if path.hit_boundary or not x0 <= 10 * R < x1:
            return math.inf
        return abs(y0 + (y1 - y0) * (10 * R - x0) / (x1 - x0) - 2 * R) / R

    worst = max(each_backend(monkeypatch, end_offset))
    record(13, worst <= 1e-3, f"|y(+10R) - y(-10R)| / R = {worst:.2e} <= 1e-3")
