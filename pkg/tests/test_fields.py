import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from abshear.constants import CONSTANTS
from abshear.core import BeamConfig, SolenoidConfig, point_from_cartesian, point_from_polar
from abshear.decomposition import jacobian_fd
from abshear.errors import DomainError
from abshear.fields import (
    circulation_gamma,
    vector_potential,
    vector_potential_cartesian,
    velocity_cartesian,
    velocity_field,
    velocity_potential,
)

R = 1e-6
V0 = 6e7
CFG = SolenoidConfig(flux=1e-15, radius=R)
CFG0 = SolenoidConfig(flux=0.0, radius=R)
BEAM = BeamConfig(speed=V0)
# e flux / (2 pi m R), the circulation speed on the surface
DELTA = CONSTANTS.e * 1e-15 / (2 * math.pi * CONSTANTS.m * R)


def test_vector_potential_value():
    a = vector_potential(point_from_polar(R, 0.3), CFG)
    assert a.vr == 0.0
    assert a.vtheta == pytest.approx(1.59155e-10, rel=5e-6)
    assert a.vtheta == pytest.approx(1e-15 / (2 * math.pi * 1e-6), rel=1e-15)


def test_vector_potential_scaling_and_zero():
    assert vector_potential(point_from_polar(R, 1.0), CFG0) == (0.0, 0.0)
    at_r = vector_potential(point_from_polar(R, 1.0), CFG).vtheta
    at_100r = vector_potential(point_from_polar(100 * R, 1.0), CFG).vtheta
    assert at_100r == pytest.approx(at_r / 100, rel=1e-14)


def test_inside_is_domain_error():
    p = point_from_polar(0.5 * R, 0.0)
    for fn in (vector_potential, vector_potential_cartesian):
        with pytest.raises(DomainError):
            fn(p, CFG)
    for fn in (velocity_potential, velocity_field, velocity_cartesian):
        with pytest.raises(DomainError):
            fn(p, BEAM, CFG)


def test_vector_potential_cartesian_rotation():
    ax, ay = vector_potential_cartesian(point_from_cartesian(2 * R, 0.0), CFG)
    assert ax == 0.0
    assert ay == pytest.approx(1e-15 / (4 * math.pi * R), rel=1e-14)
    ax, ay = vector_potential_cartesian(point_from_cartesian(0.0, 2 * R), CFG)
    assert ax == pytest.approx(-1e-15 / (4 * math.pi * R), rel=1e-14)
    assert ay == 0.0
    assert vector_potential_cartesian(point_from_cartesian(2 * R, R), CFG0) == (0.0, 0.0)


def test_circulation_gamma():
    assert circulation_gamma(CFG) == pytest.approx(-1.75882e-4, rel=1e-5)
    assert circulation_gamma(CFG0) == 0.0
    assert circulation_gamma(SolenoidConfig(flux=-1e-15, radius=R)) == -circulation_gamma(CFG)


def test_velocity_potential_examples():
    assert velocity_potential(point_from_polar(3 * R, math.pi / 2), BEAM, CFG0) == pytest.approx(0.0, abs=1e-12)
    assert velocity_potential(point_from_polar(2 * R, 0.0), BEAM, CFG0) == pytest.approx(150.0, rel=1e-14)
    only_circ = velocity_potential(point_from_polar(4 * R, math.pi), BeamConfig(0.0), CFG)
    assert only_circ == pytest.approx(-8.7941e-5, rel=1e-5)


def test_velocity_field_examples():
    for t in np.linspace(0, 2 * math.pi, 17):
        assert velocity_field(point_from_polar(R, t), BEAM, CFG).vr == 0.0
    v = velocity_field(point_from_polar(2 * R, 0.0), BEAM, CFG0)
    assert v.vr == pytest.approx(4.5e7, rel=1e-15)
    assert v.vtheta == 0.0
    v = velocity_field(point_from_polar(R, math.pi / 2), BEAM, CFG)
    assert v.vtheta == pytest.approx(-1.2e8 - DELTA, rel=1e-15)
    assert DELTA == pytest.approx(27.99, abs=0.005)


def test_velocity_cartesian_examples():
    vx, vy = velocity_cartesian(point_from_polar(1000 * R, math.pi), BEAM, CFG0)
    assert vx == pytest.approx(V0, rel=1e-5)
    assert abs(vy) <= 1e-5 * V0
    vx, vy = velocity_cartesian(point_from_polar(R, math.pi / 2), BEAM, CFG0)
    assert vx == pytest.approx(2 * V0, rel=1e-15)
    assert vy == pytest.approx(0.0, abs=1e-7)
    assert velocity_cartesian(point_from_polar(3 * R, 1.0), BeamConfig(0.0), CFG0) == (0.0, 0.0)


def _random_points(n, lo, hi, seed):
    rng = np.random.default_rng(seed)
    return [point_from_polar(r, t) for r, t in zip(rng.uniform(lo, hi, n), rng.uniform(0, 2 * math.pi, n))]


@pytest.mark.parametrize("which", ["potential", "velocity"])
def test_solenoidal_and_irrotational(which):
    if which == "potential":
        fn = lambda q: vector_potential_cartesian(q, CFG)
    else:
        fn = lambda q: velocity_cartesian(q, BEAM, CFG)
    for p in _random_points(300, 1.1 * R, 50 * R, seed=7):
        J = jacobian_fd(fn, p, p.r * 1e-5, CFG)
        mag = math.hypot(*fn(p))
        assert abs(J[0, 0] + J[1, 1]) <= 1e-6 * mag / p.r
        assert abs(J[1, 0] - J[0, 1]) <= 1e-6 * mag / p.r


def test_gradient_of_velocity_potential():
    for p in _random_points(300, R, 50 * R, seed=11):
        if not 0.01 < p.theta < 2 * math.pi - 0.01:
            continue  # potential has a branch cut at theta = 0
        h = p.r * 1e-5
        dphi_dr = (velocity_potential(point_from_polar(p.r + h, p.theta), BEAM, CFG)
                   - velocity_potential(point_from_polar(max(p.r - h, R), p.theta), BEAM, CFG)) / (
                       p.r + h - max(p.r - h, R))
        dt = h / p.r
        dphi_dt = (velocity_potential(point_from_polar(p.r, p.theta + dt), BEAM, CFG)
                   - velocity_potential(point_from_polar(p.r, p.theta - dt), BEAM, CFG)) / (2 * dt)
        v = velocity_field(p, BEAM, CFG)
        # relative to the free-stream speed: |v| itself vanishes at stagnation points
        assert math.hypot(dphi_dr - v.vr, dphi_dt / p.r - v.vtheta) <= 1e-6 * V0


def _circulation(field, r, n=10_000):
    th = np.linspace(0, 2 * math.pi, n)
    vals = []
    for t in th:
        fx, fy = field(point_from_polar(r, t))
        vals.append(-fx * r * math.sin(t) + fy * r * math.cos(t))
    w = np.full(n, th[1] - th[0])
    w[0] = w[-1] = 0.5 * w[0]
    return float(np.dot(w, vals))


def test_circulation_recovery():
    flux = _circulation(lambda p: vector_potential_cartesian(p, CFG), 2 * R)
    assert flux == pytest.approx(1e-15, rel=1e-6)
    gamma = _circulation(lambda p: velocity_cartesian(p, BEAM, CFG), 2 * R)
    assert gamma == pytest.approx(-CONSTANTS.e / CONSTANTS.m * 1e-15, rel=1e-6)


@settings(max_examples=200)
@given(st.floats(0.0, 2 * math.pi), st.floats(-1e-12, 1e-12), st.floats(0.0, 1e8))
def test_impenetrability_exact(theta, flux, v0):
    cfg = SolenoidConfig(flux=flux, radius=R)
    assert velocity_field(point_from_polar(R, theta), BeamConfig(v0), cfg).vr == 0.0
