"""Pure Python / numpy implementations of the hot kernels.

Signatures match ``_ckernels.pyx`` exactly; see :mod:`abshear.kernels`.
"""

import math

import numpy as np

TWO_PI = 2.0 * math.pi


def _velocity(x, y, v0, R, gamma):
    r = math.hypot(x, y)
    c = x / r
    s = y / r
    a = R * R / (r * r)
    vr = v0 * c * (1.0 - a)
    vt = -v0 * s * (1.0 + a) + gamma / (TWO_PI * r)
    return vr * c - vt * s, vr * s + vt * c


def streamline_rk4(x0, y0, dt, max_steps, v0, R, gamma, stop_x):
    xs = [x0]
    ys = [y0]
    x, y = x0, y0
    hit = False
    half = 0.5 * dt
    for _ in range(max_steps):
        k1x, k1y = _velocity(x, y, v0, R, gamma)
        k2x, k2y = _velocity(x + half * k1x, y + half * k1y, v0, R, gamma)
        k3x, k3y = _velocity(x + half * k2x, y + half * k2y, v0, R, gamma)
        k4x, k4y = _velocity(x + dt * k3x, y + dt * k3y, v0, R, gamma)
        nx = x + dt / 6.0 * (k1x + 2.0 * (k2x + k3x) + k4x)
        ny = y + dt / 6.0 * (k1y + 2.0 * (k2y + k3y) + k4y)
        if nx * nx + ny * ny < R * R:
            hit = True
            break
        x, y = nx, ny
        xs.append(x)
        ys.append(y)
        if x > stop_x:
            break
    return np.array(xs), np.array(ys), hit


def ab_grid_decompose(xs, ys, hs, flux):
    xs = np.asarray(xs, dtype=float)
    ys = np.asarray(ys, dtype=float)
    hs = np.asarray(hs, dtype=float)
    k = flux / TWO_PI

    def ax(x, y):
        return -k * y / (x * x + y * y)

    def ay(x, y):
        return k * x / (x * x + y * y)

    inv = 1.0 / (2.0 * hs)
    jxx = (ax(xs + hs, ys) - ax(xs - hs, ys)) * inv
    jyx = (ay(xs + hs, ys) - ay(xs - hs, ys)) * inv
    jxy = (ax(xs, ys + hs) - ax(xs, ys - hs)) * inv
    jyy = (ay(xs, ys + hs) - ay(xs, ys - hs)) * inv

    tr = jxx + jyy
    out = np.empty((xs.size, 6))
    out[:, 0] = tr
    out[:, 1] = jyx - jxy
    out[:, 2] = jxx - tr / 3.0
    out[:, 3] = 0.5 * (jxy + jyx)
    out[:, 4] = jyy - tr / 3.0
    out[:, 5] = np.hypot(out[:, 3], 0.5 * (out[:, 2] - out[:, 4]))
    return out


def _trapezoid_weights(n):
    w = np.ones(n)
    w[0] = w[-1] = 0.5
    return w


def angle_average(r, component, a, b, n, v0, R, flux, e, gamma):
    th = np.linspace(a, b, n)
    c = np.cos(th)
    s = np.sin(th)
    q = R * R / (r * r)
    scale = e * flux / (TWO_PI * r * r)
    g = gamma / (TWO_PI * r)
    if component == 0:
        f = scale * (v0 * s * c * (1.0 + q) - g * c + v0 * c * s * (1.0 - q))
    else:
        f = scale * (v0 * s * s * (1.0 + q) - g * s - v0 * c * c * (1.0 - q))
    return float(np.dot(_trapezoid_weights(n), f) / (n - 1))


def lateral_force_annulus(R, rmax, n_r, n_theta, v0, flux, e):
    r = np.linspace(R, rmax, n_r)
    th = np.linspace(0.0, TWO_PI, n_theta)
    s2 = np.sin(th) ** 2
    c2 = np.cos(th) ** 2
    q = (R * R / (r * r))[:, None]
    fy = (e * v0 * flux / TWO_PI) * (s2 * (1.0 + q) - c2 * (1.0 - q)) / (r * r)[:, None]
    inner = (fy @ _trapezoid_weights(n_theta)) * (TWO_PI / (n_theta - 1))
    hr = (rmax - R) / (n_r - 1)
    return float(np.dot(_trapezoid_weights(n_r), inner * r) * hr)
