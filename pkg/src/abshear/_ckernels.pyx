# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels. Same signatures and semantics as ``_pykernels``."""

import numpy as np

from libc.math cimport cos, sin, sqrt, hypot, M_PI

cdef double TWO_PI = 2.0 * M_PI


cdef inline void _velocity(double x, double y, double v0, double R, double gamma,
                           double* vx, double* vy) noexcept nogil:
    cdef double r = hypot(x, y)
    cdef double c = x / r
    cdef double s = y / r
    cdef double a = R * R / (r * r)
    cdef double vr = v0 * c * (1.0 - a)
    cdef double vt = -v0 * s * (1.0 + a) + gamma / (TWO_PI * r)
    vx[0] = vr * c - vt * s
    vy[0] = vr * s + vt * c


def streamline_rk4(double x0, double y0, double dt, long max_steps,
                   double v0, double R, double gamma, double stop_x):
    xs = np.empty(max_steps + 1)
    ys = np.empty(max_steps + 1)
    cdef double[::1] xv = xs
    cdef double[::1] yv = ys
    cdef double x = x0, y = y0, nx, ny
    cdef double k1x, k1y, k2x, k2y, k3x, k3y, k4x, k4y
    cdef double half = 0.5 * dt
    cdef long i, count = 1
    cdef bint hit = False
    xv[0] = x0
    yv[0] = y0
    with nogil:
        for i in range(max_steps):
            _velocity(x, y, v0, R, gamma, &k1x, &k1y)
            _velocity(x + half * k1x, y + half * k1y, v0, R, gamma, &k2x, &k2y)
            _velocity(x + half * k2x, y + half * k2y, v0, R, gamma, &k3x, &k3y)
            _velocity(x + dt * k3x, y + dt * k3y, v0, R, gamma, &k4x, &k4y)
            nx = x + dt / 6.0 * (k1x + 2.0 * (k2x + k3x) + k4x)
            ny = y + dt / 6.0 * (k1y + 2.0 * (k2y + k3y) + k4y)
            if nx * nx + ny * ny < R * R:
                hit = True
                break
            x = nx
            y = ny
            xv[count] = x
            yv[count] = y
            count += 1
            if x > stop_x:
                break
    return xs[:count].copy(), ys[:count].copy(), bool(hit)


cdef inline double _ax(double k, double x, double y) noexcept nogil:
    return -k * y / (x * x + y * y)


cdef inline double _ay(double k, double x, double y) noexcept nogil:
    return k * x / (x * x + y * y)


def ab_grid_decompose(xs, ys, hs, double flux):
    cdef double[::1] xv = np.ascontiguousarray(xs, dtype=float)
    cdef double[::1] yv = np.ascontiguousarray(ys, dtype=float)
    cdef double[::1] hv = np.ascontiguousarray(hs, dtype=float)
    cdef Py_ssize_t n = xv.shape[0], i
    out = np.empty((n, 6))
    cdef double[:, ::1] o = out
    cdef double k = flux / TWO_PI
    cdef double x, y, h, inv, jxx, jxy, jyx, jyy, tr
    with nogil:
        for i in range(n):
            x = xv[i]
            y = yv[i]
            h = hv[i]
            inv = 1.0 / (2.0 * h)
            jxx = (_ax(k, x + h, y) - _ax(k, x - h, y)) * inv
            jyx = (_ay(k, x + h, y) - _ay(k, x - h, y)) * inv
            jxy = (_ax(k, x, y + h) - _ax(k, x, y - h)) * inv
            jyy = (_ay(k, x, y + h) - _ay(k, x, y - h)) * inv
            tr = jxx + jyy
            o[i, 0] = tr
            o[i, 1] = jyx - jxy
            o[i, 2] = jxx - tr / 3.0
            o[i, 3] = 0.5 * (jxy + jyx)
            o[i, 4] = jyy - tr / 3.0
            o[i, 5] = hypot(o[i, 3], 0.5 * (o[i, 2] - o[i, 4]))
    return out


def angle_average(double r, int component, double a, double b, long n,
                  double v0, double R, double flux, double e, double gamma):
    cdef double q = R * R / (r * r)
    cdef double scale = e * flux / (TWO_PI * r * r)
    cdef double g = gamma / (TWO_PI * r)
    cdef double step = (b - a) / (n - 1)
    cdef double total = 0.0, th, c, s, f, w
    cdef long i
    with nogil:
        for i in range(n):
            th = a + i * step
            if i == n - 1:
                th = b
            c = cos(th)
            s = sin(th)
            if component == 0:
                f = scale * (v0 * s * c * (1.0 + q) - g * c + v0 * c * s * (1.0 - q))
            else:
                f = scale * (v0 * s * s * (1.0 + q) - g * s - v0 * c * c * (1.0 - q))
            w = 0.5 if (i == 0 or i == n - 1) else 1.0
            total += w * f
    return total / (n - 1)


def lateral_force_annulus(double R, double rmax, long n_r, long n_theta,
                          double v0, double flux, double e):
    s2_arr = np.sin(np.linspace(0.0, TWO_PI, n_theta)) ** 2
    c2_arr = np.cos(np.linspace(0.0, TWO_PI, n_theta)) ** 2
    r_arr = np.linspace(R, rmax, n_r)
    cdef double[::1] s2 = s2_arr
    cdef double[::1] c2 = c2_arr
    cdef double[::1] rv = r_arr
    cdef double pref = e * v0 * flux / TWO_PI
    cdef double hth = TWO_PI / (n_theta - 1)
    cdef double hr = (rmax - R) / (n_r - 1)
    cdef double total = 0.0, inner, r, q, w
    cdef long i, j
    with nogil:
        for i in range(n_r):
            r = rv[i]
            q = R * R / (r * r)
            inner = 0.5 * ((s2[0] + s2[n_theta - 1]) * (1.0 + q)
                           - (c2[0] + c2[n_theta - 1]) * (1.0 - q))
            for j in range(1, n_theta - 1):
                inner += s2[j] * (1.0 + q) - c2[j] * (1.0 - q)
            inner *= pref / (r * r) * hth
            w = 0.5 if (i == 0 or i == n_r - 1) else 1.0
            total += w * inner * r
    return total * hr
