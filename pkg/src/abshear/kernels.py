"""
Backend selection for the hot loops.

The compiled ``_ckernels`` extension is used when it was built; otherwise,
or when ``ABSHEAR_PURE_PYTHON`` is set to a non-empty value other than
``0``, the numpy/pure-Python twin in ``_pykernels`` is used. Both expose::

    streamline_rk4(x0, y0, dt, max_steps, v0, R, gamma, stop_x)
    ab_grid_decompose(xs, ys, hs, flux)
    angle_average(r, component, a, b, n, v0, R, flux, e, gamma)
    lateral_force_annulus(R, rmax, n_r, n_theta, v0, flux, e)
"""

import os

from . import _pykernels

__all__ = ["BACKEND", "impl", "python_impl", "compiled_impl"]

python_impl = _pykernels

try:
    from . import _ckernels as compiled_impl
except ImportError:  # extension not built
    compiled_impl = None

if compiled_impl is not None and os.environ.get("ABSHEAR_PURE_PYTHON", "") in ("", "0"):
    impl = compiled_impl
    BACKEND = "compiled"
else:
    impl = python_impl
    BACKEND = "python"
