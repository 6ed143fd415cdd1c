"""Trapezoidal quadrature on the unit circle.

For functions analytic in an annulus around the circle the N-point
trapezoidal rule converges geometrically, so a doubling schedule with a
difference test is an efficient and reliable stopping rule.
"""

import numpy as np

from .errors import QuadratureNotConverged

N_START = 64
N_MAX = 2 ** 16
DEFAULT_TOL = 1e-13


def circle_nodes(n):
    """Return the ``n`` equispaced points ``exp(2*pi*i*j/n)``."""
    return np.exp(2j * np.pi * np.arange(n) / n)


def circle_mean(integrand, tol=DEFAULT_TOL, n_start=N_START, n_max=N_MAX):
    """Approximate ``(1/2pi) * int_0^{2pi} integrand(e^{it}) dt``.

    ``integrand`` maps a 1-D array of nodes to an array whose leading axis
    runs over the nodes; the trailing axes are integrated independently.
    The node count doubles until two consecutive rules agree to
    ``tol * max(1, |result|)`` in every component.
    """
    n = n_start
    prev = np.mean(integrand(circle_nodes(n)), axis=0)
    while 2 * n <= n_max:
        n *= 2
        cur = np.mean(integrand(circle_nodes(n)), axis=0)
        scale = max(1.0, float(np.max(np.abs(cur), initial=0.0)))
        if np.max(np.abs(cur - prev), initial=0.0) <= tol * scale:
            return cur
        prev = cur
    raise QuadratureNotConverged(
        f"circle quadrature did not reach tol={tol:g} with {n_max} nodes")
