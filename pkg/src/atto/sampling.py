"""Random instances for property checks.

Zeros are drawn from the disk of radius 0.8 and symbol poles from the
annulus ``1.5 <= |z| <= 3``, which keeps every quadrature and every
truncated expansion comfortably convergent.
"""

import numpy as np

from .blaschke import BlaschkeProduct
from .modelspace import ModelSpaceElement
from .symbols import RationalAnalytic, make_symbol

ZERO_RADIUS = 0.8


def unit_box(rng, size):
    return rng.uniform(-1, 1, size) + 1j * rng.uniform(-1, 1, size)


def disk_point(rng, radius=ZERO_RADIUS):
    return complex(radius * np.sqrt(rng.uniform()) * np.exp(2j * np.pi * rng.uniform()))


def boundary_point(rng):
    return complex(np.exp(2j * np.pi * rng.uniform()))


def blaschke(rng, max_degree=6, min_degree=1, radius=ZERO_RADIUS):
    """Random product; about one zero in eight sits exactly at the origin."""
    n = int(rng.integers(min_degree, max_degree + 1))
    zeros = [0j if rng.uniform() < 0.125 else disk_point(rng, radius) for _ in range(n)]
    return BlaschkeProduct(boundary_point(rng), tuple(zeros))


def polynomial(rng, max_degree=4):
    d = int(rng.integers(0, max_degree + 1))
    return RationalAnalytic.polynomial(unit_box(rng, d + 1))


def rational(rng, max_degree=3, max_poles=2):
    """Polynomial over a product of factors ``(1 - z/p)`` with ``1.5 <= |p| <= 3``."""
    num = unit_box(rng, int(rng.integers(0, max_degree + 1)) + 1)
    den = np.array([1.0 + 0j])
    for _ in range(int(rng.integers(0, max_poles + 1))):
        p = rng.uniform(1.5, 3.0) * np.exp(2j * np.pi * rng.uniform())
        den = np.convolve(den, [1.0, -1 / p])
    return RationalAnalytic(num, den)


def symbol(rng):
    return make_symbol(rational(rng), rational(rng))


def element(rng, basis):
    return ModelSpaceElement(basis, unit_box(rng, basis.dim))
