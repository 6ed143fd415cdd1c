"""Truncated Fourier arithmetic: a quadrature-free route to ATTO matrices.

Rational functions with poles off the circle have geometrically decaying
Fourier coefficients. Taylor coefficients of ``num/den`` come from the
recurrence ``den * T = num`` (an IIR filter driven by an impulse), and the
projections act directly on coefficient slices:

    P g        = nonnegative-index part of g
    P_alpha g  = P g - alpha * P(conj(alpha) * P g)
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.signal import lfilter

from .blaschke import BlaschkeProduct
from .errors import TruncationInsufficient
from .modelspace import ModelSpaceBasis, ModelSpaceElement
from .symbols import RationalAnalytic, Symbol, element_rational
from .tto import AttoMatrix

DEFAULT_M = 256
MAX_M = 4096
TAIL_TOL = 1e-12
POLE_CLEARANCE = 1e-3


class InstanceRejected(TruncationInsufficient):
    """Poles too close to the circle for any admissible truncation order."""


@dataclass(frozen=True, eq=False)
class FourierSlice:
    """Coefficients ``c_n`` for ``-M <= n <= M``; ``coeffs[n + M] = c_n``."""

    M: int
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if c.shape != (2 * self.M + 1,):
            raise ValueError(f"need {2 * self.M + 1} coefficients, got {c.shape}")
        object.__setattr__(self, "coeffs", c)

    def __getitem__(self, n):
        return self.coeffs[n + self.M]

    @property
    def nonnegative(self):
        return self.coeffs[self.M:]

    def tail(self):
        c, M = self.coeffs, self.M
        return float(max(abs(c[0]), abs(c[1]), abs(c[2 * M]), abs(c[2 * M - 1])))

    def check_tail(self, tol=TAIL_TOL):
        scale = max(1.0, float(np.max(np.abs(self.coeffs))))
        if self.tail() >= tol * scale:
            raise TruncationInsufficient(
                f"tail {self.tail():.2e} at M={self.M} exceeds {tol:g}")
        return self

    def __add__(self, other):
        return FourierSlice(self.M, self.coeffs + other.coeffs)

    def __sub__(self, other):
        return FourierSlice(self.M, self.coeffs - other.coeffs)

    def __mul__(self, other):
        """Convolution, truncated back to ``[-M, M]``; scalars scale."""
        if isinstance(other, FourierSlice):
            full = np.convolve(self.coeffs, other.coeffs)
            return FourierSlice(self.M, full[self.M:3 * self.M + 1])
        return FourierSlice(self.M, complex(other) * self.coeffs)

    __rmul__ = __mul__

    def conj(self):
        """Slice of the boundary function ``conj(f)``: ``c_n -> conj(c_{-n})``."""
        return FourierSlice(self.M, self.coeffs[::-1].conj())

    def energy(self):
        return float(np.sum(np.abs(self.coeffs) ** 2))


def _taylor(num, den, M):
    den = np.asarray(den, dtype=complex)
    if den.size > 1:
        poles = npoly.polyroots(den)
        if np.min(np.abs(poles)) < 1 + POLE_CLEARANCE:
            raise InstanceRejected(f"pole within {POLE_CLEARANCE:g} of the circle")
    impulse = np.zeros(M + 1, dtype=complex)
    impulse[0] = 1.0
    return lfilter(np.asarray(num, dtype=complex), den, impulse)


def _analytic_slice(num, den, M):
    c = np.zeros(2 * M + 1, dtype=complex)
    c[M:] = _taylor(num, den, M)
    return FourierSlice(M, c)


def fourier_of(f, M=DEFAULT_M, check=True):
    """Fourier slice of a rational boundary function.

    Accepts a :class:`RationalAnalytic`, a :class:`Symbol`
    (``g_plus + conj(g_minus)``), a :class:`BlaschkeProduct` or a
    model-space element.
    """
    if isinstance(f, Symbol):
        out = fourier_of(f.g_plus, M, check=False) + fourier_of(f.g_minus, M, check=False).conj()
    elif isinstance(f, RationalAnalytic):
        out = _analytic_slice(f.numerator, f.denominator, M)
    elif isinstance(f, BlaschkeProduct):
        out = _analytic_slice(f.numerator(), f.denominator(), M)
    elif isinstance(f, ModelSpaceElement):
        return fourier_of(element_rational(f), M, check)
    else:
        raise TypeError(f"no Fourier expansion for {type(f).__name__}")
    return out.check_tail() if check else out


def szego_project(s):
    c = s.coeffs.copy()
    c[:s.M] = 0
    return FourierSlice(s.M, c)


def model_project(alpha, s):
    """Projection onto ``K_alpha`` of a slice (``alpha`` expanded at the same ``M``)."""
    a = fourier_of(alpha, s.M)
    g = szego_project(s)
    return g - a * szego_project(a.conj() * g)


def _matrix_at(alpha, beta, s, M):
    phi = fourier_of(s, M)
    ea = [fourier_of(ModelSpaceBasis(alpha).unit(k), M) for k in range(alpha.degree)]
    eb = [fourier_of(ModelSpaceBasis(beta).unit(j), M) for j in range(beta.degree)]
    out = np.empty((beta.degree, alpha.degree), dtype=complex)
    for k, e in enumerate(ea):
        proj = model_project(beta, phi * e).nonnegative
        for j, f in enumerate(eb):
            out[j, k] = np.vdot(f.nonnegative, proj)
    return out


def atto_matrix_oracle(alpha, beta, s, M=DEFAULT_M, max_M=MAX_M):
    """ATTO matrix from coefficient convolutions; ``M`` doubles while tails are too large."""
    while True:
        try:
            return AttoMatrix(alpha, beta, _matrix_at(alpha, beta, s, M))
        except InstanceRejected:
            raise
        except TruncationInsufficient:
            if 2 * M > max_M:
                raise
            M *= 2
