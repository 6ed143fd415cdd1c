"""Model spaces ``K_alpha = H^2 (-) alpha H^2`` in Takenaka-Malmquist coordinates.

For zeros ``a_1, ..., a_n`` of ``alpha`` (in stored order) the functions

    e_k(z) = sqrt(1 - |a_k|^2) / (1 - conj(a_k) z) * prod_{j<k} b_j(z),

``b_j`` the Moebius factor of ``a_j``, form an orthonormal basis of
``K_alpha``. Elements are coefficient vectors in this basis, so inner
products are plain dot products.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .blaschke import (BlaschkeProduct, difference_quotient_polys,
                       is_boundary_point, kernel_polys)
from .errors import BasisMismatch
from .quadrature import DEFAULT_TOL, circle_mean


@dataclass(frozen=True)
class ModelSpaceBasis:
    alpha: BlaschkeProduct

    @property
    def dim(self):
        return self.alpha.degree

    def __call__(self, z):
        """Basis values, shape ``z.shape + (dim,)``."""
        z = np.asarray(z, dtype=complex)
        a = self.alpha.zeros_array
        f = self.alpha.factors(z)
        ones = np.ones(z.shape + (1,), dtype=complex)
        prefix = np.cumprod(np.concatenate([ones, f[..., :-1]], axis=-1), axis=-1)
        return np.sqrt(1 - np.abs(a) ** 2) / (1 - a.conj() * z[..., None]) * prefix

    def element(self, coeffs):
        return ModelSpaceElement(self, coeffs)

    def zero(self):
        return ModelSpaceElement(self, np.zeros(self.dim, dtype=complex))

    def unit(self, k):
        """The basis vector ``e_{k+1}`` (0-based index ``k``)."""
        c = np.zeros(self.dim, dtype=complex)
        c[k] = 1.0
        return ModelSpaceElement(self, c)

    def gram(self, tol=DEFAULT_TOL):
        """``G[j, k] = <e_k, e_j>`` by circle quadrature."""
        def integrand(t):
            e = self(t)
            return e[:, None, :] * e.conj()[:, :, None]
        return circle_mean(integrand, tol=tol)


@dataclass(frozen=True, eq=False)
class ModelSpaceElement:
    basis: ModelSpaceBasis
    coeffs: np.ndarray

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).reshape(-1)
        if c.shape != (self.basis.dim,):
            raise ValueError(f"expected {self.basis.dim} coefficients, got {c.size}")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __call__(self, z):
        out = self.basis(z) @ self.coeffs
        return out if np.ndim(out) else complex(out)

    def _check(self, other):
        if self.basis != other.basis:
            raise BasisMismatch("elements live in different model spaces")

    def inner(self, other):
        self._check(other)
        return complex(np.vdot(other.coeffs, self.coeffs))

    def norm(self):
        return float(np.linalg.norm(self.coeffs))

    def __add__(self, other):
        self._check(other)
        return ModelSpaceElement(self.basis, self.coeffs + other.coeffs)

    def __sub__(self, other):
        self._check(other)
        return ModelSpaceElement(self.basis, self.coeffs - other.coeffs)

    def __mul__(self, scalar):
        return ModelSpaceElement(self.basis, complex(scalar) * self.coeffs)

    __rmul__ = __mul__

    def __neg__(self):
        return ModelSpaceElement(self.basis, -self.coeffs)

    def allclose(self, other, atol):
        self._check(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= atol)

    def to_json(self):
        return {"alpha": self.basis.alpha.to_json(),
                "coeffs": [[c.real, c.imag] for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        basis = ModelSpaceBasis(BlaschkeProduct.from_json(data["alpha"]))
        return cls(basis, [complex(*c) for c in data["coeffs"]])


def inner_product(u, v):
    """``<u, v>``, linear in ``u``."""
    return u.inner(v)


def element_eval(u, z):
    return u(z)


def _poly_ratio(num, den):
    def f(z):
        return npoly.polyval(z, num) / npoly.polyval(z, den)
    return f


def kernel_function(alpha, w):
    """Pointwise evaluator of ``(1 - conj(alpha(w)) alpha(z)) / (1 - conj(w) z)``."""
    return _poly_ratio(*kernel_polys(alpha, complex(w)))


def conjugate_kernel_function(alpha, w):
    """Pointwise evaluator of ``(alpha(z) - alpha(w)) / (z - w)``."""
    return _poly_ratio(*difference_quotient_polys(alpha, complex(w)))


def kernel(basis, w):
    """Reproducing kernel at ``w`` (disk or circle point).

    Since ``<f, k_w> = f(w)`` the coefficients are ``conj(e_k(w))``.
    """
    is_boundary_point(w)
    return ModelSpaceElement(basis, basis(complex(w)).conj())


def project(basis, f, tol=DEFAULT_TOL):
    """Orthogonal projection onto the model space of a function on the circle.

    ``f`` is called with an array of circle nodes.
    """
    coeffs = circle_mean(lambda t: f(t)[:, None] * basis(t).conj(), tol=tol)
    return ModelSpaceElement(basis, coeffs)


def conjugate_kernel(basis, w, tol=DEFAULT_TOL):
    """``C_alpha k_w``, obtained by projecting the difference quotient."""
    is_boundary_point(w)
    return project(basis, conjugate_kernel_function(basis.alpha, w), tol=tol)


@dataclass(frozen=True, eq=False)
class ConjugationMatrix:
    """Coefficient form of ``C f = alpha * conj(z) * conj(f)`` on the circle.

    ``coeffs(C f) = matrix @ conj(coeffs(f))``.
    """

    basis: ModelSpaceBasis
    matrix: np.ndarray

    def apply(self, f):
        if f.basis != self.basis:
            raise BasisMismatch("conjugation applied to an element of another space")
        return ModelSpaceElement(self.basis, self.matrix @ f.coeffs.conj())


def conjugation_matrix(basis, tol=DEFAULT_TOL):
    alpha = basis.alpha

    def integrand(t):
        e = basis(t).conj()
        return (alpha(t) * t.conj())[:, None, None] * e[:, :, None] * e[:, None, :]

    return ConjugationMatrix(basis, circle_mean(integrand, tol=tol))
