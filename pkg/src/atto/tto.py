"""Matrices of asymmetric truncated Toeplitz operators.

``A_phi^{alpha,beta} f = P_beta(phi f)`` maps ``K_alpha`` into ``K_beta``;
in Takenaka-Malmquist coordinates its matrix has entries
``<phi e_k^alpha, e_j^beta>``.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .blaschke import (BlaschkeProduct, check_boundary_point, check_disk_point,
                       crofoot_target)
from .modelspace import ModelSpaceBasis, ModelSpaceElement, kernel, conjugate_kernel, project
from .quadrature import DEFAULT_TOL, circle_mean
from .symbols import (CircleRational, RationalAnalytic, conjugate_kernel_rational,
                      kernel_rational, make_symbol)


@dataclass(frozen=True, eq=False)
class AttoMatrix:
    """Dense ``dim K_beta x dim K_alpha`` matrix of an operator ``K_alpha -> K_beta``."""

    alpha: BlaschkeProduct
    beta: BlaschkeProduct
    entries: np.ndarray

    def __post_init__(self):
        e = np.array(self.entries, dtype=complex)
        if e.shape != (self.beta.degree, self.alpha.degree):
            raise ValueError(f"shape {e.shape} does not match "
                             f"({self.beta.degree}, {self.alpha.degree})")
        e.setflags(write=False)
        object.__setattr__(self, "entries", e)

    @property
    def norm(self):
        """Operator norm (largest singular value)."""
        return float(np.linalg.norm(self.entries, 2))

    def apply(self, f):
        if f.basis.alpha != self.alpha:
            raise ValueError("element is not in the source space")
        return ModelSpaceElement(ModelSpaceBasis(self.beta), self.entries @ f.coeffs)

    def to_json(self):
        return {"alpha": self.alpha.to_json(),
                "beta": self.beta.to_json(),
                "entries": [[[v.real, v.imag] for v in row] for row in self.entries],
                "norm": self.norm}

    @classmethod
    def from_json(cls, data):
        entries = [[complex(*v) for v in row] for row in data["entries"]]
        return cls(BlaschkeProduct.from_json(data["alpha"]),
                   BlaschkeProduct.from_json(data["beta"]), entries)


def compress(alpha, beta, phi, tol=DEFAULT_TOL):
    """Matrix of ``f -> P_beta(phi f)`` for any boundary evaluator ``phi``."""
    ea, eb = ModelSpaceBasis(alpha), ModelSpaceBasis(beta)

    def integrand(t):
        return phi(t)[:, None, None] * eb(t).conj()[:, :, None] * ea(t)[:, None, :]

    return circle_mean(integrand, tol=tol)


def atto_matrix(alpha, beta, s, tol=DEFAULT_TOL):
    return AttoMatrix(alpha, beta, compress(alpha, beta, s, tol=tol))


def adjoint_matrix(m):
    """Matrix of the adjoint operator ``K_beta -> K_alpha``."""
    return AttoMatrix(m.beta, m.alpha, m.entries.conj().T)


def outer_product(u, v):
    """Matrix of ``f -> <f, v> u`` for ``v`` in ``K_alpha``, ``u`` in ``K_beta``."""
    return AttoMatrix(v.basis.alpha, u.basis.alpha, np.outer(u.coeffs, v.coeffs.conj()))


@dataclass(frozen=True, eq=False)
class CrofootOperator:
    """``J_w f = sqrt(1 - |w|^2) / (1 - conj(w) alpha) * f`` from ``K_alpha`` onto ``K_{alpha_w}``."""

    source: ModelSpaceBasis
    target: ModelSpaceBasis
    w: complex
    matrix: np.ndarray

    def apply(self, f):
        if f.basis != self.source:
            raise ValueError("element is not in the source space")
        return ModelSpaceElement(self.target, self.matrix @ f.coeffs)

    def inverse_matrix(self, tol=DEFAULT_TOL):
        """Matrix of ``f -> (1 - conj(w) alpha) / sqrt(1 - |w|^2) * f``, ``K_{alpha_w} -> K_alpha``."""
        alpha, w = self.source.alpha, self.w

        def mult(t):
            return (1 - w.conjugate() * alpha(t)) / np.sqrt(1 - abs(w) ** 2)

        return compress(self.target.alpha, alpha, mult, tol=tol)


def crofoot_operator(alpha, w, tol=DEFAULT_TOL):
    w = check_disk_point(w)
    target = crofoot_target(alpha, w)

    def mult(t):
        return np.sqrt(1 - abs(w) ** 2) / (1 - w.conjugate() * alpha(t))

    return CrofootOperator(ModelSpaceBasis(alpha), ModelSpaceBasis(target), w,
                           compress(alpha, target, mult, tol=tol))


def kernel_transform(alpha, w, z, alpha_w=None, tol=DEFAULT_TOL):
    """``(1 - |w|^2) / ((1 - w conj(alpha(z))) (1 - conj(w) alpha)) * k_z^alpha`` in ``K_{alpha_w}``.

    This is the reproducing kernel of ``K_{alpha_w}`` at ``z``.
    """
    w, z = check_disk_point(w), check_disk_point(z)
    if alpha_w is None:
        alpha_w = crofoot_target(alpha, w)
    kz = kernel_rational(alpha, z)
    scale = (1 - abs(w) ** 2) / (1 - w * np.conj(alpha(z)))

    def f(t):
        return scale / (1 - w.conjugate() * alpha(t)) * kz(t)

    return project(ModelSpaceBasis(alpha_w), f, tol=tol)


def transport_symbol(alpha, beta, a, b, s):
    """Symbol of ``J_b^beta A_phi (J_a^alpha)^{-1}`` on ``K_{alpha_a} -> K_{beta_b}``.

    Multiplies ``phi`` by ``(1 - conj(a) alpha)(1 - b conj(beta))``, scaled by
    ``1/sqrt((1-|a|^2)(1-|b|^2))``, using ``conj(beta) = 1/beta`` on the
    circle, and re-splits the result into analytic and coanalytic parts.
    """
    a, b = check_disk_point(a), check_disk_point(b)
    pa, qa = alpha.numerator(), alpha.denominator()
    pb, qb = beta.numerator(), beta.denominator()
    left = CircleRational(npoly.polysub(qa, a.conjugate() * pa), qa, [1.0])
    right = CircleRational(npoly.polysub(pb, b * qb), [1.0], pb)
    scale = 1 / np.sqrt((1 - abs(a) ** 2) * (1 - abs(b) ** 2))
    return (left * right * CircleRational.from_symbol(s) * scale).split()


def rank_one_interior_a(alpha, beta, w, tol=DEFAULT_TOL):
    """Symbol ``beta(z)/(z - w)`` and its matrix ``conj-kernel_w^beta (x) k_w^alpha``.

    On the circle ``beta(z)/(z-w) = (beta(z)-beta(w))/(z-w) + beta(w)/(z-w)``
    and ``beta(w)/(z-w) = conj(conj(beta(w)) z / (1 - conj(w) z))``.
    """
    w = check_disk_point(w)
    g_minus = RationalAnalytic([0.0, np.conj(beta(w))], [1.0, -w.conjugate()])
    s = make_symbol(conjugate_kernel_rational(beta, w), g_minus)
    return s, atto_matrix(alpha, beta, s, tol=tol)


def rank_one_interior_b(alpha, beta, w, tol=DEFAULT_TOL):
    """Symbol ``conj(alpha(z))/(conj(z) - conj(w))``; matrix ``k_w^beta (x) conj-kernel_w^alpha``."""
    w = check_disk_point(w)
    g_plus = RationalAnalytic([0.0, np.conj(alpha(w))], [1.0, -w.conjugate()])
    s = make_symbol(g_plus, conjugate_kernel_rational(alpha, w))
    return s, atto_matrix(alpha, beta, s, tol=tol)


def rank_one_boundary(alpha, beta, eta, tol=DEFAULT_TOL):
    """Symbol ``k_eta^beta + conj(k_eta^alpha) - 1``; matrix ``k_eta^beta (x) k_eta^alpha``."""
    eta = check_boundary_point(eta)
    s = make_symbol(kernel_rational(beta, eta) - 1.0, kernel_rational(alpha, eta))
    return s, atto_matrix(alpha, beta, s, tol=tol)


def rank_one_outer(kind, alpha, beta, w, tol=DEFAULT_TOL):
    """The outer product a rank-one builder is expected to reproduce."""
    ba, bb = ModelSpaceBasis(alpha), ModelSpaceBasis(beta)
    if kind == "a":
        return outer_product(conjugate_kernel(bb, w, tol=tol), kernel(ba, w))
    if kind == "b":
        return outer_product(kernel(bb, w), conjugate_kernel(ba, w, tol=tol))
    if kind == "boundary":
        return outer_product(kernel(bb, w), kernel(ba, w))
    raise ValueError(f"unknown rank-one kind {kind!r}")
