"""Rational boundary symbols and the zero-symbol test.

A symbol is stored as ``phi = g_plus + conj(g_minus)`` on the circle, with
``g_plus`` and ``g_minus`` rational functions whose poles lie outside the
closed disk, and ``g_minus(0) = 0``.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .blaschke import difference_quotient_polys, kernel_polys
from .errors import PoleOnOrInsideDisk, SplitFailure
from .modelspace import ModelSpaceBasis, kernel, project
from .quadrature import DEFAULT_TOL, circle_nodes

POLE_MARGIN = 1e-9
SPLIT_TOL = 1e-10


def _as_poly(c):
    c = np.atleast_1d(np.asarray(c, dtype=complex))
    return npoly.polytrim(c) if c.size > 1 else c


@dataclass(frozen=True, eq=False)
class RationalAnalytic:
    """``numerator / denominator`` with every pole outside the closed disk.

    Coefficients are ascending. The denominator is rescaled so that its
    value at 0 is 1.
    """

    numerator: np.ndarray
    denominator: np.ndarray

    def __post_init__(self):
        num = _as_poly(self.numerator)
        den = _as_poly(self.denominator)
        if den[0] == 0:
            raise PoleOnOrInsideDisk("denominator vanishes at 0")
        if den.size > 1:
            poles = npoly.polyroots(den)
            j = int(np.argmin(np.abs(poles)))
            if abs(poles[j]) < 1 + POLE_MARGIN:
                raise PoleOnOrInsideDisk(
                    f"pole {poles[j]!r} has modulus {abs(poles[j])!r} < 1 + 1e-9")
        num, den = num / den[0], den / den[0]
        num.setflags(write=False)
        den.setflags(write=False)
        object.__setattr__(self, "numerator", num)
        object.__setattr__(self, "denominator", den)

    @classmethod
    def polynomial(cls, coeffs):
        return cls(coeffs, [1.0])

    @classmethod
    def constant(cls, c):
        return cls([c], [1.0])

    @classmethod
    def zero(cls):
        return cls([0.0], [1.0])

    @classmethod
    def from_blaschke(cls, B):
        return cls(B.numerator(), B.denominator())

    def __call__(self, z):
        return npoly.polyval(z, self.numerator) / npoly.polyval(z, self.denominator)

    def at_zero(self):
        return complex(self.numerator[0])

    def __add__(self, other):
        if not isinstance(other, RationalAnalytic):
            other = RationalAnalytic.constant(other)
        a, b = self.denominator, other.denominator
        if a.shape == b.shape and np.array_equal(a, b):
            return RationalAnalytic(npoly.polyadd(self.numerator, other.numerator), a)
        num = npoly.polyadd(npoly.polymul(self.numerator, b),
                            npoly.polymul(other.numerator, a))
        return RationalAnalytic(num, npoly.polymul(a, b))

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, RationalAnalytic):
            return RationalAnalytic(npoly.polymul(self.numerator, other.numerator),
                                    npoly.polymul(self.denominator, other.denominator))
        return RationalAnalytic(complex(other) * self.numerator, self.denominator)

    __rmul__ = __mul__

    def __neg__(self):
        return RationalAnalytic(-self.numerator, self.denominator)

    def __sub__(self, other):
        return self + (-other)

    def to_json(self):
        return {"num": [[c.real, c.imag] for c in self.numerator],
                "den": [[c.real, c.imag] for c in self.denominator]}

    @classmethod
    def from_json(cls, data):
        return cls([complex(*c) for c in data["num"]],
                   [complex(*c) for c in data["den"]])


def kernel_rational(alpha, w):
    """``k_w^alpha`` as a rational function; ``w`` in the disk or on the circle."""
    return RationalAnalytic(*kernel_polys(alpha, complex(w)))


def conjugate_kernel_rational(alpha, w):
    """``(alpha(z) - alpha(w)) / (z - w)`` as a rational function."""
    return RationalAnalytic(*difference_quotient_polys(alpha, complex(w)))


def element_rational(f):
    """Rational form of a model-space element over the common denominator."""
    a = f.basis.alpha.zeros_array
    n = a.size
    num = np.zeros(1, dtype=complex)
    for k in range(n):
        term = np.array([np.sqrt(1 - abs(a[k]) ** 2) * f.coeffs[k]])
        for j in range(k):
            term = npoly.polymul(term, [-a[j], 1.0])
        for j in range(k + 1, n):
            term = npoly.polymul(term, [1.0, -np.conj(a[j])])
        num = npoly.polyadd(num, term)
    return RationalAnalytic(num, f.basis.alpha.denominator())


@dataclass(frozen=True, eq=False)
class Symbol:
    """Boundary function ``g_plus(z) + conj(g_minus(z))``, ``|z| = 1``."""

    g_plus: RationalAnalytic
    g_minus: RationalAnalytic

    def __post_init__(self):
        c = self.g_minus.at_zero()
        if abs(c) > 1e-12 * max(1.0, float(np.max(np.abs(self.g_minus.numerator)))):
            raise ValueError("g_minus(0) must vanish; build symbols with make_symbol")

    def __call__(self, z):
        return self.g_plus(z) + np.conj(self.g_minus(z))

    def __add__(self, other):
        return make_symbol(self.g_plus + other.g_plus, self.g_minus + other.g_minus)

    def __mul__(self, scalar):
        scalar = complex(scalar)
        return Symbol(self.g_plus * scalar, self.g_minus * scalar.conjugate())

    __rmul__ = __mul__

    def __neg__(self):
        return self * -1

    def __sub__(self, other):
        return self + (-other)

    def conj(self):
        """The symbol ``conj(phi)``."""
        return make_symbol(self.g_minus, self.g_plus)

    def to_json(self):
        return {"g_plus": self.g_plus.to_json(), "g_minus": self.g_minus.to_json()}

    @classmethod
    def from_json(cls, data):
        return make_symbol(RationalAnalytic.from_json(data["g_plus"]),
                           RationalAnalytic.from_json(data["g_minus"]))


def make_symbol(g_plus, g_minus=None):
    """Normalize ``(g_plus, g_minus)`` so that ``g_minus(0) = 0``.

    The constant ``g_minus(0)`` is moved to ``g_plus`` as its conjugate;
    boundary values are unchanged.
    """
    if g_minus is None:
        g_minus = RationalAnalytic.zero()
    c = g_minus.at_zero()
    if c == 0:
        return Symbol(g_plus, g_minus)
    return Symbol(g_plus + c.conjugate(), g_minus - c)


def zero_class_symbol(alpha, beta, h1, h2):
    """``conj(alpha h1) + beta h2``, whose compression ``K_alpha -> K_beta`` is zero."""
    return make_symbol(RationalAnalytic.from_blaschke(beta) * h2,
                       RationalAnalytic.from_blaschke(alpha) * h1)


class CircleRational:
    """A rational function on the circle, ``P / (Q_out * Q_in)``.

    ``Q_out`` has all roots outside the closed disk and ``Q_in`` all roots
    inside the open disk (0 allowed). Used to rewrite products of analytic
    and coanalytic rational functions as a :class:`Symbol`.
    """

    def __init__(self, p, q_out, q_in):
        self.p = _as_poly(p)
        self.q_out = _as_poly(q_out)
        self.q_in = _as_poly(q_in)

    @classmethod
    def analytic(cls, g):
        return cls(g.numerator, g.denominator, [1.0])

    @classmethod
    def coanalytic(cls, g):
        """``conj(g(z))`` on the circle, i.e. ``conj(g)(1/z)``."""
        d = max(g.numerator.size, g.denominator.size) - 1
        num = np.zeros(d + 1, dtype=complex)
        den = np.zeros(d + 1, dtype=complex)
        num[:g.numerator.size] = g.numerator.conj()
        den[:g.denominator.size] = g.denominator.conj()
        return cls(num[::-1], [1.0], den[::-1])

    @classmethod
    def from_symbol(cls, s):
        return cls.analytic(s.g_plus) + cls.coanalytic(s.g_minus)

    def __call__(self, z):
        return npoly.polyval(z, self.p) / (
            npoly.polyval(z, self.q_out) * npoly.polyval(z, self.q_in))

    def __mul__(self, other):
        if isinstance(other, CircleRational):
            return CircleRational(npoly.polymul(self.p, other.p),
                                  npoly.polymul(self.q_out, other.q_out),
                                  npoly.polymul(self.q_in, other.q_in))
        return CircleRational(complex(other) * self.p, self.q_out, self.q_in)

    __rmul__ = __mul__

    def __add__(self, other):
        if not isinstance(other, CircleRational):
            other = CircleRational([other], [1.0], [1.0])
        p = npoly.polyadd(
            npoly.polymul(self.p, npoly.polymul(other.q_out, other.q_in)),
            npoly.polymul(other.p, npoly.polymul(self.q_out, self.q_in)))
        return CircleRational(p, npoly.polymul(self.q_out, other.q_out),
                              npoly.polymul(self.q_in, other.q_in))

    __radd__ = __add__

    def __neg__(self):
        return self * -1.0

    def __sub__(self, other):
        return self + (-other)

    def split(self, tol=SPLIT_TOL):
        """Separate into ``g_plus + conj(g_minus)``.

        Solves ``P = X * Q_in + Y * Q_out`` with ``deg Y < deg Q_in``; then
        ``X / Q_out`` is the part analytic in the disk and ``Y / Q_in`` the
        part vanishing at infinity with poles inside.
        """
        p, qo, qi = self.p, self.q_out, self.q_in
        dp, do, di = p.size - 1, qo.size - 1, qi.size - 1
        if di == 0:
            x, y = p / qi[0], np.zeros(0, dtype=complex)
        else:
            top = max(dp, di + do - 1)
            dx = top - di
            m = np.zeros((top + 1, dx + 1 + di), dtype=complex)
            for i in range(dx + 1):
                m[i:i + di + 1, i] = qi
            for i in range(di):
                m[i:i + do + 1, dx + 1 + i] = qo
            rhs = np.zeros(top + 1, dtype=complex)
            rhs[:dp + 1] = p
            sol = np.linalg.lstsq(m, rhs, rcond=None)[0]
            x, y = sol[:dx + 1], sol[dx + 1:]
        g_plus = RationalAnalytic(x, qo)
        if di == 0:
            g_minus = RationalAnalytic.zero()
        else:
            num = np.zeros(di + 1, dtype=complex)
            num[:di] = y.conj()
            g_minus = RationalAnalytic(num[::-1], qi.conj()[::-1])
        out = Symbol(g_plus, g_minus)

        t = circle_nodes(256)
        ref = self(t)
        err = np.max(np.abs(out(t) - ref))
        if err > tol * max(1.0, float(np.max(np.abs(ref)))):
            raise SplitFailure(f"split residue {err:.3e} on the circle")
        return out


@dataclass(frozen=True, eq=False)
class CanonicalPair:
    """``(chi, psi)`` in ``K_alpha x K_beta`` with ``A_phi = A_{conj(chi) + psi}``."""

    chi: object
    psi: object

    def symbol(self):
        return make_symbol(element_rational(self.psi), element_rational(self.chi))


def _projected_pair(alpha, beta, s, tol=DEFAULT_TOL):
    chi = project(ModelSpaceBasis(alpha), s.g_minus, tol=tol)
    psi = project(ModelSpaceBasis(beta), s.g_plus, tol=tol)
    return CanonicalPair(chi, psi)


def canonical_pair(alpha, beta, s, tol=DEFAULT_TOL):
    """The pair ``(chi, psi)`` of ``A_phi`` normalized by ``chi(0) = 0``.

    Pairs are determined by the operator only up to
    :func:`pair_ambiguity_shift`; the shift with
    ``conj(c) = chi(0) / (1 - |alpha(0)|^2)`` picks the unique member with
    ``chi(0) = 0``, which makes the map idempotent.
    """
    p = _projected_pair(alpha, beta, s, tol=tol)
    scale = 1 - abs(complex(alpha(0))) ** 2
    return pair_ambiguity_shift(p, np.conj(p.chi(0)) / scale)


def pair_ambiguity_shift(p, c):
    """The pair ``(chi - conj(c) k_0^alpha, psi + c k_0^beta)``; same operator."""
    c = complex(c)
    k0a = kernel(p.chi.basis, 0)
    k0b = kernel(p.psi.basis, 0)
    return CanonicalPair(p.chi - c.conjugate() * k0a, p.psi + c * k0b)


@dataclass(frozen=True)
class ZeroCertificate:
    c: complex
    residual: float
    threshold: float
    pair: CanonicalPair


def is_zero_symbol(alpha, beta, s, tol=1e-9):
    """Decide whether ``A_phi : K_alpha -> K_beta`` is the zero operator.

    The operator vanishes iff the projected pair
    ``(P_alpha g_minus, P_beta g_plus)`` has the form
    ``(-conj(c) k_0^alpha, c k_0^beta)``. The scalar ``c`` is fitted by
    least squares; the verdict is ``residual <= tol * (1 + |chi| + |psi|)``.

    Returns ``(verdict, ZeroCertificate)``.
    """
    pair = _projected_pair(alpha, beta, s)
    k0a = kernel(pair.chi.basis, 0).coeffs
    k0b = kernel(pair.psi.basis, 0).coeffs
    # |chi + conj(c) k0a| = |conj(chi) + c conj(k0a)|, so the fit is C-linear.
    a = np.concatenate([-k0a.conj(), k0b])
    y = np.concatenate([pair.chi.coeffs.conj(), pair.psi.coeffs])
    c = complex(np.vdot(a, y) / np.vdot(a, a).real)
    residual = float(np.linalg.norm(y - c * a))
    threshold = tol * (1 + pair.chi.norm() + pair.psi.norm())
    return residual <= threshold, ZeroCertificate(c, residual, threshold, pair)
