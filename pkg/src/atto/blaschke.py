"""Finite Blaschke products and their disk-automorphism compositions.

A finite Blaschke product

    B(z) = c * prod_j (z - a_j) / (1 - conj(a_j) z),    |c| = 1, |a_j| < 1,

is the only kind of inner function handled by this package; its model
space has dimension ``len(zeros)``.
"""

from dataclasses import dataclass

import numpy as np
from numpy.polynomial import polynomial as npoly

from .errors import InvariantViolation, RootFindingFailure

UNIMODULAR_TOL = 1e-14
INTERIOR_MARGIN = 1e-12
ROOT_RESIDUAL_TOL = 1e-12


def check_disk_point(w):
    """Validate and return ``w`` as a complex point of the open disk."""
    w = complex(w)
    if not abs(w) <= 1 - INTERIOR_MARGIN:
        raise InvariantViolation(f"|w| = {abs(w)!r} is not strictly inside the disk")
    return w


def check_boundary_point(eta):
    eta = complex(eta)
    if abs(abs(eta) - 1) > UNIMODULAR_TOL:
        raise InvariantViolation(f"|eta| = {abs(eta)!r} is not on the unit circle")
    return eta


def is_boundary_point(w):
    """True for points of the circle, False for disk points; raise otherwise.

    Points in the thin shell ``1 - 1e-12 < |w| < 1 - 1e-14`` are neither.
    """
    w = complex(w)
    if abs(abs(w) - 1) <= UNIMODULAR_TOL:
        return True
    check_disk_point(w)
    return False


@dataclass(frozen=True)
class BlaschkeProduct:
    """Finite Blaschke product ``constant * prod (z - a)/(1 - conj(a) z)``.

    Zeros are kept in the given order (the model-space basis depends on
    it). Two products describing the same function with permuted zeros
    compare unequal; use :meth:`agrees_with` for functional equality.
    """

    constant: complex
    zeros: tuple

    def __post_init__(self):
        c = complex(self.constant)
        zeros = tuple(complex(a) for a in self.zeros)
        if abs(abs(c) - 1) > UNIMODULAR_TOL:
            raise InvariantViolation(f"|constant| = {abs(c)!r} is not 1")
        if not zeros:
            raise InvariantViolation("a Blaschke product needs at least one zero")
        for j, a in enumerate(zeros):
            if not abs(a) <= 1 - INTERIOR_MARGIN:
                raise InvariantViolation(
                    f"zero {j} = {a!r} has modulus {abs(a)!r} >= 1 - 1e-12")
        object.__setattr__(self, "constant", c)
        object.__setattr__(self, "zeros", zeros)

    @classmethod
    def from_zeros(cls, zeros, constant=1.0):
        return cls(constant, tuple(zeros))

    @classmethod
    def monomial(cls, n, constant=1.0):
        """``constant * z**n``."""
        return cls(constant, (0j,) * n)

    @property
    def degree(self):
        return len(self.zeros)

    @property
    def zeros_array(self):
        return np.array(self.zeros, dtype=complex)

    def factors(self, z):
        """Array of Moebius factors, shape ``z.shape + (degree,)``."""
        z = np.asarray(z, dtype=complex)[..., None]
        a = self.zeros_array
        return (z - a) / (1 - a.conj() * z)

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.constant, dtype=complex)
        for a in self.zeros:
            out *= (z - a) / (1 - a.conjugate() * z)
        return out if out.ndim else complex(out)

    def derivative(self, z):
        """Exact derivative by the product rule (no division by ``B``)."""
        z = np.asarray(z, dtype=complex)
        f = self.factors(z)
        a = self.zeros_array
        df = (1 - np.abs(a) ** 2) / (1 - a.conj() * z[..., None]) ** 2
        ones = np.ones(z.shape + (1,), dtype=complex)
        # prefix[..., j] = prod_{i<j} f_i, suffix[..., j] = prod_{i>j} f_i
        prefix = np.cumprod(np.concatenate([ones, f[..., :-1]], axis=-1), axis=-1)
        suffix = np.cumprod(np.concatenate([ones, f[..., :0:-1]], axis=-1), axis=-1)[..., ::-1]
        out = self.constant * np.sum(df * prefix * suffix, axis=-1)
        return out if out.ndim else complex(out)

    # -- polynomial forms -------------------------------------------------

    def numerator(self):
        """Ascending coefficients of ``constant * prod (z - a_j)``."""
        return self.constant * npoly.polyfromroots(self.zeros_array).astype(complex)

    def denominator(self):
        """Ascending coefficients of ``prod (1 - conj(a_j) z)``; value 1 at 0."""
        q = np.array([1.0 + 0j])
        for a in self.zeros:
            q = npoly.polymul(q, [1.0, -a.conjugate()])
        return q

    def agrees_with(self, other, tol=1e-9, points=None):
        """Functional equality on sample points of the closed disk."""
        if self.degree != other.degree:
            return False
        if points is None:
            points = sample_closed_disk(64, np.random.default_rng(0))
        return bool(np.max(np.abs(self(points) - other(points))) <= tol)

    def to_json(self):
        return {"constant": [self.constant.real, self.constant.imag],
                "zeros": [[a.real, a.imag] for a in self.zeros]}

    @classmethod
    def from_json(cls, data):
        c = complex(*data["constant"])
        return cls(c, tuple(complex(*a) for a in data["zeros"]))


def sample_closed_disk(n, rng):
    """``n`` points spread over the closed disk, a quarter on the circle."""
    m = n // 4
    theta = rng.uniform(0, 2 * np.pi, n)
    r = np.sqrt(rng.uniform(0, 1, n))
    r[:m] = 1.0
    return r * np.exp(1j * theta)


def _polish(B, w, roots, iters=8):
    roots = roots.copy()
    for _ in range(iters):
        res = B(roots) - w
        d = B.derivative(roots)
        ok = np.abs(d) > 1e-300
        step = np.zeros_like(roots)
        step[ok] = res[ok] / d[ok]
        trial = roots - step
        better = np.abs(B(trial) - w) < np.abs(res)
        roots[better] = trial[better]
        if not np.any(better):
            break
    return roots


def _merge_clusters(roots, radius):
    """Replace each single-linkage cluster at scale ``radius`` by its centroid.

    A root of multiplicity m comes back from the companion matrix split by
    about eps**(1/m); the centroid of the split cluster stays accurate to eps.
    Also returns a mask of roots that were left alone.
    """
    n = len(roots)
    label = list(range(n))

    def find(i):
        while label[i] != i:
            label[i] = label[label[i]]
            i = label[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(roots[i] - roots[j]) < radius:
                label[find(i)] = find(j)
    out = roots.copy()
    single = np.ones(n, dtype=bool)
    groups = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    for members in groups.values():
        if len(members) > 1:
            out[members] = np.mean(roots[members])
            single[members] = False
    return out, single


_CHECK_POINTS = sample_closed_disk(64, np.random.default_rng(20240601))


def _with_constant(B, w, roots):
    # Fix the constant on a boundary point well away from every zero.
    probes = np.exp(2j * np.pi * np.arange(16) / 16)
    dist = np.min(np.abs(probes[:, None] - roots[None, :]), axis=1)
    zeta = probes[int(np.argmax(dist))]
    bz = B(zeta)
    target = (w - bz) / (1 - w.conjugate() * bz)
    c = target / np.prod((zeta - roots) / (1 - roots.conj() * zeta))
    return BlaschkeProduct(c / abs(c), tuple(roots))


def crofoot_target(B, w):
    """The Blaschke product ``(w - B(z)) / (1 - conj(w) B(z))``.

    Its zeros solve ``B(z) = w``; they come from the companion matrix of
    ``w*Q - P`` (``B = P/Q``). Nearly coincident roots are tried merged at
    several radii, isolated roots are polished by Newton steps, and the
    candidate that best reproduces the target function on fixed check
    points is kept.
    """
    w = check_disk_point(w)
    poly = npoly.polysub(w * B.denominator(), B.numerator())
    try:
        roots = npoly.polyroots(poly)
    except np.linalg.LinAlgError as exc:
        raise RootFindingFailure(f"companion eigensolve failed: {exc}") from exc
    if len(roots) != B.degree or not np.all(np.isfinite(roots)):
        raise RootFindingFailure(
            f"expected {B.degree} finite roots, got {len(roots)}")
    roots = np.asarray(roots, dtype=complex)

    bz = B(_CHECK_POINTS)
    target = (w - bz) / (1 - w.conjugate() * bz)
    best, best_err, seen = None, np.inf, []
    for radius in (0.0, 1e-9, 1e-8, 1e-7, 1e-6, 1e-5, 1e-4, 1e-3):
        cand, single = _merge_clusters(roots, radius)
        if any(np.array_equal(single, s) for s in seen):
            continue
        seen.append(single)
        cand[single] = _polish(B, w, cand[single])
        if not np.all(np.abs(cand) <= 1 - INTERIOR_MARGIN):
            continue
        if np.max(np.abs(B(cand) - w)) > ROOT_RESIDUAL_TOL:
            continue
        prod = _with_constant(B, w, cand)
        err = np.max(np.abs(prod(_CHECK_POINTS) - target))
        if err < best_err:
            best, best_err = prod, err
    if best is None:
        raise RootFindingFailure(
            "no interior root set meets the 1e-12 residual bound")
    return best


def involution_check(B, w, tol=1e-9, rng=None):
    """True iff applying :func:`crofoot_target` twice with ``w`` returns ``B``."""
    rng = np.random.default_rng(0) if rng is None else rng
    twice = crofoot_target(crofoot_target(B, w), w)
    return B.agrees_with(twice, tol=tol, points=sample_closed_disk(64, rng))


def kernel_polys(B, w):
    """Exact polynomial pair ``(num, den)`` with ``k_w^B = num/den``.

    Works for |w| < 1 and for |w| = 1; on the circle the factor
    ``1 - conj(w) z`` is divided out of the numerator exactly, which
    removes the singularity at ``z = w``.
    """
    P, Q = B.numerator(), B.denominator()
    Pw, Qw = npoly.polyval(w, P), npoly.polyval(w, Q)
    # 1 - conj(B(w)) B(z) = (conj(Qw) Q - conj(Pw) P) / (conj(Qw) Q)
    num = npoly.polysub(Q, (np.conj(Pw) / np.conj(Qw)) * P)
    lin = np.array([1.0, -np.conj(w)])
    if is_boundary_point(w):
        quo, _ = npoly.polydiv(num, lin)
        return quo, Q
    return num, npoly.polymul(Q, lin)


def difference_quotient_polys(B, w):
    """Exact ``(num, den)`` with ``(B(z) - B(w))/(z - w) = num/den``."""
    P, Q = B.numerator(), B.denominator()
    bw = npoly.polyval(w, P) / npoly.polyval(w, Q)
    quo, _ = npoly.polydiv(npoly.polysub(P, bw * Q), np.array([-w, 1.0]))
    return quo, Q
