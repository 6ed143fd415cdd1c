"""Randomized property suites behind ``atto verify``.

Each property draws an instance from its own random stream, returns a
residual, and passes when the residual stays below a fixed threshold.
Streams are keyed by ``(seed, property index)``, so a report depends only
on the seed and trial count.
"""

import time

import numpy as np

from . import sampling
from .blaschke import crofoot_target, involution_check, sample_closed_disk
from .modelspace import (ModelSpaceBasis, conjugate_kernel, conjugation_matrix,
                         kernel, kernel_function)
from .oracle import atto_matrix_oracle
from .symbols import (CanonicalPair, canonical_pair, is_zero_symbol,
                      pair_ambiguity_shift, zero_class_symbol)
from .tto import (adjoint_matrix, atto_matrix, crofoot_operator, kernel_transform,
                  rank_one_boundary, rank_one_interior_a, rank_one_interior_b,
                  rank_one_outer, transport_symbol)


def _diff(a, b):
    return float(np.max(np.abs(np.asarray(a) - np.asarray(b)), initial=0.0))


def zero_forward(rng):
    alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
    s = zero_class_symbol(alpha, beta, sampling.polynomial(rng), sampling.polynomial(rng))
    return atto_matrix(alpha, beta, s).norm


def zero_converse(rng):
    """0 when the symbol-level verdict matches ``norm < 1e-10``, else 1."""
    alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
    ba, bb = ModelSpaceBasis(alpha), ModelSpaceBasis(beta)
    if rng.uniform() < 0.1:
        c = complex(sampling.unit_box(rng, 1)[0])
        pair = CanonicalPair(-c.conjugate() * kernel(ba, 0), c * kernel(bb, 0))
    else:
        pair = CanonicalPair(sampling.element(rng, ba), sampling.element(rng, bb))
    s = pair.symbol()
    verdict, _ = is_zero_symbol(alpha, beta, s)
    return float(verdict != (atto_matrix(alpha, beta, s).norm < 1e-10))


def canonical_reduction(rng):
    alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
    s = sampling.symbol(rng)
    pair = canonical_pair(alpha, beta, s)
    m = atto_matrix(alpha, beta, s).entries
    shifted = pair_ambiguity_shift(pair, complex(sampling.unit_box(rng, 1)[0]))
    return max(_diff(m, atto_matrix(alpha, beta, pair.symbol()).entries),
               _diff(m, atto_matrix(alpha, beta, shifted.symbol()).entries))


def crofoot_unitary(rng):
    J = crofoot_operator(sampling.blaschke(rng), sampling.disk_point(rng))
    return _diff(J.matrix.conj().T @ J.matrix, np.eye(J.matrix.shape[0]))


def crofoot_involution(rng):
    return float(not involution_check(sampling.blaschke(rng), sampling.disk_point(rng), rng=rng))


def kernel_identity(rng):
    alpha, w, z = sampling.blaschke(rng), sampling.disk_point(rng), sampling.disk_point(rng)
    alpha_w = crofoot_target(alpha, w)
    return _diff(kernel_transform(alpha, w, z, alpha_w).coeffs,
                 kernel(ModelSpaceBasis(alpha_w), z).coeffs)


def symbol_transport(rng):
    alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
    a, b = sampling.disk_point(rng), sampling.disk_point(rng)
    s = sampling.symbol(rng)
    Ja, Jb = crofoot_operator(alpha, a), crofoot_operator(beta, b)
    lhs = Jb.matrix @ atto_matrix(alpha, beta, s).entries @ Ja.inverse_matrix()
    rhs = atto_matrix(Ja.target.alpha, Jb.target.alpha, transport_symbol(alpha, beta, a, b, s))
    return _diff(lhs, rhs.entries)


def rank_one_a(rng):
    alpha, beta, w = sampling.blaschke(rng), sampling.blaschke(rng), sampling.disk_point(rng)
    _, m = rank_one_interior_a(alpha, beta, w)
    return _diff(m.entries, rank_one_outer("a", alpha, beta, w).entries)


def rank_one_b(rng):
    alpha, beta, w = sampling.blaschke(rng), sampling.blaschke(rng), sampling.disk_point(rng)
    _, m = rank_one_interior_b(alpha, beta, w)
    swapped = adjoint_matrix(rank_one_interior_a(beta, alpha, w)[1])
    return max(_diff(m.entries, rank_one_outer("b", alpha, beta, w).entries),
               _diff(m.entries, swapped.entries))


def rank_one_edge(rng):
    alpha, beta, eta = sampling.blaschke(rng), sampling.blaschke(rng), sampling.boundary_point(rng)
    _, m = rank_one_boundary(alpha, beta, eta)
    return _diff(m.entries, rank_one_outer("boundary", alpha, beta, eta).entries)


def conjugation(rng):
    basis = ModelSpaceBasis(sampling.blaschke(rng))
    C = conjugation_matrix(basis)
    eye = np.eye(basis.dim)
    out = max(_diff(C.matrix, C.matrix.T), _diff(C.matrix.conj().T @ C.matrix, eye))
    for w in (sampling.disk_point(rng), sampling.boundary_point(rng)):
        out = max(out, _diff(C.apply(kernel(basis, w)).coeffs,
                             conjugate_kernel(basis, w).coeffs))
    return out


def reproducing(rng):
    """Reproducing identity plus agreement of kernel coefficients with the closed form."""
    basis = ModelSpaceBasis(sampling.blaschke(rng))
    f, w = sampling.element(rng, basis), sampling.disk_point(rng)
    z = sample_closed_disk(16, rng)
    k = kernel(basis, w)
    return max(abs(f(w) - f.inner(k)), _diff(k(z), kernel_function(basis.alpha, w)(z)))


def _builder_symbol(rng, alpha, beta):
    kind = int(rng.integers(0, 5))
    if kind == 0:
        return sampling.symbol(rng)
    if kind == 1:
        return zero_class_symbol(alpha, beta, sampling.polynomial(rng), sampling.polynomial(rng))
    if kind == 2:
        return rank_one_interior_a(alpha, beta, sampling.disk_point(rng))[0]
    if kind == 3:
        return rank_one_interior_b(alpha, beta, sampling.disk_point(rng))[0]
    return rank_one_boundary(alpha, beta, sampling.boundary_point(rng))[0]


def oracle_agreement(rng):
    alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
    s = _builder_symbol(rng, alpha, beta)
    return _diff(atto_matrix(alpha, beta, s).entries,
                 atto_matrix_oracle(alpha, beta, s).entries)


# (name, check, threshold); order fixes the random stream of each property.
PROPERTIES = [
    ("zero_symbol_forward", zero_forward, 1e-9),
    ("zero_symbol_converse", zero_converse, 0.5),
    ("canonical_pair_reduction", canonical_reduction, 1e-9),
    ("crofoot_unitary", crofoot_unitary, 1e-10),
    ("crofoot_involution", crofoot_involution, 0.5),
    ("kernel_transform_identity", kernel_identity, 1e-10),
    ("symbol_transport", symbol_transport, 1e-9),
    ("rank_one_interior_a", rank_one_a, 1e-9),
    ("rank_one_interior_b", rank_one_b, 1e-9),
    ("rank_one_boundary", rank_one_edge, 1e-8),
    ("conjugation", conjugation, 1e-10),
    ("reproducing_property", reproducing, 1e-10),
    ("oracle_agreement", oracle_agreement, 1e-8),
]


def run_suite(seed=0, trials=100, properties=None):
    """Run every property ``trials`` times; return a JSON-ready report.

    Only the ``metadata`` block varies between runs with equal arguments.
    """
    started = time.perf_counter()
    rows = []
    for index, (name, check, threshold) in enumerate(properties or PROPERTIES):
        rng = np.random.default_rng([seed, index])
        residuals = [check(rng) for _ in range(trials)]
        worst = max(residuals) if residuals else None
        rows.append({"property": name,
                     "trials": trials,
                     "max_residual": worst,
                     "threshold": threshold,
                     "passed": worst is None or worst < threshold})
    return {"seed": seed,
            "trials": trials,
            "passed": all(r["passed"] for r in rows),
            "properties": rows,
            "metadata": {"runtime_seconds": round(time.perf_counter() - started, 3)}}


def format_report(report):
    lines = [f"seed={report['seed']} trials={report['trials']}"]
    for r in report["properties"]:
        worst = "-" if r["max_residual"] is None else f"{r['max_residual']:.3e}"
        mark = "PASS" if r["passed"] else "FAIL"
        lines.append(f"{mark}  {r['property']:<28} max={worst:>10}  thr={r['threshold']:g}")
    return "\n".join(lines)
