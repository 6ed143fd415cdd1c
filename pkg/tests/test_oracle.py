import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from atto import sampling
from atto.blaschke import BlaschkeProduct
from atto.errors import TruncationInsufficient
from atto.modelspace import ModelSpaceBasis, kernel, project
from atto.oracle import (FourierSlice, InstanceRejected, atto_matrix_oracle, fourier_of,
                         model_project, szego_project)
from atto.symbols import RationalAnalytic, make_symbol, zero_class_symbol
from atto.tto import atto_matrix, rank_one_boundary, rank_one_interior_a, rank_one_interior_b

seeds = st.integers(0, 2**32 - 1)
Z2 = BlaschkeProduct.monomial(2)


def _slice(M, entries):
    c = np.zeros(2 * M + 1, dtype=complex)
    for n, v in entries.items():
        c[n + M] = v
    return FourierSlice(M, c)


def test_geometric_series():
    f = RationalAnalytic([1], [1, -0.5])
    s = fourier_of(f, M=40, check=False)
    n = np.arange(41)
    assert np.allclose(s.nonnegative, 0.5 ** n, atol=1e-16)
    assert np.all(s.coeffs[:40] == 0)
    # 2**-39 is above the admitted tail, so the checked path needs a larger M.
    with pytest.raises(TruncationInsufficient):
        fourier_of(f, M=40)
    assert fourier_of(f, M=48).tail() < 1e-12


def test_conjugate_of_z():
    s = fourier_of(make_symbol(RationalAnalytic.zero(), RationalAnalytic.polynomial([0, 1])), M=8)
    assert s[-1] == 1
    assert np.count_nonzero(s.coeffs) == 1


def test_shifted_geometric_by_convolution():
    M = 60
    direct = fourier_of(RationalAnalytic([0, 0, 1], [1, -1 / 3]), M)
    product = fourier_of(RationalAnalytic.polynomial([0, 0, 1]), M) * \
        fourier_of(RationalAnalytic([1], [1, -1 / 3]), M, check=False)
    n = np.arange(M + 1)
    expected = np.where(n >= 2, (1 / 3.0) ** (n - 2.0), 0)
    assert np.allclose(direct.nonnegative, expected, atol=1e-15)
    assert np.allclose(product.coeffs, direct.coeffs, atol=1e-15)


def test_tail_invariant_enforced():
    with pytest.raises(TruncationInsufficient):
        fourier_of(RationalAnalytic([1], [1, -0.9]), M=40)


def test_near_circle_pole_rejected():
    with pytest.raises(InstanceRejected):
        fourier_of(RationalAnalytic([1], [1, -1 / 1.0005]), M=40)


def test_szego_examples():
    M = 4
    assert np.all(szego_project(_slice(M, {-1: 1})).coeffs == 0)
    analytic = _slice(M, {0: 1, 2: 3j})
    assert np.array_equal(szego_project(analytic).coeffs, analytic.coeffs)
    mixed = _slice(M, {-2: 5, 0: 1, 1: -1})
    assert np.array_equal(szego_project(mixed).coeffs, _slice(M, {0: 1, 1: -1}).coeffs)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_szego_idempotent_and_contractive(seed):
    rng = np.random.default_rng(seed)
    s = fourier_of(sampling.symbol(rng), M=128)
    p = szego_project(s)
    assert np.array_equal(szego_project(p).coeffs, p.coeffs)
    assert p.energy() <= s.energy()


def test_model_project_examples():
    M = 32
    assert np.allclose(model_project(Z2, _slice(M, {3: 1})).coeffs, 0, atol=1e-15)
    assert np.allclose(model_project(Z2, _slice(M, {0: 1})).coeffs, _slice(M, {0: 1}).coeffs)
    alpha = BlaschkeProduct(np.exp(0.6j), (0.5,))
    got = model_project(alpha, _slice(128, {0: 1}))
    expected = fourier_of(kernel(ModelSpaceBasis(alpha), 0), 128)
    assert np.allclose(got.coeffs, expected.coeffs, atol=1e-14)
    assert complex(alpha(0)) == pytest.approx(-0.5 * alpha.constant)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_model_project_idempotent_and_matches_basis(seed):
    rng = np.random.default_rng(seed)
    alpha = sampling.blaschke(rng)
    s = sampling.symbol(rng)
    p = model_project(alpha, fourier_of(s, 256))
    assert np.max(np.abs(model_project(alpha, p).coeffs - p.coeffs)) < 1e-10
    via_basis = fourier_of(project(ModelSpaceBasis(alpha), s), 256)
    assert np.max(np.abs(p.coeffs - via_basis.coeffs)) < 1e-8


def test_oracle_shift_matrix():
    m = atto_matrix_oracle(Z2, Z2, make_symbol(RationalAnalytic.polynomial([0, 1])))
    assert np.allclose(m.entries, [[0, 0], [1, 0]], atol=1e-15)


def test_oracle_zero_class():
    rng = np.random.default_rng(21)
    alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
    s = zero_class_symbol(alpha, beta, sampling.polynomial(rng), sampling.polynomial(rng))
    assert atto_matrix_oracle(alpha, beta, s).norm < 1e-9


@given(seeds, st.integers(0, 3))
@settings(max_examples=40, deadline=None)
def test_oracle_agrees_with_quadrature(seed, kind):
    rng = np.random.default_rng(seed)
    alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
    if kind == 0:
        s = sampling.symbol(rng)
    elif kind == 1:
        s = rank_one_interior_a(alpha, beta, sampling.disk_point(rng))[0]
    elif kind == 2:
        s = rank_one_interior_b(alpha, beta, sampling.disk_point(rng))[0]
    else:
        s = rank_one_boundary(alpha, beta, sampling.boundary_point(rng))[0]
    diff = atto_matrix(alpha, beta, s).entries - atto_matrix_oracle(alpha, beta, s).entries
    assert np.max(np.abs(diff)) < 1e-8


def test_truncation_order_is_raised_automatically():
    # Pole at 1.05 needs far more than 64 terms.
    s = make_symbol(RationalAnalytic([1], [1, -1 / 1.05]))
    m = atto_matrix_oracle(Z2, Z2, s, M=64)
    assert np.max(np.abs(m.entries - atto_matrix(Z2, Z2, s).entries)) < 1e-8


def test_truncation_cap_raises():
    s = make_symbol(RationalAnalytic([1], [1, -1 / 1.01]))
    with pytest.raises(TruncationInsufficient):
        atto_matrix_oracle(Z2, Z2, s, M=64, max_M=256)


@given(seeds)
@settings(max_examples=15, deadline=None)
def test_doubling_truncation_is_stable(seed):
    rng = np.random.default_rng(seed)
    alpha, beta, s = sampling.blaschke(rng), sampling.blaschke(rng), sampling.symbol(rng)
    a = atto_matrix_oracle(alpha, beta, s, M=256).entries
    b = atto_matrix_oracle(alpha, beta, s, M=512).entries
    assert np.max(np.abs(a - b)) < 1e-10
