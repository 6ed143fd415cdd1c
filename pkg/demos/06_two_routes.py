"""
Two independent ways to the same matrix
=======================================

The main path integrates on the circle with an adaptive trapezoidal rule.
The oracle works on truncated Fourier coefficients: Taylor expansion,
convolution and coefficient masking, no quadrature at all.
"""

import numpy as np

from atto import atto_matrix, atto_matrix_oracle, fourier_of, szego_project
from atto import sampling

rng = np.random.default_rng(7)
alpha, beta = sampling.blaschke(rng), sampling.blaschke(rng)
phi = sampling.symbol(rng)

quad = atto_matrix(alpha, beta, phi).entries
fourier = atto_matrix_oracle(alpha, beta, phi).entries
print("dimensions:", quad.shape)
print("largest entry gap:", np.max(np.abs(quad - fourier)))

# The Fourier slice of the symbol decays geometrically in both directions.
s = fourier_of(phi, 64)
print("coefficients n = -3..3:", np.round([s[n] for n in range(-3, 4)], 6))
print("energy kept by the Szego projection:", szego_project(s).energy() / s.energy())
