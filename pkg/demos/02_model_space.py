"""
Model spaces and their kernels
==============================

Coordinates, reproducing kernels, conjugate kernels and the conjugation on
K_alpha, the orthogonal complement of alpha*H^2 in H^2.
"""

import numpy as np

from atto import (BlaschkeProduct, ModelSpaceBasis, conjugate_kernel, conjugation_matrix,
                  kernel, project)

alpha = BlaschkeProduct(1, (0.5, -0.3))
basis = ModelSpaceBasis(alpha)

# The basis is orthonormal, so elements are plain coefficient vectors.
print("Gram matrix:\n", np.round(basis.gram(), 14))

f = basis.element([1.0, 2.0 - 1.0j])
w = 0.2 + 0.4j
k = kernel(basis, w)
print("f(w)       =", f(w))
print("<f, k_w>   =", f.inner(k))

# Kernels also exist at points of the circle.
eta = np.exp(0.7j)
k_eta = kernel(basis, eta)
print("|k_eta|^2 =", k_eta.norm() ** 2, " |alpha'(eta)| =", abs(alpha.derivative(eta)))

# Radial kernels approach the boundary kernel.
for r in (0.9, 0.99, 0.999):
    print(f"r = {r}:  |k_(r eta) - k_eta| = {(kernel(basis, r * eta) - k_eta).norm():.3e}")

# The conjugation C f = alpha conj(z f) is antilinear; as a matrix acting on
# conjugated coefficients it is unitary and symmetric, and it maps kernels
# to difference quotients.
C = conjugation_matrix(basis)
print("C symmetric:", np.allclose(C.matrix, C.matrix.T))
print("C k_w == conjugate kernel:",
      np.allclose(C.apply(k).coeffs, conjugate_kernel(basis, w).coeffs))

# Projection keeps elements and discards alpha * H^2.
g = project(basis, lambda z: alpha(z) * (1 + z**2))
print("projection of alpha*(1+z^2):", np.round(g.coeffs, 14))
