"""
Rank-one operators
==================

Three explicit symbols produce rank-one compressions: beta(z)/(z-w),
its conjugated counterpart built from alpha, and a boundary version
k_eta^beta + conj(k_eta^alpha) - 1 for |eta| = 1.
"""

import numpy as np

from atto import (BlaschkeProduct, rank_one_boundary, rank_one_interior_a,
                  rank_one_interior_b)
from atto.tto import rank_one_outer

alpha = BlaschkeProduct(1, (0.1 + 0.2j, -0.5j))
beta = BlaschkeProduct(1j, (0.3, 0j, -0.2 + 0.1j))
w, eta = 0.37 + 0.1j, np.exp(0.9j)

for name, build, kind, point in [("interior a", rank_one_interior_a, "a", w),
                                 ("interior b", rank_one_interior_b, "b", w),
                                 ("boundary", rank_one_boundary, "boundary", eta)]:
    _, m = build(alpha, beta, point)
    outer = rank_one_outer(kind, alpha, beta, point)
    sv = np.linalg.svd(m.entries, compute_uv=False)
    print(f"{name:>10}: singular values {np.round(sv, 12)}, "
          f"gap to outer product {np.max(np.abs(m.entries - outer.entries)):.2e}")

# Interior operators at w = r*eta converge to the boundary one.
_, edge = rank_one_boundary(alpha, beta, eta)
phase = eta * np.conj(beta(eta))
for r in (0.9, 0.99, 0.999):
    _, m = rank_one_interior_a(alpha, beta, r * eta)
    print(f"r = {r}: distance {np.linalg.norm(phase * m.entries - edge.entries, 2):.3e}")
