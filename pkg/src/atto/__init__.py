"""Model spaces of finite Blaschke products and asymmetric truncated Toeplitz operators."""

from .blaschke import BlaschkeProduct, crofoot_target, involution_check
from .errors import (AttoError, BasisMismatch, InvariantViolation, PoleOnOrInsideDisk,
                     QuadratureNotConverged, RootFindingFailure, SplitFailure,
                     TruncationInsufficient)
from .modelspace import (ConjugationMatrix, ModelSpaceBasis, ModelSpaceElement,
                         conjugate_kernel, conjugation_matrix, element_eval,
                         inner_product, kernel, project)
from .oracle import FourierSlice, atto_matrix_oracle, fourier_of, model_project, szego_project
from .symbols import (CanonicalPair, RationalAnalytic, Symbol, canonical_pair,
                      is_zero_symbol, make_symbol, pair_ambiguity_shift,
                      zero_class_symbol)
from .tto import (AttoMatrix, CrofootOperator, adjoint_matrix, atto_matrix,
                  crofoot_operator, kernel_transform, outer_product,
                  rank_one_boundary, rank_one_interior_a, rank_one_interior_b,
                  transport_symbol)

__version__ = "0.1.0"
