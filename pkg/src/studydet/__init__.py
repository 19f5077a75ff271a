"""Exact Study-type determinants over ring towers, and group determinants."""

from .errors import (BudgetError, InputError, NotInvertibleError, PreconditionError,
                     StructuralError, StudyDetError)
from .rings import QQ, cyclotomic_field, polynomial_ring
from .matrix import Permutation, RingMatrix, det, det_leibniz, kron, perm_action, sigma_perm
from .algebra import (FiniteGroup, TowerBasis, basis_conditions, coset_decompose, load_group,
                      product_basis, twisted_group_algebra)
from .regrep import preimage_element, preimage_matrix, regrep_element, regrep_matrix
from .sdet import quaternion, quaternion_matrix, study_det
from .groupdet import dedekind_factorize, extension_check, frobenius_verify, group_determinant

__version__ = "0.1.0"
