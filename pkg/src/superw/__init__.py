"""Exact workbench for the superderivation algebra of a Grassmann
algebra at finite rank: the graded bracket, weight modules over the
degree-zero general linear part, induced modules in both directions,
tensor-field realizations, and cross-rank stabilization checks.

Everything is computed over the rationals; randomized modular arithmetic
only ever shortcuts in the certifying direction.
"""

from .errors import (InhomogeneousError, NonBasisElementError,
                     RankMismatchError, RankTooSmallError,
                     StepBudgetExceeded)
from .weights import Weight, order_sequence
from .partitions import (Partition, aspartition, lr_coefficient,
                         partitions_of, schur_dim, socle_layer_mults,
                         stable_highest_weight)
from .grassmann import GrassmannElement, gmul, merge_sign, removal_sign
from .walgebra import (BorelOrder, WElement, basis_terms, bracket,
                       component_dim, format_welement, graded_jacobi_defect,
                       parse_welement, w_apply)
from .glmodules import (GlModule, SocleReport, decompose, gl_conatural,
                        gl_iso_check, gl_natural, gl_simple, gl_trivial,
                        mixed_tensor, schur_module, verify_socle_identity,
                        weyl_dim)
from .modules import (Character, FiniteWModule, SimplicityVerdict,
                      adjoint_module, check_representation, dual_module,
                      is_simple, iso_check, lambda_module, psi_invariants,
                      quotient_module, submodule_generated, tensor_module,
                      trivial_module)
from .induction import (Typicality, find_primitive, kac_minus_truncated,
                        kac_plus, layer_dims, typicality)
from .tensorfields import (DualityReport, coinduction_duality_check,
                           extract_L_minus, tensor_field,
                           tensor_field_simplicity)
from .stability import (StabilizationReport, restricted_character,
                        stabilization_sweep, tail_subalgebra_terms)
from .suite import Criterion, run_suite

__all__ = [
    "BorelOrder", "Character", "Criterion", "DualityReport", "FiniteWModule",
    "GlModule", "GrassmannElement", "InhomogeneousError",
    "NonBasisElementError", "Partition", "RankMismatchError",
    "RankTooSmallError", "SimplicityVerdict", "SocleReport",
    "StabilizationReport", "StepBudgetExceeded", "Typicality", "WElement",
    "Weight", "adjoint_module", "aspartition", "basis_terms", "bracket",
    "check_representation", "coinduction_duality_check", "component_dim",
    "decompose", "dual_module", "extract_L_minus", "find_primitive",
    "format_welement", "gl_conatural", "gl_iso_check", "gl_natural",
    "gl_simple", "gl_trivial", "gmul", "graded_jacobi_defect", "is_simple",
    "iso_check", "kac_minus_truncated", "kac_plus", "lambda_module",
    "layer_dims", "lr_coefficient", "merge_sign", "mixed_tensor",
    "order_sequence", "parse_welement", "partitions_of", "psi_invariants",
    "quotient_module", "removal_sign", "restricted_character", "run_suite",
    "schur_dim", "schur_module", "socle_layer_mults",
    "stabilization_sweep", "stable_highest_weight", "submodule_generated",
    "tail_subalgebra_terms", "tensor_field", "tensor_field_simplicity",
    "tensor_module", "trivial_module", "typicality", "verify_socle_identity",
    "w_apply", "weyl_dim",
]
