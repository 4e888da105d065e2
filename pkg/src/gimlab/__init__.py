"""Exact verification toolkit for matrix and loop-algebra images of the
generalized intersection matrix relation family with corner entries.

Everything computes over the rationals with integer echelon bases, so all
reported dimensions, relation checks, and classifications are exact.
"""

from .backend import get_backend_name, set_backend
from .chevalley import (ChevalleySystem, chevalley_A, chevalley_C,
                        chevalley_D, composite_EF_C, composite_EF_D,
                        defining_form, elementary, lowest_root_vectors_A)
from .classify import (BlockVerdict, ClassificationReport, classify_block,
                       classify_image, form_symmetry, invariant_forms,
                       report_markdown)
from .evalmaps import (CaseConfig, EvalParams, lemma21_images, lemma22_images,
                       lemma23_images, mu_separator, psi_a, psi_big,
                       psi_tuple, tuple_admissible)
from .exact import (EchelonBasis, RatMatrix, Rational, format_rational,
                    insert_into_span, kernel_basis, rat, rref)
from .gim import (GeneratorImages, GimMatrix, RelationFailure, RelationReport,
                  check_gim_relations, check_relations_core, gim_matrix_mn,
                  is_gim)
from .lie import (SubalgebraBasis, ad_power, bracket, center, killing_form,
                  killing_nondegenerate, lie_closure)
from .loop import (LoopElement, QuotientSpec, check_loop_relations,
                   eval_quotient_map, fixed_point_generators, loop_bracket,
                   make_quotient, sigma, xi_chain)

__version__ = "0.1.0"

__all__ = [
    "BlockVerdict", "CaseConfig", "ChevalleySystem", "ClassificationReport",
    "EchelonBasis", "EvalParams", "GeneratorImages", "GimMatrix",
    "LoopElement", "QuotientSpec", "RatMatrix", "Rational",
    "RelationFailure", "RelationReport", "SubalgebraBasis", "ad_power",
    "bracket", "center", "check_gim_relations", "check_loop_relations",
    "check_relations_core", "chevalley_A", "chevalley_C", "chevalley_D",
    "classify_block", "classify_image", "composite_EF_C", "composite_EF_D",
    "defining_form", "elementary", "eval_quotient_map",
    "fixed_point_generators", "form_symmetry", "format_rational",
    "get_backend_name", "gim_matrix_mn", "insert_into_span",
    "invariant_forms", "is_gim", "kernel_basis", "killing_form",
    "killing_nondegenerate", "lemma21_images", "lemma22_images",
    "lemma23_images", "lie_closure", "loop_bracket", "lowest_root_vectors_A",
    "make_quotient", "mu_separator", "psi_a", "psi_big", "psi_tuple",
    "rat", "report_markdown", "rref", "set_backend", "sigma",
    "tuple_admissible", "xi_chain",
]
