"""a-numbers of Artin-Schreier curves y^p - y = f(x) via the Cartier operator."""

from .algebra import FieldContext, FieldElement, FqMatrix, make_field, pth_root, rank_and_kernel
from .bounds import L, L_J, IndexSets, index_sets, inject_C_into_R, inject_R_into_C
from .cartier import (
    CartierMatrix,
    FiltrationReport,
    a_number,
    cartier_matrix,
    filtration_report,
    phi_matrix_rank,
    poly_power_table,
)
from .certificate import GreedyCertificate, MinorSpec, Monomial, greedy_sigma0, minor_spec, randomized_det_check
from .curve import BasisLayout, CurveParams, DiffIndex, basis_layout, genus, ord_at_infinity

__version__ = "0.1.0"
