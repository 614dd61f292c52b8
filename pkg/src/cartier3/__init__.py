"""Exact a-number statistics of hyperelliptic curves in characteristic 3.

The package computes a-numbers of y^2 = f(x) over GF(3^k) through the
cube-part decomposition of f, counts height-constrained subspaces of
rational-function 3-space over any small finite field, and verifies the
exact closed forms for both against exhaustive enumeration.
"""

from ._kernels import BACKEND, USE_NUMBA
from .cartier import (
    ANumberReport,
    CartierMatrix,
    CubeParts,
    HeightANumber,
    a_number_fundeq,
    a_number_height,
    a_number_kernel,
    a_number_report,
    cartier_matrix,
    cube_parts,
)
from .census import (
    CensusKey,
    CensusTable,
    IntrinsicCardinalityReport,
    TheoremComparison,
    conjecture_report,
    cubefree_count_formula,
    heuristic_nu,
    intrinsic_cardinality,
    mu_closed_form,
    nu_closed_form,
    run_census,
    squarefree_count_formula,
    verify_corollaries,
    verify_pcounting,
    verify_distribution,
)
from .gf import Field, FieldElement, field_new
from .heights import (
    BudgetError,
    CountReport,
    RegimeError,
    TripleVec,
    count_lines,
    count_N,
    count_planes_over_line,
    count_S,
    count_T,
    mu1,
    mu2_bruteforce,
    sweep,
)
from .poly import (
    Poly,
    chunk_ranges,
    cube_split,
    enumerate_monic,
    is_cubefree,
    is_squarefree,
    monic_count,
    monic_from_code,
    squarefree_decompose,
)

__version__ = "0.1.0"

__all__ = [
    "ANumberReport",
    "BACKEND",
    "BudgetError",
    "CartierMatrix",
    "CensusKey",
    "CensusTable",
    "CountReport",
    "CubeParts",
    "Field",
    "FieldElement",
    "HeightANumber",
    "IntrinsicCardinalityReport",
    "Poly",
    "RegimeError",
    "TheoremComparison",
    "TripleVec",
    "USE_NUMBA",
    "a_number_fundeq",
    "a_number_height",
    "a_number_kernel",
    "a_number_report",
    "cartier_matrix",
    "chunk_ranges",
    "conjecture_report",
    "count_N",
    "count_S",
    "count_T",
    "count_lines",
    "count_planes_over_line",
    "cube_parts",
    "cube_split",
    "cubefree_count_formula",
    "enumerate_monic",
    "field_new",
    "heuristic_nu",
    "intrinsic_cardinality",
    "is_cubefree",
    "is_squarefree",
    "monic_count",
    "monic_from_code",
    "mu1",
    "mu2_bruteforce",
    "mu_closed_form",
    "nu_closed_form",
    "run_census",
    "squarefree_count_formula",
    "squarefree_decompose",
    "sweep",
    "verify_corollaries",
    "verify_pcounting",
    "verify_distribution",
]
