"""Exact construction, verification and analysis of rectangular block designs.

A rectangular design places v = m*n treatments on an m x n array and
blocks them so that same-row, same-column and diagonal treatment pairs
concur lambda1, lambda2 and lambda3 times.  The package builds the
classical families (Kronecker and circulant compositions, orthogonal
Latin squares, strongly regular graphs, difference schemes), classifies
them by the eigenvalues of NN^T, and re-derives the bundled parameter
tables with independent brute-force verification.
"""

from .binmat import BinaryMatrix, IntMatrix, read_matrix, write_matrix
from .design import (
    Design,
    DesignClass,
    DesignTag,
    RDParams,
    Reduction,
    Spectrum,
    check_params,
    classify,
    complement_design,
    design_from_matrix,
    params_from_matrix,
    read_design,
    spectrum,
    transpose_array,
    verify_design,
    write_design,
)
from .algebra import (
    DifferenceScheme,
    FiniteField,
    MolsSet,
    SkewHadamardDesign,
    SrgGraph,
    ds_compose,
    ds_field,
    ds_search,
    ds_sylvester,
    gffield,
    mols,
    paley_srg,
    skew_hadamard_design,
)
from .construct import run_recipe
from .analyze import (
    EfficiencyReport,
    ResolutionCertificate,
    alpha_resolvability,
    efficiency,
    global_decomposition_check,
    self_dual_check,
)
from .search import Candidate, diophantine_lambdas, enumerate_candidates

__all__ = [
    "BinaryMatrix", "IntMatrix", "read_matrix", "write_matrix",
    "Design", "DesignClass", "DesignTag", "RDParams", "Reduction", "Spectrum",
    "check_params", "classify", "complement_design", "design_from_matrix",
    "params_from_matrix", "read_design", "spectrum", "transpose_array",
    "verify_design", "write_design",
    "DifferenceScheme", "FiniteField", "MolsSet", "SkewHadamardDesign",
    "SrgGraph", "ds_compose", "ds_field", "ds_search", "ds_sylvester",
    "gffield", "mols", "paley_srg", "skew_hadamard_design",
    "run_recipe",
    "EfficiencyReport", "ResolutionCertificate", "alpha_resolvability",
    "efficiency", "global_decomposition_check", "self_dual_check",
    "Candidate", "diophantine_lambdas", "enumerate_candidates",
]
