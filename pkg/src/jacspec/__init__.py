"""Spectral computations and inverse-problem checks for finite Jacobi and
discrete Schrodinger matrices, with constant-boundary and corner-coupled
(Floquet) variants."""

from .charpoly import (
    BlockRange,
    Poly,
    block_det,
    charpoly_floquet,
    charpoly_jacobi,
    evaluate,
    leading_coefficients,
)
from .inverse import (
    CandidatePair,
    OracleSolution,
    VerificationReport,
    amb3_candidates,
    amb3_solve,
    brute_force_isospectral_search,
    eliminate_spurious,
    recover_floquet_angle,
    verify_amb_dirichlet,
    verify_counterexample,
    verify_floquet_uniqueness,
    verify_known_boundary,
)
from .operators import (
    BoundaryPerturbation,
    FloquetMatrix,
    JacobiMatrix,
    apply_boundary,
    make_floquet,
    make_free,
    make_schrodinger,
)
from .spectra import (
    ConvergenceError,
    EigenPair,
    PerturbationPath,
    Spectrum,
    eigenvalue_count_below,
    eigenvalue_derivative,
    eigenvalues_floquet,
    eigenvalues_jacobi,
    eigenvector,
    interlace_check,
    spectra_match,
)

__version__ = "0.1.0"

__all__ = [
    "BlockRange",
    "BoundaryPerturbation",
    "CandidatePair",
    "ConvergenceError",
    "EigenPair",
    "FloquetMatrix",
    "JacobiMatrix",
    "OracleSolution",
    "PerturbationPath",
    "Poly",
    "Spectrum",
    "VerificationReport",
    "amb3_candidates",
    "amb3_solve",
    "apply_boundary",
    "block_det",
    "brute_force_isospectral_search",
    "charpoly_floquet",
    "charpoly_jacobi",
    "eigenvalue_count_below",
    "eigenvalue_derivative",
    "eigenvalues_floquet",
    "eigenvalues_jacobi",
    "eigenvector",
    "eliminate_spurious",
    "evaluate",
    "interlace_check",
    "leading_coefficients",
    "make_floquet",
    "make_free",
    "make_schrodinger",
    "recover_floquet_angle",
    "spectra_match",
    "verify_amb_dirichlet",
    "verify_counterexample",
    "verify_floquet_uniqueness",
    "verify_known_boundary",
    "__version__",
]
