"""Rational approximation from truncated power series.

Four solvers for the [m+k/m] approximation problem: the direct Toeplitz
solve (``dm_denominator``), the SVD null-vector variant
(``svd_denominator``), the matrix-pencil solver (``pm1``) whose
eigenvalues are the poles directly, and its filtered form (``pm2``)
that detects and removes spurious poles caused by coefficient noise or
over-parameterization.  Helpers cover evaluation, root taxonomy, and
two reproducible experiment harnesses.
"""

from .approximant import (
    ErrorSweep,
    error_sweep,
    eval_pole_residue,
    eval_rational,
    poles_and_zeros,
    unit_disk_mesh,
)
from .baseline import (
    Conformation,
    RationalApproximant,
    dm_denominator,
    numerator_from_denominator,
    svd_denominator,
)
from .classify import RootTaxonomy, classify_roots
from .errors import (
    AllZero,
    ApproximationError,
    Collapse,
    ConvergenceFailure,
    DegenerateError,
    DuplicatePole,
    InsufficientCoefficients,
    NonFinite,
    NonTerminating,
    PoleHit,
    RankDeficient,
    SingularVandermonde,
    ZeroPole,
)
from .experiments import (
    ExperimentConfig,
    approximate_series,
    pruned_square_refit,
    run_geometric_noise,
    run_log_branch,
)
from .filtering import (
    FilterParams,
    FilterIteration,
    Pm2Result,
    SpuriousPoleReport,
    count_filtered,
    pm2,
    reduced_poles,
)
from .numerics import SvdResult, eigenvalues, polynomial_roots, qr_solve, svd
from .pencil import (
    HankelBlocks,
    Pm1Result,
    PoleResidueForm,
    build_blocks,
    combined_window,
    pm1,
    pm1_poles,
    pm1_residues,
    residue_system,
    to_rational,
)
from .series import (
    PowerSeries,
    eval_truncated,
    gen_from_poles,
    gen_geometric_noisy,
    gen_log_series,
    gen_quadratic_eps,
)

__version__ = "0.1.0"

__all__ = [
    "ApproximationError",
    "ZeroPole",
    "NonFinite",
    "ConvergenceFailure",
    "RankDeficient",
    "DegenerateError",
    "SingularVandermonde",
    "DuplicatePole",
    "InsufficientCoefficients",
    "PoleHit",
    "AllZero",
    "Collapse",
    "NonTerminating",
    "PowerSeries",
    "eval_truncated",
    "gen_geometric_noisy",
    "gen_log_series",
    "gen_from_poles",
    "gen_quadratic_eps",
    "SvdResult",
    "svd",
    "eigenvalues",
    "qr_solve",
    "polynomial_roots",
    "Conformation",
    "RationalApproximant",
    "dm_denominator",
    "svd_denominator",
    "numerator_from_denominator",
    "HankelBlocks",
    "PoleResidueForm",
    "Pm1Result",
    "combined_window",
    "build_blocks",
    "pm1_poles",
    "pm1_residues",
    "residue_system",
    "to_rational",
    "pm1",
    "FilterParams",
    "FilterIteration",
    "SpuriousPoleReport",
    "Pm2Result",
    "count_filtered",
    "reduced_poles",
    "pm2",
    "ErrorSweep",
    "eval_rational",
    "eval_pole_residue",
    "poles_and_zeros",
    "unit_disk_mesh",
    "error_sweep",
    "RootTaxonomy",
    "classify_roots",
    "ExperimentConfig",
    "approximate_series",
    "run_geometric_noise",
    "run_log_branch",
    "pruned_square_refit",
]
