"""rfjlab: a numerical laboratory for random Fourier-Jacobi series driven by
symmetric alpha-stable processes."""

from .catalog import CatalogEntry, catalog_ids, in_weighted_space, resolve
from .integrals import (
    RandomCoefficientSet,
    basis_rows,
    coefficient_set,
    ito_stieltjes,
    random_fj_coefficient,
)
from .jacobi import (
    GateReport,
    JacobiParams,
    QuadratureRule,
    WeightedSpaceParams,
    check_parameter_gate,
    gauss_jacobi,
    jacobi_eval,
    norm_constant,
    orthonormal_eval,
    orthonormal_table,
    weight,
    weighted_sup_norm,
)
from .lab import (
    CHUNK,
    DEFAULT_SEED,
    ConvergenceReport,
    ExperimentConfig,
    GateError,
    Lemma2Terms,
    LemmaBoundsReport,
    UnsupportedRegimeError,
    WeakContinuityResult,
    cesaro_summability_experiment,
    integrand_alpha_norm,
    lemma1_rhs,
    lemma2_rhs,
    lemma_bounds,
    mean_convergence_experiment,
    reference_integral,
    tail_scaling_experiment,
    weak_continuity_experiment,
    weak_continuity_profile,
)
from .series import (
    CoefficientSet,
    cesaro_mean,
    fj_coefficients,
    kernel_partial,
    partial_sum,
    random_theta_sum,
    theta_sum,
)
from .stable import (
    GridSpec,
    StableIncrements,
    sample_increments,
    sample_sas,
    trial_rng,
    validate_alpha,
)
from .summation import (
    ConditionReport,
    ConditionVerdict,
    SummationMatrix,
    check_conditions,
    from_function,
    make_cesaro,
    make_identity,
    make_zero,
)

__version__ = "0.1.0"
