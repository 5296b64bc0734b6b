"""Finite-N largest-eigenvalue laws of the Gaussian ensembles and their
Tracy-Widom limits, computed via Fredholm determinants, turning-point
wave asymptotics, and Monte Carlo sampling."""

__version__ = "0.1.0"

from ._errors import AccuracyError
from .specfun import (
    CenteringSpec,
    WaveContext,
    airy_ai,
    airy_ai_prime,
    centering,
    oscillator_phi,
    oscillator_phi_prime,
    wave_context,
)
from .lg import (
    RateRow,
    ShiftedWaveSpec,
    lg_c_N,
    lg_phi_approx,
    lg_r,
    lg_zeta,
    lg_zeta_dot,
    rate_scan,
    shifted_wave,
)
from .kernels import (
    MatrixKernel2,
    ScalarKernel,
    TailIntegrator,
    airy_kernel,
    airy_kernel_op,
    diamond,
    eps_psi,
    goe_matrix_kernel_finite,
    goe_matrix_kernel_limit,
    goe_scalar_kernel,
    gue_kernel,
    gue_kernel_op,
    rescaled_gue_kernel,
    rescaled_gue_kernel_op,
)
from .fredholm import (
    CdfResult,
    DiscretizedOperator,
    QuadratureRule,
    discretize_block2,
    discretize_scalar,
    finite_cdf,
    finite_rule,
    fredholm_det_block2,
    fredholm_det_scalar,
    gauss_legendre,
    semi_infinite_rule,
    tw_cdf,
    tw_quantile,
)
from .ensembles import (
    Histogram,
    McEstimate,
    SampleConfig,
    largest_eigenvalue_sample,
    mc_cdf,
    mc_density,
)

__all__ = [
    "AccuracyError",
    "CenteringSpec",
    "WaveContext",
    "airy_ai",
    "airy_ai_prime",
    "centering",
    "oscillator_phi",
    "oscillator_phi_prime",
    "wave_context",
    "RateRow",
    "ShiftedWaveSpec",
    "lg_c_N",
    "lg_phi_approx",
    "lg_r",
    "lg_zeta",
    "lg_zeta_dot",
    "rate_scan",
    "shifted_wave",
    "MatrixKernel2",
    "ScalarKernel",
    "TailIntegrator",
    "airy_kernel",
    "airy_kernel_op",
    "diamond",
    "eps_psi",
    "goe_matrix_kernel_finite",
    "goe_matrix_kernel_limit",
    "goe_scalar_kernel",
    "gue_kernel",
    "gue_kernel_op",
    "rescaled_gue_kernel",
    "rescaled_gue_kernel_op",
    "CdfResult",
    "DiscretizedOperator",
    "QuadratureRule",
    "discretize_block2",
    "discretize_scalar",
    "finite_cdf",
    "finite_rule",
    "fredholm_det_block2",
    "fredholm_det_scalar",
    "gauss_legendre",
    "semi_infinite_rule",
    "tw_cdf",
    "tw_quantile",
    "Histogram",
    "McEstimate",
    "SampleConfig",
    "largest_eigenvalue_sample",
    "mc_cdf",
    "mc_density",
]
