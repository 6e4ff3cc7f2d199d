"""radlap: radial fractional Laplacians, subharmonicity criteria, and
the hypergeometric verification chain for iterated Hessian-type
inequalities.

Layers, bottom up: quad (certified quadrature), hypergeom (Gauss 2F1),
kernel (the angular kernels H and K and the radial weight), fraclap
(the operator on radial profiles), subharm (pointwise criteria and
mollification), hessianx (the exact-rational inequality pipeline),
cli (the command-line surface).
"""

from .errors import (
    DivergentExponent,
    DivergentTail,
    DomainError,
    EvaluationError,
    InfiniteDerivative,
    IntegrabilityError,
    MissingDerivative,
    NonConvergence,
    NonFiniteEvaluation,
    PoleError,
    PreconditionError,
    RadlapError,
    SingularityError,
)
from .fraclap import (
    FracLapResult,
    RadialProfile,
    bracket,
    fbeta_fraclap_closed_form,
    fbeta_profile,
    fraclap_derivative,
    fraclap_radial,
    fraclap_radial_report,
    normalization_constant,
    power_profile,
    truncated_power_profile,
)
from .hessianx import (
    HessianCase,
    TangentReport,
    bound_g,
    check_fg_inequality,
    check_g_concavity,
    check_iterated_condition,
    check_log_convexity,
    f_prime_at_1,
    g_prime_at_1,
    make_case,
    ratio_f,
    tangent_report,
)
from .hypergeom import (
    DEFAULT_POLICY,
    EvalPolicy,
    HyperParams,
    f21,
    f21_at_one,
    f21_derivative,
    f21_euler_integral,
    f21_pfaff,
    f21_with_complement,
    gamma,
    log_gamma,
)
from .kernel import (
    FracParams,
    alpha_n,
    kernel_H,
    kernel_K,
    kernel_h_at_one,
    kernel_weight,
    sphere_surface_area,
)
from .quad import (
    QuadResult,
    QuadSpec,
    integrate_endpoint_singular,
    integrate_finite,
    integrate_semi_infinite,
    tanh_sinh,
)
from .subharm import (
    ConditionGrid,
    ConditionReport,
    check_cond1,
    check_cond2,
    check_equivalence_1_7_vs_1_8,
    check_kconvex_radial,
    check_max_principle,
    kconvex_order_s,
    mellin_mollify,
)

__version__ = "0.1.0"
