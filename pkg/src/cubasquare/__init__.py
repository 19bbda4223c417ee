"""Minimal and near-minimal cubature rules, Padua interpolation, and
Hankel-system rule discovery on the square [-1, 1]^2."""

from .basis2d import (
    KernelStarSpec,
    OrthoBasis2D,
    ThreeTermCoefficients,
    basis_for,
    generalized_basis,
    kernel_K,
    kernel_K_star,
    kernel_matrix,
    kernel_star_matrix,
    p_general,
    product_basis,
    q_m_polynomial,
    star_spec_cheb1,
    star_spec_gaussian,
    star_spec_gencheb,
    three_term,
)
from .cubature import (
    CubatureError,
    CubatureRule,
    ExactnessReport,
    LowerBounds,
    exactness_check,
    lower_bounds,
    rule_from_json,
    rule_to_json,
    weights_from_kernel,
    weights_from_vandermonde,
)
from .interp import (
    Interpolant,
    convergence_report,
    family_rule,
    interpolate_kernel,
    interpolate_padua,
    lebesgue_constant,
)
from .nodes import (
    NodeSet,
    gauss_u_nodes,
    gencheb_nodes,
    lissajous_curve_point,
    min_t_nodes_even,
    moeller_count,
    near_min_t_nodes_odd,
    padua_points,
    vanishing_polynomials,
    vanishing_residual,
)
from .univariate import (
    JacobiAngleGrid,
    eval_chebyshev_t,
    eval_chebyshev_u,
    eval_gegenbauer,
    eval_jacobi_normalized,
    gauss_rule_1d,
    jacobi_angle_grid,
)
from .weights import (
    WeightSpec,
    cheb1,
    cheb2,
    constant,
    gegenbauer_product,
    gencheb,
    is_centrally_symmetric,
    jacobi_product,
    mass,
    moment,
    parse_weight,
    weight_string,
)

__version__ = "0.1.0"
