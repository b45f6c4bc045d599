"""Universal algorithms over pluggable semirings.

One generic implementation of linear algebra, the algebraic path problem,
fixed-point solving, interval propagation and idempotent calculus; the
algebraic structure (max-plus, min-plus, max-min, boolean, the real field,
deformed additions, interval lifts) is swapped in through a descriptor.
"""

from .errors import (
    CarrierError,
    ClosureUndefinedError,
    DimensionError,
    ParseError,
    SemialgError,
    SemiringError,
    StabilizationError,
)
from .graphs import (
    WeightedDigraph,
    brute_force_star,
    from_matrix,
    graph_from_edges,
    invert_via_star,
    max_profit,
    max_width_paths,
    path_weight,
    shortest_paths,
    to_matrix,
)
from .idemcalc import (
    GridFunction,
    Kernel,
    MonomialSum,
    NewtonSet,
    add_functions,
    apply_integral_operator,
    dequant_sample,
    idem_integral,
    kernel_from_function,
    legendre,
    monomial_sum,
    newton_add,
    newton_mul,
    newton_points,
    newton_set,
    poly_product,
    poly_sum,
    quadratic_cost_kernel,
    scalar_product,
    scale_function,
    sup_convolution,
    support_function,
)
from .interval import (
    Interval,
    interval_bellman,
    iv_contains,
    lift_matrix,
    lift_semiring,
    make_interval,
    matrix_bounds,
    point_interval,
)
from .matrix import (
    LdmTriple,
    Matrix,
    OpCounters,
    back_subst,
    bellman_solve,
    diag_closure_solve,
    forward_subst,
    identity,
    ldm_factorize,
    ldm_solve,
    mat_add,
    mat_closure,
    mat_leq,
    mat_mul,
    mat_pow,
    zeros,
)
from .semiring import INF, NEG_INF, SEMIRING_NAMES, Carrier, Semiring, make_semiring

__version__ = "0.1.0"

__all__ = [
    "CarrierError",
    "ClosureUndefinedError",
    "DimensionError",
    "ParseError",
    "SemialgError",
    "SemiringError",
    "StabilizationError",
    "WeightedDigraph",
    "brute_force_star",
    "from_matrix",
    "graph_from_edges",
    "invert_via_star",
    "max_profit",
    "max_width_paths",
    "path_weight",
    "shortest_paths",
    "to_matrix",
    "GridFunction",
    "Kernel",
    "MonomialSum",
    "NewtonSet",
    "add_functions",
    "apply_integral_operator",
    "dequant_sample",
    "idem_integral",
    "kernel_from_function",
    "legendre",
    "monomial_sum",
    "newton_add",
    "newton_mul",
    "newton_points",
    "newton_set",
    "poly_product",
    "poly_sum",
    "quadratic_cost_kernel",
    "scalar_product",
    "scale_function",
    "sup_convolution",
    "support_function",
    "Interval",
    "interval_bellman",
    "iv_contains",
    "lift_matrix",
    "lift_semiring",
    "make_interval",
    "matrix_bounds",
    "point_interval",
    "LdmTriple",
    "Matrix",
    "OpCounters",
    "back_subst",
    "bellman_solve",
    "diag_closure_solve",
    "forward_subst",
    "identity",
    "ldm_factorize",
    "ldm_solve",
    "mat_add",
    "mat_closure",
    "mat_leq",
    "mat_mul",
    "mat_pow",
    "zeros",
    "INF",
    "NEG_INF",
    "SEMIRING_NAMES",
    "Carrier",
    "Semiring",
    "make_semiring",
    "__version__",
]
