"""
Potential functions of Gelfand-Cetlin torus fibers and their critical points
"""

from gelfand_cetlin_cli.potential.laurent import (
    LaurentPotential,
    LaurentTerm,
    NovikovScalar,
    build_potential,
    evaluate,
    log_gradient,
    log_hessian,
    relative_gradient,
    render_potential,
    term_values,
)
from gelfand_cetlin_cli.potential.closed_forms import (
    closed_form_critical_points,
    label_branch,
    valuation_discrepancies,
)
from gelfand_cetlin_cli.potential.solver import (
    CriticalPoint,
    count_vs_cohomology,
    critical_points,
    critical_valuation,
    hessian_nondegenerate,
    newton_origin_interior,
    non_displaceable_fiber,
    positive_real_minimum,
    with_valuations,
)
