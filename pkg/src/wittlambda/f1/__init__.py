from .fan import (
    ComplementedSubspace,
    Fan,
    affine_space_fan,
    complemented_closed_subspaces,
    complemented_f1_points,
    count_points_Fq,
    count_points_Fq_bruteforce,
    euler_characteristic,
    hodge_poly_toric,
    product_fan,
    projective_space_fan,
)
from .gln import (
    det_psi2_compat_check,
    f1_linear_functionals,
    gln_f1_points,
    gln_points_Fq,
    lambda2_of_axis_sum,
    lambda2_vanishes,
    mn_f1_points,
    mn_points_Fq,
)
from .fan import chart_presentation, is_upset
from .gln import axis_count_formula, det, gln_count_formula, monomial_matrix
from .monoid import F1Point, MonoidPresentation, Zeta, cyclic_monoid, f1_points_affine, f1_points_monoid, free_monoid
