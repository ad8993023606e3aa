from .structure import (
    LambdaStructure,
    apply_psi,
    broken_structure,
    chebychev_structure,
    cuspidal_structure,
    dickson,
    nodal_structure,
    toric_structure,
    verify_commutation,
    verify_frobenius_lift,
    verify_structure,
    verify_well_defined,
)
from .subrings import (
    Embedding,
    Equalizer,
    Functional,
    condition_kernel,
    cuspidal_conditions,
    equalizer_structure,
    fake_conditions,
    laurent_line,
    nodal_conditions,
    sublambda_check,
)
from .newton import SymFun, elementary_in_p, lambda_from_psi, newton_convert, power_sums_in_e
