"""Witt vectors, Λ-rings and combinatorial F₁-geometry in exact arithmetic.

Subpackages: :mod:`wittlambda.algebra` (polynomials, presented rings, finite
fields), :mod:`wittlambda.witt`, :mod:`wittlambda.lambda_core`,
:mod:`wittlambda.f1`, :mod:`wittlambda.function_field`, and the
command line in :mod:`wittlambda.cli`.
"""

from .algebra import GF, ZZ, IntegersMod, Poly, RingPresentation, enumerate_points, exact_div, normal_form
from .errors import (
    BudgetExceeded,
    MismatchedTruncation,
    NonIntegralDivision,
    NotIrreducible,
    NotLambdaMap,
    ParseError,
    PosetTooLarge,
    TorsionBase,
    UndeclaredPrime,
    WittLambdaError,
)
from .report import Report
from .witt import (
    GhostVector,
    TruncationSet,
    WittVector,
    frobenius,
    ghost,
    ptypical,
    ptypical_ring_order,
    teichmuller,
    universal_prod_poly,
    universal_sum_poly,
    verschiebung,
    witt_add,
    witt_mul,
)

__version__ = "0.1.0"
