"""Exact arithmetic: polynomials, presented rings and finite fields."""

from .finite_field import GF, FiniteField, FiniteFieldElem
from .parse import parse_poly
from .poly import Poly, format_poly
from .presentation import (
    RingPresentation,
    base_ring_from_spec,
    enumerate_points,
    exact_div,
    normal_form,
    polynomial_ring,
)
from .rings import ZZ, IntegerRing, IntegersMod, Ring, divisors, is_prime, prime_factors, primes_up_to
