import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import polys

from wittlambda.algebra import (
    GF,
    ZZ,
    IntegersMod,
    Poly,
    RingPresentation,
    enumerate_points,
    exact_div,
    normal_form,
    parse_poly,
)
from wittlambda.errors import BudgetExceeded, NonIntegralDivision, ParseError, PresentationError
from wittlambda.f1 import affine_space_fan, chart_presentation, product_fan, projective_space_fan


def x():
    return Poly.var("x")


class TestNormalForm:
    def test_idempotent_quotient(self):
        R = RingPresentation(ZZ, ["x"], ["x^2 - x"])
        assert normal_form(x() ** 3, R) == x()

    def test_cyclic(self):
        R = RingPresentation(ZZ, ["x"], ["x^4 - 1"])
        assert normal_form(x() ** 5, R) == x()

    def test_laurent_cancellation(self):
        T = RingPresentation(ZZ, ["t"], [], laurent=["t"])
        assert T.parse("t*t^-1") == T.one()

    def test_normal_form_is_idempotent(self):
        R = RingPresentation(ZZ, ["x", "y"], ["x^3 - 1", "y^2 - y"])
        a = R.parse("x^7*y^2 + 3*y^5 - x")
        assert normal_form(a, R) == normal_form(normal_form(a, R), R)

    def test_relation_reduces_to_zero(self):
        R = RingPresentation(ZZ, ["s", "v"], ["v^2 - s + 2 - s^-1"], laurent=["s"])
        assert R.is_zero(R.parse("v^2 - s + 2 - s^-1"))

    def test_non_confluent_set_rejected(self):
        # two different rewrites of x^2*y with no common reduct
        with pytest.raises(PresentationError):
            RingPresentation(ZZ, ["x", "y"], ["x^2 - y", "x*y - 2"])


class TestExactDiv:
    def test_simple(self):
        assert exact_div(2 * x() ** 2 + 4, 2) == x() ** 2 + 2

    def test_witt_style(self):
        v = ("x", "y", "z")
        p = parse_poly("x^2 + y^2 - (x+y)^2 + 2*z", variables=v)
        assert exact_div(p, 2) == parse_poly("z - x*y", variables=v)

    def test_non_integral(self):
        with pytest.raises(NonIntegralDivision):
            exact_div(x() ** 3 + 3 * x(), 2)


class TestEnumeratePoints:
    def test_idempotents_over_f3(self):
        R = RingPresentation(ZZ, ["x"], ["x^2 - x"])
        assert enumerate_points(R, GF(3)) == [(0,), (1,)]

    def test_coordinate_cross(self):
        R = RingPresentation(ZZ, ["x", "y"], ["x*y"])
        assert enumerate_points(R, GF(2)) == [(0, 0), (0, 1), (1, 0)]

    def test_square_roots_of_minus_one(self):
        # brute force over F_5: 2^2 = 3^2 = 4 = -1
        R = RingPresentation(ZZ, ["x"], ["x^2 + 1"])
        assert enumerate_points(R, GF(5)) == [(2,), (3,)]

    def test_budget(self):
        R = RingPresentation(ZZ, ["a", "b", "c"], [])
        with pytest.raises(BudgetExceeded):
            enumerate_points(R, GF(5), budget=100)

    def test_over_integers_mod(self):
        R = RingPresentation(ZZ, ["x"], ["x^2 - 1"])
        assert enumerate_points(R, IntegersMod(8)) == [(1,), (3,), (5,), (7,)]


@pytest.mark.parametrize(
    "fan",
    [affine_space_fan(1), affine_space_fan(2), projective_space_fan(1), projective_space_fan(2),
     product_fan(projective_space_fan(1), projective_space_fan(1))],
    ids=["A1", "A2", "P1", "P2", "P1xP1"],
)
@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_chart_points_match_orbit_count(fan, q):
    for sigma in fan.maximal_cones():
        pres = chart_presentation(fan, sigma)
        orbit = sum((q - 1) ** (fan.dim - fan.cone_dim(tau)) for tau in fan.cones if tau <= sigma)
        assert len(enumerate_points(pres, GF(q))) == orbit


class TestFiniteField:
    @pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 16, 25, 27])
    def test_multiplicative_group_cyclic_order(self, q):
        F = GF(q)
        for a in F.units():
            assert F.pow(a, q - 1) == F.one()

    def test_registry_is_stable(self):
        assert GF(16) is GF(16)
        assert GF(16).modulus == GF(16).modulus

    def test_parse_generator(self):
        F = GF(4)
        w = F.parse("w")
        assert F.add(F.mul(w, w), F.add(w, F.one())) == F.zero()

    @given(st.integers(0, 15), st.integers(0, 15), st.integers(0, 15))
    def test_field_axioms_gf16(self, i, j, k):
        F = GF(16)
        a, b, c = (F.elements()[n] for n in (i, j, k))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        if not F.is_zero(a):
            assert F.mul(a, F.inverse(a)) == F.one()


class TestParse:
    def test_implicit_multiplication_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_poly("2x + 1")
        assert exc.value.column is not None

    def test_big_integers(self):
        p = parse_poly("123456789012345678901234567890*x")
        assert p.coefficient({"x": 1}) == 123456789012345678901234567890

    def test_negative_exponent_needs_laurent(self):
        with pytest.raises(ParseError):
            parse_poly("x^-1", variables=["x"], laurent=[])


# -- properties ---------------------------------------------------------------------

XY = ("x", "y")


@given(polys(XY), polys(XY), polys(XY))
def test_poly_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Poly.zero(XY)


@given(polys(("t",), laurent=("t",)), polys(("t",), laurent=("t",)))
def test_laurent_ring_axioms(a, b):
    assert (a + b) * b == a * b + b * b
    assert a * b == b * a


QUOTIENTS = [
    RingPresentation(ZZ, ["x", "y"], ["x*y"]),
    RingPresentation(ZZ, ["x", "y"], ["x^3 - 1", "y^2 - y"]),
    RingPresentation(ZZ, ["x", "y"], ["x^2 - y"]),
    RingPresentation(ZZ, ["x", "y"], ["x*y - 1"]),
    RingPresentation(GF(3), ["x", "y"], ["x^2 + 1"]),
]


@pytest.mark.parametrize("R", QUOTIENTS, ids=str)
@given(a=polys(XY), b=polys(XY))
def test_normal_form_is_a_homomorphism(R, a, b):
    nf = lambda p: normal_form(p, R)
    assert nf(a * b) == nf(nf(a) * nf(b))
    assert nf(a + b) == nf(nf(a) + nf(b))


@given(polys(XY, max_exp=2), st.integers(-3, 3), st.integers(-3, 3))
def test_evaluation_is_a_homomorphism(a, u, v):
    b = a * a + 1
    assert (a * b).evaluate([u, v]) == a.evaluate([u, v]) * b.evaluate([u, v])
