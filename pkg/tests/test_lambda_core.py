from itertools import combinations

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from wittlambda.algebra import GF, ZZ, Poly, RingPresentation, parse_poly
from wittlambda.algebra.rings import primes_up_to
from wittlambda.errors import NotLambdaMap, TorsionBase, UndeclaredPrime
from wittlambda.f1 import cyclic_monoid, free_monoid
from wittlambda.lambda_core import (
    LambdaStructure,
    SymFun,
    apply_psi,
    broken_structure,
    chebychev_structure,
    condition_kernel,
    cuspidal_conditions,
    cuspidal_structure,
    dickson,
    elementary_in_p,
    equalizer_structure,
    fake_conditions,
    lambda_from_psi,
    laurent_line,
    newton_convert,
    nodal_conditions,
    nodal_structure,
    power_sums_in_e,
    sublambda_check,
    toric_structure,
    verify_commutation,
    verify_frobenius_lift,
    verify_structure,
)

PRIMES13 = primes_up_to(13)


def px(text):
    return parse_poly(text, variables=("x",))


def sympy_dickson(n):
    # D_n(x) = 2*T_n(x/2), with T_n the Chebyshev polynomial of the first kind
    x = sympy.Symbol("x")
    return sympy.expand(2 * sympy.chebyshevt(n, x / 2))


def as_sympy(p):
    return sympy.expand(sympy.sympify(str(p).replace("^", "**")))


class TestApplyPsi:
    def test_toric_composite(self):
        L = toric_structure(free_monoid(1, 0))
        assert apply_psi(L, 6, "x1") == Poly.var("x1") ** 6

    def test_chebychev_two(self):
        assert apply_psi(chebychev_structure(), 2, "x") == px("x^2 - 2")

    def test_chebychev_six(self):
        expected = px("(x^3 - 3*x)^2 - 2")
        L = chebychev_structure()
        assert apply_psi(L, 6, "x") == expected
        assert apply_psi(L, 2, apply_psi(L, 3, "x")) == expected
        assert expected == dickson(6)

    def test_psi_one_is_identity(self):
        assert apply_psi(chebychev_structure(), 1, "x^3 + 1") == px("x^3 + 1")

    def test_undeclared_prime(self):
        with pytest.raises(UndeclaredPrime):
            apply_psi(broken_structure(), 3, "x")


class TestFrobeniusLift:
    def test_chebychev_three(self):
        assert verify_frobenius_lift(chebychev_structure(), 3).ok

    def test_toric_laurent_five(self):
        L = toric_structure(free_monoid(0, 1))
        assert verify_frobenius_lift(L, 5).ok

    def test_broken_fails_with_witness(self):
        rep = verify_frobenius_lift(broken_structure(), 2)
        assert not rep.ok
        assert rep.failures[0].witness == "psi_2(x) - x^2 = 1 (mod 2)"

    def test_torsion_base_skipped(self):
        L = LambdaStructure(RingPresentation(GF(3), ["x"]), default="toric")
        rep = verify_frobenius_lift(L, 3)
        assert rep.counts() == {"pass": 0, "fail": 0, "skip": 1}


class TestBuiltins:
    @pytest.mark.parametrize("r,s", [(r, s) for r in range(4) for s in range(4) if 0 < r + s <= 3])
    def test_toric(self, r, s):
        L = toric_structure(free_monoid(r, s))
        assert verify_structure(L, PRIMES13).ok

    @pytest.mark.parametrize("n", range(2, 7))
    def test_roots_of_unity(self, n):
        assert verify_structure(toric_structure(cyclic_monoid(n)), PRIMES13).ok

    @pytest.mark.parametrize("build", [chebychev_structure, nodal_structure, cuspidal_structure])
    def test_singular_and_chebychev(self, build):
        rep = verify_structure(build(), PRIMES13)
        assert rep.ok, rep.failures

    def test_nodal_psi2_pulls_back(self):
        L = nodal_structure()
        # psi_2(v) = t^2 - t^-2 = v*(t + t^-1), and (t + t^-1)^2 = s + 2 + s^-1 = v^2 + 4
        img = apply_psi(L, 2, "v")
        emb = L.embedding
        assert emb.push(img) == parse_poly("t^2 - t^-2", variables=("t",), laurent=("t",))

    def test_cuspidal_psi_images_in_subring(self):
        L = cuspidal_structure()
        for p in (2, 3, 5):
            for g in ("x", "y"):
                pushed = L.embedding.push(apply_psi(L, p, g))
                direct = L.embedding.toric_psi(p, L.embedding.push(L.ring.gen(g)))
                assert pushed == direct

    def test_commutation_of_declared(self):
        assert verify_commutation(chebychev_structure(), 2, 3).ok


class TestChebychev:
    @pytest.mark.parametrize(
        "p,text", [(2, "x^2 - 2"), (3, "x^3 - 3*x"), (5, "x^5 - 5*x^3 + 5*x")]
    )
    def test_displayed_polynomials(self, p, text):
        assert chebychev_structure().psi[p]["x"] == px(text)

    def test_d4_on_t_plus_inverse(self):
        t = ("t",)
        u = parse_poly("t + t^-1", variables=t, laurent=t)
        assert dickson(4).subs({"x": u}) == parse_poly("t^4 + t^-4", variables=t, laurent=t)

    @pytest.mark.parametrize("n", range(0, 21))
    def test_against_chebyshev_t(self, n):
        assert as_sympy(dickson(n)) == sympy_dickson(n)

    @pytest.mark.parametrize("m,n", [(m, n) for m in range(1, 21) for n in range(1, 21) if m * n <= 20])
    def test_composition(self, m, n):
        assert dickson(m).subs({"x": dickson(n)}) == dickson(m * n)

    def test_default_rule_beyond_declared(self):
        assert apply_psi(chebychev_structure(), 7, "x") == dickson(7)


class TestLambdaFromPsi:
    def test_toric_generator_vanishes(self):
        L = toric_structure(free_monoid(1, 0))
        for n in range(2, 7):
            assert lambda_from_psi(L, n, "x1").is_zero()

    def test_lambda_one(self):
        L = chebychev_structure()
        assert lambda_from_psi(L, 1, "x^2 + 3") == px("x^2 + 3")

    def test_lambda_two_of_two_x(self):
        L = toric_structure(free_monoid(1, 0))
        assert lambda_from_psi(L, 2, "2*x1") == parse_poly("x1^2", variables=("x1",))

    def test_addition_law(self):
        L = toric_structure(free_monoid(2, 0))
        a, b = "x1", "x2"
        lhs = lambda_from_psi(L, 2, f"{a} + {b}")
        rhs = lambda_from_psi(L, 2, a) + lambda_from_psi(L, 2, b) + L.ring.parse(f"{a}*{b}")
        assert L.ring.normal_form(lhs - rhs).is_zero()

    def test_chebychev_lambda_two(self):
        # (x*x - (x^2 - 2)) / 2 = 1
        assert lambda_from_psi(chebychev_structure(), 2, "x") == px("1")

    def test_torsion_refused(self):
        L = LambdaStructure(RingPresentation(GF(2), ["x"]), default="toric")
        with pytest.raises(TorsionBase):
            lambda_from_psi(L, 2, "x")


class TestNewton:
    def test_low_degrees(self):
        names = ("e1", "e2", "e3")
        p = power_sums_in_e(3)
        assert p[0] == parse_poly("e1", variables=names)
        assert p[1] == parse_poly("e1^2 - 2*e2", variables=names)
        assert p[2] == parse_poly("e1^3 - 3*e1*e2 + 3*e3", variables=names)

    def test_against_sympy_symmetric_polys(self):
        # evaluate at 5 variables: p_n(z) must equal the e-expression at e_i(z)
        z = sympy.symbols("z1:6")
        N = 5
        e_vals = [sum(sympy.Mul(*c) for c in combinations(z, k)) for k in range(1, N + 1)]
        for n, expr in enumerate(power_sums_in_e(N), 1):
            sub = as_sympy(expr).subs({sympy.Symbol(f"e{i}"): e_vals[i - 1] for i in range(1, N + 1)},
                                      simultaneous=True)
            assert sympy.expand(sub - sum(v**n for v in z)) == 0

    def test_degree_bound_enforced(self):
        with pytest.raises(ValueError):
            SymFun(parse_poly("e1^3"), "e", 2)

    def test_elementary_two(self):
        e2 = elementary_in_p(2)[1]
        assert 2 * e2 == parse_poly("p1^2 - p2", variables=("p1", "p2"))


def _monomials(N):
    """Exponent vectors (k_1..k_N) with sum i*k_i <= N."""
    out = [()]
    for i in range(1, N + 1):
        out = [m + (k,) for m in out for k in range(0, (N - sum(j * x for j, x in enumerate(m, 1))) // i + 1)]
    return out


@pytest.mark.parametrize("basis,other", [("e", "p"), ("p", "e")])
def test_newton_round_trip_degree_ten(basis, other):
    N = 10
    names = tuple(f"{basis}{i}" for i in range(1, N + 1))
    mons = _monomials(N)
    assert len(mons) == sum(int(sympy.partition(k)) for k in range(N + 1))
    for m in mons:
        f = SymFun(Poly({m: 1}, variables=names), basis, N)
        assert newton_convert(newton_convert(f, other), basis) == f


class TestSubrings:
    def test_nodal_closed(self):
        rep = sublambda_check(LambdaStructure(laurent_line(), default="toric"), nodal_conditions(), 6, [2, 3, 5])
        assert rep.ok

    def test_cuspidal_closed(self):
        rep = sublambda_check(LambdaStructure(laurent_line(), default="toric"), cuspidal_conditions(), 6, [2, 3])
        assert rep.ok

    def test_fake_fails_with_witness(self):
        rep = sublambda_check(LambdaStructure(laurent_line(), default="toric"), fake_conditions(), 6, [2])
        assert not rep.ok
        assert rep.failures[0].witness.startswith("f = t + 2*t^-1")

    def test_kernel_dimension(self):
        # degree window -D..D has 2D+1 monomials; one condition cuts one dimension
        assert len(condition_kernel(nodal_conditions(), 6)) == 12


class TestEqualizer:
    @pytest.fixture
    def eq(self):
        A = LambdaStructure(RingPresentation(ZZ, ["x"], [], laurent=["x"]), default="toric")
        B = LambdaStructure(RingPresentation(ZZ, ["x"], ["x^2 - 1"], laurent=["x"]), default="toric")
        return equalizer_structure(A, B, {"x": "x"}, {"x": "1"})

    def test_not_member(self, eq):
        assert not eq.contains("x + x^-1")

    def test_constant(self, eq):
        assert eq.contains("5")

    def test_mixed(self, eq):
        fa, ga = eq.images("x^2 + x^-2 + x + x^-1")
        assert str(fa) == "2*x + 2" and str(ga) == "4"
        assert not eq.contains("x^2 + x^-2 + x + x^-1")

    def test_psi_closed(self, eq):
        assert eq.check_psi_closed(["5", "x^2 + x^-2", "x^4", "x^2 - 3"], [2, 3, 5]).ok

    def test_not_lambda_map(self):
        A = LambdaStructure(RingPresentation(ZZ, ["x"], [], laurent=["x"]), default="toric")
        B = LambdaStructure(RingPresentation(ZZ, ["x"], ["x^2 - 1"], laurent=["x"]), default="toric")
        with pytest.raises(NotLambdaMap):
            equalizer_structure(A, B, {"x": "x"}, {"x": "-1"})


@given(st.integers(-5, 5), st.integers(-5, 5), st.sampled_from([2, 3, 5, 7]))
def test_dickson_is_multiplicative_psi(a, b, p):
    L = chebychev_structure()
    f = px(f"{a}*x^2 + {b}")
    g = px(f"x - {a}")
    assert apply_psi(L, p, f * g) == apply_psi(L, p, f) * apply_psi(L, p, g)
