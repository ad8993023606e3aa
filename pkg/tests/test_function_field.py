import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittlambda.algebra import GF
from wittlambda.errors import NotIrreducible
from wittlambda.f1.gln import det as leibniz_det
from wittlambda.function_field import (
    FqPoly,
    MooreMatrix,
    TwistedPoly,
    carlitz_rho,
    carlitz_t,
    check_rho_multiplicative,
    find_dependence,
    is_irreducible,
    monic_irreducibles,
    monic_polys,
    moore_det,
    twisted_mul,
    verify_carlitz_frobenius_lift,
)


def fq(q, text):
    return FqPoly.parse(GF(q), text)


def tw(q, *coeffs):
    F = GF(q)
    return TwistedPoly(q, [fq(q, c) for c in coeffs], FqPoly(F))


class TestTwisted:
    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_tau_times_t(self, q):
        tau = tw(q, "0", "1")
        t = tw(q, "t")
        assert twisted_mul(tau, t) == tw(q, "0", f"t^{q}")

    def test_square_of_rho_t(self):
        rho = carlitz_t(GF(2))
        assert twisted_mul(rho, rho) == tw(2, "t^2", "t + t^2", "1")

    def test_unit(self):
        f = tw(3, "t + 1", "2*t^2", "1")
        assert twisted_mul(f, tw(3, "1")) == f
        assert twisted_mul(tw(3, "1"), f) == f

    def test_degrees_add(self):
        f = tw(2, "t", "1", "t")
        g = tw(2, "1", "0", "0", "t + 1")
        assert twisted_mul(f, g).degree() == 5

    def test_not_commutative(self):
        a, b = tw(2, "0", "1"), tw(2, "t")
        assert twisted_mul(a, b) != twisted_mul(b, a)


class TestCarlitz:
    def test_rho_t(self):
        assert str(carlitz_rho(fq(2, "t"))) == "t + tau"

    def test_rho_t_squared(self):
        assert carlitz_rho(fq(2, "t^2")) == tw(2, "t^2", "t + t^2", "1")

    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_constants(self, q):
        F = GF(q)
        for c in F.elements()[1:]:
            assert carlitz_rho(FqPoly.const(F, c)) == TwistedPoly(q, [FqPoly.const(F, c)], FqPoly(F))

    def test_degree(self):
        f = fq(3, "t^4 + 2*t + 1")
        assert carlitz_rho(f).degree() == 4

    @pytest.mark.parametrize("q,m", [(2, "t"), (2, "t^2 + t + 1"), (3, "t"), (4, "t + w"), (2, "t^3 + t + 1")])
    def test_frobenius_lift_examples(self, q, m):
        assert verify_carlitz_frobenius_lift(fq(q, m)).ok

    def test_reduction_by_hand(self):
        # rho(t^2+t+1) over F_2 = (t^2+t+1) + (t^2+t+1)*tau + tau^2
        m = fq(2, "t^2 + t + 1")
        assert carlitz_rho(m) == tw(2, "t^2 + t + 1", "t^2 + t + 1", "1")

    def test_conormal_coefficient_is_m(self):
        m = fq(3, "t^2 + 1")
        rep = verify_carlitz_frobenius_lift(m)
        assert rep.values[0] == ("tau^0 coefficient of rho(t^2 + 1)", "t^2 + 1")

    def test_reducible_rejected(self):
        with pytest.raises(NotIrreducible):
            verify_carlitz_frobenius_lift(fq(2, "t^2 + 1"))

    @pytest.mark.parametrize("q", [2, 3])
    def test_all_irreducibles_degree_three(self, q):
        F = GF(q)
        ms = [m for d in (1, 2, 3) for m in monic_irreducibles(F, d)]
        for m in ms:
            assert verify_carlitz_frobenius_lift(m, ms[:4]).ok

    def test_irreducible_counts(self):
        # necklace counts: (1/d) sum_{e|d} mu(e) q^(d/e)
        assert [len(monic_irreducibles(GF(2), d)) for d in (1, 2, 3, 4)] == [2, 1, 2, 3]
        assert [len(monic_irreducibles(GF(3), d)) for d in (1, 2, 3)] == [3, 3, 8]

    def test_irreducible_by_roots(self):
        F = GF(5)
        for f in monic_polys(F, 2):
            has_root = any(F.is_zero(f.evaluate(a)) for a in F.elements())
            assert is_irreducible(f) == (not has_root)

    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_random_pairs(self, q):
        assert check_rho_multiplicative(q, 100, 4, seed=q).ok


class TestMoore:
    def test_single(self):
        F = GF(8)
        a = F.parse("w^2 + 1")
        assert moore_det([a], 2, F) == a

    def test_f4_example(self):
        F = GF(4)
        assert F.format(moore_det([F.one(), F.parse("w")], 2, F)) == "1"

    def test_equal_columns(self):
        F = GF(4)
        assert F.is_zero(moore_det([F.one(), F.one()], 2, F))

    def test_entries(self):
        F = GF(9)
        a = F.parse("w")
        M = MooreMatrix(F, 3, (F.one(), a)).entries
        assert M[1][1] == F.pow(a, 3)

    @pytest.mark.parametrize("qk,q", [(4, 2), (8, 2), (16, 2), (16, 4), (9, 3)])
    def test_criterion_exhaustive_small(self, qk, q):
        F = GF(qk)
        for d in (1, 2):
            for vec in itertools.product(F.elements(), repeat=d):
                det = moore_det(vec, q, F)
                assert F.is_zero(det) == (find_dependence(vec, q, F) is not None)
                assert det == leibniz_det(MooreMatrix(F, q, vec).entries, F)


@st.composite
def fq_polys(draw, q, max_degree=4):
    F = GF(q)
    coeffs = draw(st.lists(st.integers(0, q - 1), min_size=1, max_size=max_degree + 1))
    return FqPoly(F, {i: F.elements()[c] for i, c in enumerate(coeffs)})


@pytest.mark.parametrize("q", [2, 3, 4])
@given(data=st.data())
def test_rho_is_a_ring_map(q, data):
    f = data.draw(fq_polys(q))
    g = data.draw(fq_polys(q))
    assert carlitz_rho(f * g) == twisted_mul(carlitz_rho(f), carlitz_rho(g))
    assert carlitz_rho(f + g) == carlitz_rho(f) + carlitz_rho(g)
    assert twisted_mul(carlitz_rho(f), carlitz_rho(g)) == twisted_mul(carlitz_rho(g), carlitz_rho(f))


@pytest.mark.parametrize("qk,q", [(4, 2), (8, 2), (16, 2), (16, 4), (9, 3)])
@given(data=st.data())
def test_moore_criterion_three(qk, q, data):
    F = GF(qk)
    vec = data.draw(st.lists(st.sampled_from(F.elements()), min_size=3, max_size=3))
    det = moore_det(vec, q, F)
    assert F.is_zero(det) == (find_dependence(vec, q, F) is not None)
