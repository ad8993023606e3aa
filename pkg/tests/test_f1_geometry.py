import itertools
import math
import warnings

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wittlambda.algebra import GF
from wittlambda.errors import BudgetExceeded, PosetTooLarge, WittLambdaError
from wittlambda.f1 import (
    Fan,
    Zeta,
    affine_space_fan,
    complemented_closed_subspaces,
    complemented_f1_points,
    count_points_Fq,
    count_points_Fq_bruteforce,
    cyclic_monoid,
    det_psi2_compat_check,
    euler_characteristic,
    f1_linear_functionals,
    f1_points_affine,
    f1_points_monoid,
    free_monoid,
    gln_f1_points,
    gln_points_Fq,
    hodge_poly_toric,
    is_upset,
    lambda2_vanishes,
    mn_f1_points,
    mn_points_Fq,
    product_fan,
    projective_space_fan,
)
from wittlambda.lambda_core import chebychev_structure, toric_structure

P1, P2, P3 = (projective_space_fan(n) for n in (1, 2, 3))
P1xP1 = product_fan(P1, P1)
DESK_FANS = {
    "A1": affine_space_fan(1), "A2": affine_space_fan(2), "A3": affine_space_fan(3),
    "P1": P1, "P2": P2, "P3": P3, "P1xP1": P1xP1,
}


def t_poly(text):
    from wittlambda.algebra import parse_poly

    return parse_poly(text, variables=("t",))


def brute_upsets(F):
    """Every subset of cones, filtered for upward closure."""
    cones = list(F.cones)
    count = 0
    for mask in range(1 << len(cones)):
        S = {cones[i] for i in range(len(cones)) if mask >> i & 1}
        if all(tau in S for sigma in S for tau in cones if sigma <= tau):
            count += 1
    return count


def projective_points(n, q):
    """Points of P^n(F_q) as normalized nonzero vectors."""
    F = GF(q)
    pts = set()
    for v in itertools.product(F.elements(), repeat=n + 1):
        nz = [c for c in v if not F.is_zero(c)]
        if nz:
            inv = F.inverse(nz[0])
            pts.add(tuple(F.mul(inv, c) for c in v))
    return len(pts)


class TestF1Points:
    @pytest.mark.parametrize("d", [1, 2, 3])
    def test_affine_space(self, d):
        pts, complete = f1_points_affine(toric_structure(free_monoid(d, 0)), 5, [2, 3])
        assert complete
        assert sorted(p.values() for p in pts) == sorted(itertools.product((0, 1), repeat=d))

    def test_chebychev_line(self):
        pts, complete = f1_points_affine(chebychev_structure(), 5, [2, 3, 5])
        assert complete and [p.values() for p in pts] == [(2,)]

    def test_budget(self):
        with pytest.raises(BudgetExceeded):
            f1_points_affine(toric_structure(free_monoid(3, 0)), 50, [2], budget=1000)

    def test_monoid_free(self):
        assert len(f1_points_monoid(free_monoid(3, 0))) == 8

    def test_monoid_units(self):
        pts = f1_points_monoid(free_monoid(0, 2))
        assert [p.values() for p in pts] == [(1, 1)]

    def test_monoid_mixed(self):
        assert len(f1_points_monoid(free_monoid(2, 1))) == 4

    @pytest.mark.parametrize("n", range(1, 7))
    def test_roots_of_unity_targets(self, n):
        pts = f1_points_monoid(cyclic_monoid(n), n)
        if n == 1:
            assert [p.values() for p in pts] == [(1,)]
        else:
            assert [p.values() for p in pts] == [(Zeta(k, n),) for k in range(n)]

    def test_mu6_into_mu3(self):
        # x^6 = 1 with x in mu_3: all three cube roots of unity
        assert len(f1_points_monoid(cyclic_monoid(6), 3)) == 3

    @pytest.mark.parametrize("M", [free_monoid(1, 0), free_monoid(2, 0), free_monoid(1, 1), free_monoid(0, 2)],
                             ids=str)
    def test_affine_agrees_with_monoid(self, M):
        pts, _ = f1_points_affine(toric_structure(M), 4, [2, 3, 5])
        assert sorted(p.values() for p in pts) == sorted(p.values() for p in f1_points_monoid(M))


class TestFan:
    def test_rejects_non_primitive(self):
        with pytest.raises(WittLambdaError):
            Fan.from_cones(2, [(2, 0), (0, 1)], [(0, 1)])

    def test_rejects_non_convex(self):
        with pytest.raises(WittLambdaError):
            Fan.from_cones(1, [(1,), (-1,)], [(0, 1)])

    def test_smoothness(self):
        assert P2.is_smooth
        assert not Fan.from_cones(2, [(1, 0), (1, 2)], [(0, 1)]).is_smooth

    def test_faces_closed(self):
        for F in DESK_FANS.values():
            for sigma in F.cones:
                for tau in F.cones:
                    if tau <= sigma:
                        assert F.is_face(tau, sigma)

    def test_non_simplicial_faces(self):
        F = Fan.from_cones(3, [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)], [(0, 1, 2, 3)])
        assert len(F.cones) == 10  # square pyramid: 1 + 4 + 4 + 1


class TestComplemented:
    def test_p1(self):
        ups = complemented_closed_subspaces(P1)
        assert len(ups) == 5
        assert frozenset() in [u.cones for u in ups]
        assert frozenset(P1.cones) in [u.cones for u in ups]

    def test_a1(self):
        assert len(complemented_closed_subspaces(affine_space_fan(1))) == 3

    @pytest.mark.parametrize("name", ["A1", "A2", "P1", "P2", "P1xP1"])
    def test_against_subset_filter(self, name):
        F = DESK_FANS[name]
        assert len(complemented_closed_subspaces(F)) == brute_upsets(F)

    def test_p2_count(self):
        # all 2^7 subsets filtered for upward closure
        assert len(complemented_closed_subspaces(P2)) == 19

    def test_upsets_are_upsets(self):
        for u in complemented_closed_subspaces(P1xP1):
            assert is_upset(P1xP1, u.cones)

    def test_budget(self):
        with pytest.raises(PosetTooLarge):
            complemented_closed_subspaces(P3, budget=50)

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_points(self, n):
        assert len(complemented_f1_points(projective_space_fan(n))) == n + 1
        assert len(complemented_f1_points(affine_space_fan(n))) == 1

    def test_product(self):
        assert len(complemented_f1_points(P1xP1)) == 4 == euler_characteristic(P1xP1)


class TestHodge:
    def test_p2(self):
        assert hodge_poly_toric(P2) == t_poly("t^2 + t + 1")

    def test_a1(self):
        assert hodge_poly_toric(affine_space_fan(1)) == t_poly("t")

    def test_p1xp1(self):
        assert hodge_poly_toric(P1xP1) == t_poly("(t + 1)^2")

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_projective_space(self, n):
        assert hodge_poly_toric(projective_space_fan(n)) == t_poly(" + ".join(f"t^{i}" for i in range(n + 1)))

    def test_non_smooth_warns(self):
        F = Fan.from_cones(2, [(1, 0), (1, 2)], [(0, 1)])
        with pytest.warns(UserWarning):
            hodge_poly_toric(F)

    @pytest.mark.parametrize("name", ["P1", "P2", "P3", "P1xP1"])
    def test_value_at_one(self, name):
        F = DESK_FANS[name]
        assert hodge_poly_toric(F).evaluate([1]) == len(complemented_f1_points(F)) == len(F.maximal_cones())


class TestPointCounts:
    def test_p2_f2(self):
        assert count_points_Fq(P2, 2) == 7 == count_points_Fq_bruteforce(P2, 2)

    def test_p1_f4(self):
        assert count_points_Fq(P1, 4) == 5

    def test_a3_f3(self):
        assert count_points_Fq(affine_space_fan(3), 3) == 27

    def test_p1xp1_f2(self):
        assert count_points_Fq_bruteforce(P1xP1, 2) == 9

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("q", [2, 3, 4])
    def test_projective_against_vectors(self, n, q):
        assert count_points_Fq(projective_space_fan(n), q) == projective_points(n, q)

    @pytest.mark.parametrize("name", sorted(DESK_FANS))
    @pytest.mark.parametrize("q", [2, 3, 4, 5])
    def test_orbit_equals_bruteforce(self, name, q):
        F = DESK_FANS[name]
        orbit = count_points_Fq(F, q)
        assert orbit == count_points_Fq_bruteforce(F, q)
        assert orbit == hodge_poly_toric(F).evaluate([q])

    def test_non_smooth_orbit_count(self):
        F = Fan.from_cones(2, [(1, 0), (1, 2)], [(0, 1)])
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            assert count_points_Fq(F, 3) == 9
        with pytest.raises(WittLambdaError):
            count_points_Fq_bruteforce(F, 3)


class TestLinearAlgebra:
    def test_axes_f2(self):
        assert f1_linear_functionals(2, GF(2)) == [(0, 0), (0, 1), (1, 0)]

    def test_axes_f3_dim3(self):
        assert len(f1_linear_functionals(3, GF(3))) == 7

    def test_axes_dim1(self):
        assert len(f1_linear_functionals(1, GF(5))) == 5

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("q", [2, 3])
    def test_axis_counts_and_matrices(self, n, q):
        assert len(f1_linear_functionals(n, GF(q))) == n * (q - 1) + 1
        assert len(mn_points_Fq(n, q)) == (n * (q - 1) + 1) ** n
        assert len(gln_points_Fq(n, q)) == math.factorial(n) * (q - 1) ** n

    @pytest.mark.parametrize("n", [1, 2, 3])
    @pytest.mark.parametrize("q", [2, 3])
    def test_lambda2_oracle_separates(self, n, q):
        F = GF(q)
        axes = set(f1_linear_functionals(n, F))
        for v in itertools.product(F.elements(), repeat=n):
            assert lambda2_vanishes(v, F) == (v in axes)

    def test_mn_two(self):
        assert len(mn_f1_points(2)) == 9
        assert gln_f1_points(2) == [((0, 1), (1, 0)), ((1, 0), (0, 1))]

    def test_mn_one(self):
        assert mn_f1_points(1) == [((0,),), ((1,),)]
        assert gln_f1_points(1) == [((1,),)]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_counts(self, n):
        assert len(mn_f1_points(n)) == (n + 1) ** n
        gl = gln_f1_points(n)
        assert len(gl) == math.factorial(n)
        assert all(sorted(map(sum, M)) == [1] * n and sorted(map(sum, zip(*M))) == [1] * n for M in gl)

    def test_det_psi2(self):
        rep = det_psi2_compat_check(2)
        assert rep.ok
        witness = [c for c in rep.checks if c.name.startswith("incompatibility")][0]
        assert "-a1^2*a2^2" in witness.detail

    def test_det_psi_larger(self):
        assert det_psi2_compat_check(3, primes=(2, 3, 5, 7)).ok


@given(st.integers(1, 3), st.sampled_from([2, 3, 4, 5, 7]))
def test_orbit_formula_matches_projective_vectors(n, q):
    if q ** (n + 1) > 3000:
        return
    assert count_points_Fq(projective_space_fan(n), q) == projective_points(n, q)


@given(st.integers(0, 3), st.integers(0, 2))
def test_monoid_maps_count(r, s):
    if r + s == 0:
        return
    assert len(f1_points_monoid(free_monoid(r, s))) == 2**r
