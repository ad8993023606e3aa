"""Fans, their face posets, and the toric invariants read off them.

Cones are frozensets of ray indices.  Faces of a listed cone are found
geometrically (intersections of facets), so non-simplicial cones are
handled; every face of every listed cone is added, and the zero cone is
always present.
"""

from __future__ import annotations

import itertools
import math
import warnings
from dataclasses import dataclass

import sympy

from ..algebra.poly import Poly
from ..algebra.presentation import RingPresentation, enumerate_points
from ..algebra.rings import ZZ
from ..algebra.finite_field import GF
from ..errors import PosetTooLarge, PresentationError

UPSET_BUDGET = 10**6


def _rank(vectors):
    if not vectors:
        return 0
    return sympy.Matrix(vectors).rank()


def _cone_faces(rays, idx):
    """All faces of the cone spanned by ``rays[i]`` for i in ``idx``."""
    idx = tuple(sorted(idx))
    vecs = [rays[i] for i in idx]
    d = _rank(vecs)
    if d == 0:
        return {frozenset()}
    if d == len(idx):
        # simplicial: every subset is a face
        return {frozenset(s) for k in range(len(idx) + 1) for s in itertools.combinations(idx, k)}
    # coordinates in a basis of the span, then facets from rank-(d-1) subsets
    basis = sympy.Matrix(vecs).T.columnspace()
    B = sympy.Matrix.hstack(*basis)
    coords = {i: B.solve_least_squares(sympy.Matrix(rays[i])) for i in idx}
    facets = set()
    for sub in itertools.combinations(idx, d - 1):
        M = sympy.Matrix.hstack(*[coords[i] for i in sub]).T
        if M.rank() != d - 1:
            continue
        (u,) = M.nullspace()
        vals = {i: (u.T * coords[i])[0] for i in idx}
        if all(v >= 0 for v in vals.values()) or all(v <= 0 for v in vals.values()):
            facets.add(frozenset(i for i in idx if vals[i] == 0))
    faces = {frozenset(idx)}
    frontier = set(facets)
    while frontier:
        faces |= frontier
        nxt = set()
        for f in frontier:
            for g in facets:
                h = f & g
                if h not in faces:
                    nxt.add(h)
        frontier = nxt
    return faces | {frozenset()}


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple
    listed: tuple
    cones: tuple

    @classmethod
    def from_cones(cls, dim, rays, cones):
        rays = tuple(tuple(int(x) for x in r) for r in rays)
        for r in rays:
            if len(r) != dim:
                raise PresentationError(f"ray {r} is not in Z^{dim}")
            if not any(r):
                raise PresentationError("rays must be nonzero")
            if math.gcd(*r) != 1:
                raise PresentationError(f"ray {r} is not primitive")
        if len(set(rays)) != len(rays):
            raise PresentationError("rays must be distinct")
        listed = tuple(tuple(sorted(set(c))) for c in cones)
        for c in listed:
            for i in c:
                if not 0 <= i < len(rays):
                    raise PresentationError(f"cone refers to missing ray {i}")
            vecs = [rays[i] for i in c]
            if c and _is_not_strongly_convex(vecs):
                raise PresentationError(f"cone {c} contains a line")
        all_cones = {frozenset()}
        for c in listed:
            all_cones |= _cone_faces(rays, c)
        for i in range(len(rays)):
            if frozenset([i]) not in all_cones:
                raise PresentationError(f"ray {i} is not a face of any cone")
        ordered = tuple(sorted(all_cones, key=lambda c: (_rank([rays[i] for i in c]), sorted(c))))
        return cls(dim, rays, listed, ordered)

    def cone_dim(self, c):
        return _rank([self.rays[i] for i in c])

    def is_face(self, tau, sigma):
        """tau is a face of sigma (within a fan this is containment of rays)."""
        return tau <= sigma

    def maximal_cones(self):
        return [c for c in self.cones if not any(c < d for d in self.cones)]

    def full_dimensional_cones(self):
        return [c for c in self.cones if self.cone_dim(c) == self.dim]

    def is_smooth_cone(self, c):
        """Rays extend to a Z-basis: independent and maximal minors coprime."""
        vecs = [self.rays[i] for i in sorted(c)]
        if not vecs:
            return True
        k = len(vecs)
        M = sympy.Matrix(vecs)
        if M.rank() != k:
            return False
        g = 0
        for cols in itertools.combinations(range(self.dim), k):
            g = math.gcd(g, int(M[:, list(cols)].det()))
        return g == 1

    @property
    def is_smooth(self):
        return all(self.is_smooth_cone(c) for c in self.cones)

    def is_complete(self):
        """Every codimension-one cone lies in exactly two full cones (and
        every maximal cone is full-dimensional)."""
        if any(self.cone_dim(c) != self.dim for c in self.maximal_cones()):
            return False
        full = self.full_dimensional_cones()
        for c in self.cones:
            if self.cone_dim(c) == self.dim - 1:
                if sum(c <= f for f in full) != 2:
                    return False
        return bool(full)

    def format_cone(self, c):
        return "{" + ",".join(str(i) for i in sorted(c)) + "}" if c else "0"


def _is_not_strongly_convex(vecs):
    """Does the cone spanned by ``vecs`` contain a line?  Checked by looking
    for a nonzero nonnegative combination summing to zero."""
    M = sympy.Matrix(vecs).T
    for v in M.nullspace():
        if all(x >= 0 for x in v) or all(x <= 0 for x in v):
            return True
    # a line can also come from a combination with some zero weights
    for k in range(2, len(vecs)):
        for sub in itertools.combinations(range(len(vecs)), k):
            N = sympy.Matrix([vecs[i] for i in sub]).T.nullspace()
            for v in N:
                if all(x > 0 for x in v) or all(x < 0 for x in v):
                    return True
    return False


# -- standard fans ------------------------------------------------------------------


def affine_space_fan(n):
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)]
    return Fan.from_cones(n, rays, [tuple(range(n))])


def projective_space_fan(n):
    rays = [tuple(int(i == j) for j in range(n)) for i in range(n)] + [tuple([-1] * n)]
    cones = [tuple(j for j in range(n + 1) if j != i) for i in range(n + 1)]
    return Fan.from_cones(n, rays, cones)


def product_fan(F, G):
    rays = [r + (0,) * G.dim for r in F.rays] + [(0,) * F.dim + r for r in G.rays]
    off = len(F.rays)
    cones = [tuple(sorted(f)) + tuple(off + i for i in sorted(g)) for f in F.maximal_cones() for g in G.maximal_cones()]
    return Fan.from_cones(F.dim + G.dim, rays, cones)


# -- complemented subspaces and points -----------------------------------------------


@dataclass(frozen=True)
class ComplementedSubspace:
    """An up-set of the cone poset: a union of closures of torus orbits."""

    cones: frozenset

    def __len__(self):
        return len(self.cones)


def is_upset(F, S):
    return all(t in S for s in S for t in F.cones if s <= t)


def complemented_closed_subspaces(F, budget=UPSET_BUDGET):
    """All up-sets of the face poset, including the empty set and the whole fan.

    Cones are decided from the top dimension down; a cone may be included
    only if every cone above it already is.
    """
    if 2 ** len(F.cones) > budget:
        raise PosetTooLarge(2 ** len(F.cones), budget)
    order = sorted(F.cones, key=lambda c: (-F.cone_dim(c), sorted(c)))
    above = {c: [d for d in F.cones if c < d] for c in order}
    out = []

    def walk(i, chosen):
        if i == len(order):
            out.append(ComplementedSubspace(frozenset(chosen)))
            return
        c = order[i]
        walk(i + 1, chosen)
        if all(d in chosen for d in above[c]):
            chosen.add(c)
            walk(i + 1, chosen)
            chosen.discard(c)

    walk(0, set())
    out.sort(key=lambda s: (len(s), sorted(sorted(c) for c in s.cones)))
    return out


def complemented_f1_points(F):
    """Torus-fixed points: the full-dimensional cones."""
    return F.full_dimensional_cones()


def euler_characteristic(F):
    """Compactly supported Euler characteristic: each orbit G_m^k adds 0^k."""
    return sum(1 for c in F.cones if F.dim - F.cone_dim(c) == 0)


def hodge_poly_toric(F, var="t"):
    """P(t) = sum over cones of (t - 1)^(n - dim σ)."""
    if not F.is_smooth:
        warnings.warn("fan is not smooth: the orbit sum counts points but is not a Hodge polynomial")
    t = Poly.var(var)
    total = Poly.zero((var,))
    for c in F.cones:
        total = total + (t - 1) ** (F.dim - F.cone_dim(c))
    return total.with_variables((var,))


def count_points_Fq(F, q):
    """Orbit formula: sum over cones of (q - 1)^(n - dim σ)."""
    return sum((q - 1) ** (F.dim - F.cone_dim(c)) for c in F.cones)


def chart_presentation(F, sigma):
    """Coordinate ring of the affine chart of a smooth cone: Z[x_1..x_k,
    u_1^(+-1)..u_{n-k}^(+-1)], x_i dual to the rays of sigma."""
    k = len(sigma)
    xs = tuple(f"x{i}" for i in range(1, k + 1))
    us = tuple(f"u{i}" for i in range(1, F.dim - k + 1))
    return RingPresentation(ZZ, xs + us, laurent=us)


def count_points_Fq_bruteforce(F, q, budget=None):
    """Count F_q-points chart by chart over the maximal cones.

    A chart point lies in the orbit of the face spanned by the rays whose
    coordinates vanish; it is counted only in the first maximal cone that
    contains that face, so glued points are counted once.
    """
    if not F.is_smooth:
        raise PresentationError("brute-force chart counting needs a smooth fan")
    field = GF(q)
    maximal = F.maximal_cones()
    total = 0
    for sigma in maximal:
        rays = sorted(sigma)
        pres = chart_presentation(F, sigma)
        for point in enumerate_points(pres, field, budget):
            tau = frozenset(r for r, x in zip(rays, point) if field.is_zero(x))
            home = next(m for m in maximal if tau <= m)
            if home == sigma:
                total += 1
    return total
