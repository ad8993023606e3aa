"""Monoid presentations and F₁-points.

An F₁-point of a Λ-ring A is a Λ-map A -> Z with the identity structure,
i.e. a ring map to Z whose values are fixed by every ψ_p.  For a monoid
algebra this is the same as a monoid map into ({0, 1}, *).  Targets
μ_n ∪ {0} are also supported for monoid algebras.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from ..algebra.poly import Poly
from ..algebra.presentation import RingPresentation
from ..algebra.rings import ZZ
from ..budget import check_budget
from ..errors import PresentationError


@dataclass(frozen=True)
class MonoidPresentation:
    """Commutative monoid on ``generators``; those in ``units`` are invertible.

    ``relations`` are pairs of exponent dicts ``(lhs, rhs)`` meaning
    ``prod g^lhs[g] = prod g^rhs[g]``.  ``N^r x Z^s`` has no relations.
    """

    generators: tuple
    units: tuple = ()
    relations: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "units", tuple(self.units))
        rels = tuple((dict(l), dict(r)) for l, r in self.relations)
        object.__setattr__(self, "relations", tuple((tuple(sorted(l.items())), tuple(sorted(r.items()))) for l, r in rels))
        if set(self.units) - set(self.generators):
            raise PresentationError("units must be generators")
        for l, r in self.relations:
            for g, _ in l + r:
                if g not in self.generators:
                    raise PresentationError(f"relation uses unknown generator {g!r}")

    def _mono(self, exps):
        return Poly.monomial(dict(exps), 1, self.generators, self.units)

    def ring(self):
        """The monoid algebra Z[M] as a presentation with binomial relations."""
        rels = [self._mono(l) - self._mono(r) for l, r in self.relations]
        return RingPresentation(ZZ, self.generators, rels, laurent=self.units)

    def __str__(self):
        r = len([g for g in self.generators if g not in self.units])
        s = len(self.units)
        desc = f"N^{r} x Z^{s}"
        if self.relations:
            rel = ", ".join(
                f"{_fmt(l)} = {_fmt(r)}" for l, r in self.relations
            )
            desc += f" / ({rel})"
        return desc


def _fmt(exps):
    return "*".join(f"{g}^{e}" if e != 1 else g for g, e in exps) or "1"


def free_monoid(r, s=0):
    """N^r x Z^s with generators x1..xr and u1..us."""
    xs = tuple(f"x{i}" for i in range(1, r + 1))
    us = tuple(f"u{i}" for i in range(1, s + 1))
    return MonoidPresentation(xs + us, us)


def cyclic_monoid(n, name="x"):
    """Z/n, presented as x with x^n = 1."""
    return MonoidPresentation((name,), (), (({name: n}, {}),))


# -- F1-points of monoid algebras ------------------------------------------------


@dataclass(frozen=True)
class Zeta:
    """The root of unity exp(2 pi i k / n)."""

    k: int
    n: int

    def __str__(self):
        return "1" if self.k % self.n == 0 else f"zeta{self.n}^{self.k % self.n}"


@dataclass(frozen=True)
class F1Point:
    assignment: tuple

    def __getitem__(self, g):
        return dict(self.assignment)[g]

    def values(self):
        return tuple(v for _, v in self.assignment)

    def __str__(self):
        return "(" + ", ".join(f"{g}={v}" for g, v in self.assignment) + ")"


def _monomial_value(exps, point, n):
    """Value of a monomial at a point with values 0 or Zeta(k, n)."""
    k = 0
    for g, e in exps:
        v = point[g]
        if e == 0:
            continue
        if v == 0:
            if e < 0:
                raise ZeroDivisionError
            return 0
        k += v.k * e
    return Zeta(k % n, n)


def f1_points_monoid(M, target_order=1):
    """All monoid maps M -> μ_n ∪ {0} (n = ``target_order``); n = 1 gives
    maps into ({0, 1}, *), reported with integer values."""
    n = target_order
    choices = []
    for g in M.generators:
        units = [Zeta(k, n) for k in range(n)]
        choices.append(units if g in M.units else [0] + units)
    out = []
    for values in itertools.product(*choices):
        point = dict(zip(M.generators, values))
        if all(_monomial_value(l, point, n) == _monomial_value(r, point, n) for l, r in M.relations):
            if n == 1:
                values = tuple(0 if v == 0 else 1 for v in values)
            out.append(F1Point(tuple(zip(M.generators, values))))
    return out


# -- F1-points of affine Λ-rings ------------------------------------------------


def _cauchy_bound(poly, var):
    """Bound on |root| of a univariate integer polynomial of degree >= 1, or None."""
    coeffs = poly.univariate_coefficients(var)
    while coeffs and coeffs[0] == 0:
        coeffs = coeffs[1:]
    if len(coeffs) < 2:
        return None
    lead = coeffs[-1]
    return 1 + max(abs(Fraction(c, lead)) for c in coeffs[:-1])


def completeness_bounds(L, primes):
    """Per generator, a bound on |c| for integer solutions of ψ_p(g) = g that
    follows from a univariate equation (Cauchy bound), or None."""
    ring = L.ring
    out = {}
    for g in ring.user_generators:
        bound = None
        if g in ring.laurent:
            bound = 1  # units of Z
        for p in primes:
            if bound is not None:
                break
            img = L.images(p)[ring.generators.index(g)]
            eq = img - ring.gen(g)
            if set(eq.used_variables()) <= {g} and not eq.is_zero():
                b = _cauchy_bound(eq.with_variables((g,)), g)
                if b is not None:
                    bound = b
        out[g] = bound
    return out


def f1_points_affine(L, bound, primes, budget=None):
    """Integer points with |values| <= bound, fixed by ψ_p for p in ``primes``.

    Returns ``(points, complete)``; ``complete`` certifies that no point
    outside the box exists because each generator's ψ_p equation bounds it.
    Every point is re-checked against all declared ψ_p as well.
    """
    ring = L.ring
    if not ring.torsion_free:
        raise PresentationError("F1-points are computed for presentations over Z")
    gens = ring.user_generators
    check_budget(len(gens) * (2 * bound + 1), budget)
    check_budget((2 * bound + 1) ** len(gens), budget)
    all_primes = sorted(set(primes) | set(L.declared_primes))
    imgs = {p: L.images(p) for p in all_primes}
    choices = [[-1, 1] if g in ring.laurent else range(-bound, bound + 1) for g in gens]
    points = []
    for values in itertools.product(*choices):
        if not all(r.evaluate(values, ZZ) == 0 for r in ring.user_relations):
            continue
        ok = True
        for p in all_primes:
            for v, img in zip(values, imgs[p]):
                if img.evaluate(values, ZZ) != v:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            points.append(F1Point(tuple(zip(gens, values))))
    bounds = completeness_bounds(L, primes)
    complete = all(b is not None and b <= bound for b in bounds.values())
    return points, complete
