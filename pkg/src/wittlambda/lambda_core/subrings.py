"""Sub-Λ-rings of the toric Laurent line and equalizers of Λ-maps.

:class:`Embedding` realises a presented ring as a subring of Z[t^(+-1)] and
pulls the toric ψ_p back along it by solving an exact linear system over the
normal-form monomials (then verifying the answer).  The condition-kernel
check and the equalizer construction work directly with Laurent
polynomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import sympy
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from ..algebra.parse import parse_poly
from ..algebra.poly import Poly
from ..algebra.presentation import RingPresentation
from ..algebra.rings import ZZ
from ..errors import NotLambdaMap, PresentationError
from ..report import Report


def laurent_line(var="t"):
    return RingPresentation(ZZ, (var,), laurent=(var,))


def _span(p, var):
    return p.min_degree(var), p.degree(var)


class Embedding:
    """An injective ring map from ``ring`` into Z[t^(+-1)], given on generators."""

    def __init__(self, ring, images, var=None):
        imgs = {}
        for g, img in images.items():
            if isinstance(img, str):
                img = parse_poly(img)
            imgs[g] = img
        used = set()
        for img in imgs.values():
            used |= set(img.used_variables())
        if var is None:
            if len(used) != 1:
                raise PresentationError(f"embedding must use exactly one ambient variable, got {sorted(used)}")
            var = used.pop()
        self.var = var
        self.ambient = laurent_line(var)
        self.ring = ring
        missing = [g for g in ring.user_generators if g not in imgs]
        if missing:
            raise PresentationError(f"embedding has no image for {', '.join(missing)}")
        self.images = {g: self.ambient.normal_form(imgs[g]) for g in ring.user_generators}
        for r in ring.user_relations:
            if not self.push(r).is_zero():
                raise PresentationError(f"embedding does not kill relation {r}")

    def push(self, a):
        """Image of a ring element in Z[t^(+-1)]."""
        a = self.ring.element(a)
        return a.evaluate([self.images[g] for g in self.ring.generators], self.ambient)

    def toric_psi(self, p, f):
        t = self.ambient.gen(self.var)
        return self.ambient.normal_form(f.evaluate([t**p], self.ambient))

    def pull(self, target):
        """The unique ring element whose image is ``target``; ValueError if none.

        Solves for a combination of normal-form monomials with exponents in
        a box sized by the target's degree span, then verifies it exactly.
        """
        target = self.ambient.normal_form(target)
        if target.is_zero():
            return self.ring.zero()
        lo_t, hi_t = _span(target, self.var)
        box = max(abs(lo_t), abs(hi_t), 1) + 2
        ring = self.ring
        ranges = [range(-box, box + 1) if g in ring.laurent else range(0, box + 1) for g in ring.generators]
        monos, columns = [], []
        for exps in itertools.product(*ranges):
            if ring.is_normal_monomial(exps):
                monos.append(exps)
                columns.append(self.push(Poly({exps: 1}, ring.generators, ring.laurent)))
        rows = sorted({e[0] for col in columns for e in col.terms} | {e[0] for e in target.terms})
        index = {r: i for i, r in enumerate(rows)}
        n = len(columns)
        aug = [[QQ(0)] * (n + 1) for _ in rows]
        for j, col in enumerate(columns):
            for (e,), c in col.terms.items():
                aug[index[e]][j] = QQ(c)
        for (e,), c in target.terms.items():
            aug[index[e]][n] = QQ(c)
        rref, pivots = DomainMatrix(aug, (len(rows), n + 1), QQ).rref()
        if n in pivots:
            raise ValueError(f"{target} is not in the image of {ring.name}")
        rows_out = rref.to_Matrix()
        terms = {}
        for r, col in enumerate(pivots):
            c = rows_out[r, n]
            if c != 0:
                if not c.is_integer:
                    raise ValueError(f"{target} pulls back with non-integral coefficient {c}")
                terms[monos[col]] = int(c)
        result = ring.normal_form(Poly(terms, ring.generators, ring.laurent))
        if self.push(result) != target:
            raise ValueError(f"pullback of {target} failed verification")
        return result

    def pull_psi(self, p, g):
        return self.pull(self.toric_psi(p, self.images[g]))

    def __eq__(self, other):
        return isinstance(other, Embedding) and self.var == other.var and self.images == other.images

    def __hash__(self):
        return hash((self.var, tuple(sorted((g, str(i)) for g, i in self.images.items()))))


# -- linear conditions on Laurent polynomials ------------------------------------


def _falling(k, j):
    out = 1
    for i in range(j):
        out *= k - i
    return out


@dataclass(frozen=True)
class Functional:
    """``f -> sum c * f^(order)(point)`` on Laurent polynomials in one variable."""

    terms: tuple
    label: str = ""

    def on_monomial(self, k):
        total = Fraction(0)
        for c, order, point in self.terms:
            e = k - order
            total += Fraction(c) * _falling(k, order) * (Fraction(point) ** e if point else (1 if e == 0 else 0))
        return total

    def __call__(self, f):
        total = Fraction(0)
        for (k,), c in f.terms.items():
            total += c * self.on_monomial(k)
        return total

    def __str__(self):
        return self.label or " + ".join(f"{c}*f^({o})({a})" for c, o, a in self.terms)


def nodal_conditions():
    return [Functional(((1, 0, 1), (-1, 0, -1)), "f(1) = f(-1)")]


def cuspidal_conditions():
    return [Functional(((1, 1, 1),), "f'(1) = 0")]


def fake_conditions():
    return [Functional(((1, 0, 2), (-1, 0, 1)), "f(2) = f(1)")]


def condition_kernel(conditions, degree, var="t"):
    """A basis of {f : deg in [-D, D], all conditions vanish}, as primitive
    integer Laurent polynomials, lowest |degree| first."""
    exps = sorted(range(-degree, degree + 1), key=lambda k: (abs(k), -k))
    M = sympy.Matrix([[sympy.Rational(c.on_monomial(k).numerator, c.on_monomial(k).denominator) for k in exps]
                      for c in conditions])
    basis = []
    for vec in M.nullspace():
        den = sympy.ilcm(*[sympy.fraction(x)[1] for x in vec])
        ints = [int(x * den) for x in vec]
        g = 0
        for x in ints:
            g = sympy.igcd(g, x)
        ints = [x // g for x in ints]
        lead = next(x for x in reversed(ints) if x)
        if lead < 0:
            ints = [-x for x in ints]
        basis.append(Poly({(k,): c for k, c in zip(exps, ints) if c}, (var,), (var,)))
    return basis


def sublambda_check(ambient, conditions, degree, primes):
    """Check that the condition kernel (up to ``degree``) is closed under ψ_p.

    ``ambient`` is the toric structure on a one-variable Laurent ring.
    """
    from .structure import apply_psi

    var = ambient.ring.user_generators[0]
    basis = condition_kernel(conditions, degree, var)
    rep = Report()
    rep.value("kernel dimension", len(basis))
    for p in primes:
        witness = ""
        for b in basis:
            img = apply_psi(ambient, p, b)
            bad = [str(c) for c in conditions if c(img) != 0]
            if bad:
                witness = f"f = {b}: psi_{p}(f) = {img} violates {', '.join(bad)}"
                break
        rep.record(f"closed under psi_{p} ({'; '.join(map(str, conditions))}, D={degree})", not witness, witness)
    return rep


# -- equalizers ------------------------------------------------------------------


class LambdaMap:
    """A ring map source.ring -> target.ring given on generators."""

    def __init__(self, source, target, images):
        self.source, self.target = source, target
        self.images = [target.ring.element(images[g]) if g in images else None for g in source.ring.generators]
        if any(i is None for i in self.images):
            raise NotLambdaMap("map must give an image for every generator")
        for r in source.ring.user_relations:
            if not self(r).is_zero():
                raise NotLambdaMap(f"relation {r} is not sent to zero")

    def __call__(self, a):
        a = self.source.ring.element(a)
        return self.target.ring.normal_form(a.evaluate(self.images, self.target.ring))

    def check(self, primes):
        for p in primes:
            for g in self.source.ring.user_generators:
                x = self.source.ring.gen(g)
                lhs = self(self.source.apply_prime(p, x))
                rhs = self.target.apply_prime(p, self(x))
                if lhs != rhs:
                    raise NotLambdaMap(f"f(psi_{p}({g})) = {lhs} but psi_{p}(f({g})) = {rhs}")


class Equalizer:
    """The subset {a : f(a) = g(a)} of a Λ-ring; itself a sub-Λ-ring."""

    def __init__(self, f, g):
        self.f, self.g = f, g
        self.source = f.source

    def images(self, a):
        return self.f(a), self.g(a)

    def contains(self, a):
        fa, ga = self.images(a)
        return fa == ga

    __contains__ = contains

    def check_psi_closed(self, samples, primes):
        from .structure import apply_psi

        rep = Report()
        for a in samples:
            if not self.contains(a):
                continue
            for p in primes:
                img = apply_psi(self.source, p, a)
                rep.record(f"psi_{p}({self.source.ring.element(a)}) in equalizer", self.contains(img),
                           witness=f"psi_{p} image {img} has f, g values {self.images(img)}")
        return rep


def equalizer_structure(source, target, f_images, g_images, primes=(2, 3, 5, 7, 11, 13)):
    """Membership test for the equalizer of two Λ-maps source -> target.

    Raises :class:`NotLambdaMap` if either map fails ψ_p-equivariance on the
    generators for some p in ``primes``.
    """
    f = LambdaMap(source, target, f_images)
    g = LambdaMap(source, target, g_images)
    f.check(primes)
    g.check(primes)
    return Equalizer(f, g)
