"""Finitely presented commutative rings with rewriting-rule normal forms.

A presentation is a base ring (Z, Z/m or GF(q)), a list of generators (some
of them Laurent, i.e. invertible) and relations.  Each relation is oriented
as ``leading monomial -> remainder``; normal forms are obtained by rewriting
until no leading monomial divides any term.  This is adequate for the
monomial, binomial and univariate relations used in this package; it is not
a Groebner engine, and confluence is checked once, at construction, on
critical pairs up to ``degree_bound``.

GF(p^e) bases with e > 1 are handled by adjoining the field generator ``w``
together with its fixed irreducible polynomial as an extra relation.
"""

from __future__ import annotations

import itertools

from ..budget import check_budget
from ..errors import PresentationError
from .finite_field import GEN, FiniteField, GF
from .poly import Poly
from .rings import ZZ, IntegersMod, Ring


def _sub(a, b):
    return tuple([x - y for x, y in zip(a, b)])


def _add(a, b):
    return tuple([x + y for x, y in zip(a, b)])


class RingPresentation(Ring):
    def __init__(self, base=ZZ, generators=(), relations=(), laurent=(), order=None, degree_bound=48):
        self.base = base
        self.user_generators = tuple(generators)
        if len(set(self.user_generators)) != len(self.user_generators):
            raise PresentationError(f"duplicate generators {self.user_generators}")
        self.laurent = frozenset(laurent)
        unknown = self.laurent - set(self.user_generators)
        if unknown:
            raise PresentationError(f"Laurent variables {sorted(unknown)} are not generators")
        self.order = tuple(order) if order else ("grlex",)
        self.degree_bound = degree_bound

        gens = list(self.user_generators)
        if isinstance(base, FiniteField):
            self.modulus = base.p
        elif isinstance(base, IntegersMod):
            self.modulus = base.m
        else:
            self.modulus = 0
        extra = []
        if isinstance(base, FiniteField) and base.e > 1:
            if GEN in gens:
                raise PresentationError(f"generator name {GEN!r} is reserved for the GF({base.q}) generator")
            gens.append(GEN)
            extra.append(Poly({(k,): c for k, c in enumerate(base.modulus) if c}, variables=(GEN,)))
        self.generators = tuple(gens)
        self.coefficient_ring = IntegersMod(self.modulus) if self.modulus else ZZ
        self.characteristic = self.modulus
        self.torsion_free = self.modulus == 0
        self.name = self._describe()

        self.user_relations = tuple(self._align(r) for r in relations)
        self._rules = []
        self._inverse = {}
        self._memo = {}
        all_rels = self.user_relations + tuple(self._align(r) for r in extra)
        lau_idx = {i for i, g in enumerate(self.generators) if g in self.laurent}
        univariate_laurent = []
        for r in all_rels:
            used = {i for e in r.terms for i, x in enumerate(e) if x}
            if len(used) == 1 and used <= lau_idx:
                univariate_laurent.append(r)
        for r in univariate_laurent:
            self._orient(r)
        for r in all_rels:
            if not any(r is u for u in univariate_laurent):
                self._orient(r)
        self._check_confluence()

    # -- construction -----------------------------------------------------

    def _describe(self):
        base = self.base.name
        if not self.user_generators:
            return base
        gens = ", ".join(
            f"{g}^(+-1)" if g in self.laurent else g for g in self.user_generators
        )
        return f"{base}[{gens}]"

    def _align(self, p):
        if isinstance(p, str):
            from .parse import parse_poly

            p = parse_poly(p, variables=self.generators, laurent=self.laurent)
        if not isinstance(p, Poly):
            p = Poly.const(p)
        extra = set(p.used_variables()) - set(self.generators)
        if extra:
            raise PresentationError(f"relation {p} uses unknown variables {sorted(extra)}")
        return Poly(p.with_variables(self.generators).terms, self.generators, self.laurent)

    def _reduce_coeff(self, c):
        if not isinstance(c, int):
            raise PresentationError(f"non-integer coefficient {c}")
        return c % self.modulus if self.modulus else c

    def _coeff_inverse(self, c):
        if self.modulus:
            try:
                return pow(c, -1, self.modulus)
            except ValueError:
                return None
        return c if c in (1, -1) else None

    @property
    def constrained(self):
        return frozenset(self._inverse)

    def _projected_key(self, exps, free):
        proj = tuple(0 if i in free else e for i, e in enumerate(exps))
        if self.order[0] == "lex":
            pri = [self.generators.index(v) for v in self.order[1:] if v in self.generators]
            rest = [i for i in range(len(exps)) if i not in pri]
            return tuple(proj[i] for i in pri + rest)
        return (sum(proj), proj)

    def _orient(self, r):
        terms = {e: self._reduce_coeff(c) for e, c in r.terms.items()}
        terms = {e: c for e, c in terms.items() if c}
        if not terms:
            return
        used = {i for e in terms for i, x in enumerate(e) if x}
        lau_idx = {i for i, g in enumerate(self.generators) if g in self.laurent}
        if len(used) == 1 and used <= lau_idx:
            self._orient_laurent_univariate(terms, next(iter(used)))
            return
        free = lau_idx - set(self._inverse_indices())
        best = max(terms, key=lambda e: self._projected_key(e, free))
        key = self._projected_key(best, free)
        ties = [e for e in terms if self._projected_key(e, free) == key]
        if len(ties) > 1:
            raise PresentationError(
                f"relation {Poly(terms, self.generators, self.laurent)} has no unique leading monomial"
            )
        if not any(best[i] for i in range(len(best)) if i not in free):
            raise PresentationError(
                f"relation {Poly(terms, self.generators, self.laurent)} only involves units and constants"
            )
        # divide by the Laurent part of the leading term
        shift = tuple(best[i] if i in free else 0 for i in range(len(best)))
        terms = {_sub(e, shift): c for e, c in terms.items()}
        lhs = _sub(best, shift)
        for e in terms:
            for i in range(len(e)):
                if e[i] < 0 and i not in lau_idx:
                    raise PresentationError("relation leaves negative exponents on non-Laurent generators")
        lc = terms.pop(lhs)
        inv = self._coeff_inverse(lc)
        if inv is None:
            raise PresentationError(
                f"leading coefficient {lc} of a relation is not a unit in {self.coefficient_ring.name}"
            )
        rhs = {e: self._reduce_coeff(-c * inv) for e, c in terms.items()}
        rhs = {e: c for e, c in rhs.items() if c}
        self._rules.append((lhs, rhs))

    def _inverse_indices(self):
        return [self.generators.index(g) for g in self._inverse]

    def _orient_laurent_univariate(self, terms, i):
        g = self.generators[i]
        low = min(e[i] for e in terms)
        coeffs = {}
        for e, c in terms.items():
            coeffs[e[i] - low] = c
        d = max(coeffs)
        n = len(self.generators)
        if d == 0:
            raise PresentationError(f"relation in {g} alone is a nonzero constant")
        lc, c0 = coeffs[d], coeffs.get(0, 0)
        lc_inv, c0_inv = self._coeff_inverse(lc), self._coeff_inverse(c0) if c0 else None
        if lc_inv is None or c0_inv is None:
            raise PresentationError(
                f"relation in Laurent generator {g} must have unit leading and constant coefficients"
            )

        def mono(k):
            e = [0] * n
            e[i] = k
            return tuple(e)

        rhs = {mono(k): self._reduce_coeff(-c * lc_inv) for k, c in coeffs.items() if k != d}
        self._rules.append((mono(d), {e: c for e, c in rhs.items() if c}))
        # x * h(x) = f(x) - c0 = -c0 (mod f), so x^-1 = -c0^-1 * h(x)
        inv_terms = {mono(k - 1): self._reduce_coeff(-c * c0_inv) for k, c in coeffs.items() if k > 0}
        self._inverse[g] = {e: c for e, c in inv_terms.items() if c}

    def _check_confluence(self):
        n = len(self.generators)
        for (i, (l1, r1)), (j, (l2, r2)) in itertools.combinations(enumerate(self._rules), 2):
            if not any(min(a, b) > 0 for a, b in zip(l1, l2)):
                continue
            lcm = tuple(max(a, b) for a, b in zip(l1, l2))
            if sum(lcm) > self.degree_bound:
                continue
            a = self._reduce_dict({_add(_sub(lcm, l1), e): c for e, c in r1.items()})
            b = self._reduce_dict({_add(_sub(lcm, l2), e): c for e, c in r2.items()})
            if a != b:
                pa = Poly(a, self.generators, self.laurent)
                pb = Poly(b, self.generators, self.laurent)
                raise PresentationError(
                    f"rewriting system is not confluent: critical pair at "
                    f"{Poly({lcm: 1}, self.generators)} reduces to {pa} and to {pb}"
                )
        for g, inv in self._inverse.items():
            i = self.generators.index(g)
            e = [0] * n
            e[i] = 1
            prod = self._reduce_dict({_add(tuple(e), m): c for m, c in inv.items()})
            if prod != {(0,) * n: 1}:
                raise PresentationError(f"inverse of {g} is inconsistent")

    # -- normal forms -----------------------------------------------------

    def is_normal_monomial(self, exps):
        """True if the monomial with exponents ``exps`` is already reduced."""
        for i in self._inverse_indices():
            if exps[i] < 0:
                return False
        return self._find_rule(exps) is None

    def _find_rule(self, exps):
        for lhs, rhs in self._rules:
            if all(e >= l for e, l in zip(exps, lhs) if l):
                return lhs, rhs
        return None

    def _nf_mono(self, m):
        memo = self._memo
        if m in memo:
            return memo[m]
        stack = [m]
        while stack:
            cur = stack[-1]
            if cur in memo:
                stack.pop()
                continue
            rule = self._find_rule(cur)
            if rule is None:
                memo[cur] = {cur: 1}
                stack.pop()
                continue
            lhs, rhs = rule
            q = _sub(cur, lhs)
            children = [(_add(q, e), c) for e, c in rhs.items()]
            missing = [e for e, _ in children if e not in memo]
            if missing:
                stack.extend(missing)
                continue
            out = {}
            for e, c in children:
                for e2, c2 in memo[e].items():
                    out[e2] = out.get(e2, 0) + c * c2
            if self.modulus:
                out = {e: v % self.modulus for e, v in out.items()}
            memo[cur] = {e: v for e, v in out.items() if v}
            stack.pop()
        return memo[m]

    def _expand_inverses(self, terms):
        """Replace negative powers of constrained Laurent generators."""
        if not self._inverse:
            return terms
        idx = {self.generators.index(g): inv for g, inv in self._inverse.items()}
        out = {}
        for exps, c in terms.items():
            negs = [(i, -exps[i]) for i in idx if exps[i] < 0]
            if not negs:
                out[exps] = out.get(exps, 0) + c
                continue
            base = list(exps)
            for i, _ in negs:
                base[i] = 0
            partial = {tuple(base): c}
            for i, k in negs:
                inv = idx[i]
                for _ in range(k):
                    nxt = {}
                    for e1, c1 in partial.items():
                        for e2, c2 in inv.items():
                            e = _add(e1, e2)
                            nxt[e] = nxt.get(e, 0) + c1 * c2
                    partial = nxt
            for e, v in partial.items():
                out[e] = out.get(e, 0) + v
        return out

    def _reduce_dict(self, terms):
        terms = self._expand_inverses(terms)
        out = {}
        for exps, c in terms.items():
            c = self._reduce_coeff(c)
            if not c:
                continue
            for e, v in self._nf_mono(exps).items():
                out[e] = out.get(e, 0) + c * v
        if self.modulus:
            return {e: v % self.modulus for e, v in out.items() if v % self.modulus}
        return {e: v for e, v in out.items() if v}

    def normal_form(self, elem):
        """The reduced representative of ``elem``."""
        p = self._align(elem)
        return Poly._make(self.generators, self.laurent, self._reduce_dict(p.terms))

    # -- ring interface ---------------------------------------------------

    def from_int(self, n):
        return self.normal_form(Poly.const(int(n)))

    def zero(self):
        return Poly.zero(self.generators, self.laurent)

    def one(self):
        return self.from_int(1)

    def gen(self, name):
        if name not in self.generators:
            raise KeyError(name)
        return Poly.var(name, self.generators, laurent=name in self.laurent).with_variables(
            self.generators, self.laurent
        )

    def add(self, a, b):
        return self.normal_form(a + b)

    def sub(self, a, b):
        return self.normal_form(a - b)

    def neg(self, a):
        return self.normal_form(-a)

    def mul(self, a, b):
        return self.normal_form(a * b)

    def eq(self, a, b):
        return self.normal_form(a - b).is_zero()

    def is_zero(self, a):
        return self.normal_form(a).is_zero()

    def inverse(self, a):
        a = self.normal_form(a)
        try:
            return self.normal_form(a.monomial_inverse())
        except ValueError:
            pass
        if len(a.terms) == 1:
            (exps, c), = a.terms.items()
            cinv = self._coeff_inverse(c)
            if cinv is not None and all(
                e == 0 or self.generators[i] in self.laurent for i, e in enumerate(exps)
            ):
                return self.normal_form(Poly({tuple(-e for e in exps): cinv}, self.generators, self.laurent))
        raise ValueError(f"cannot invert {a} in {self.name}")

    def element(self, x):
        if isinstance(x, str):
            return self.parse(x)
        if isinstance(x, int):
            return self.from_int(x)
        return self.normal_form(x)

    def parse(self, text):
        from .parse import parse_poly

        return self.normal_form(parse_poly(text, variables=self.generators, laurent=self.laurent))

    def format(self, a):
        return str(a)

    # -- derived presentations ---------------------------------------------

    def with_base(self, base):
        return RingPresentation(
            base, self.user_generators, self.user_relations, self.laurent,
            self.order if self.order != ("grlex",) else None, self.degree_bound,
        )

    def tensor_fp(self, p):
        """This ring tensored with F_p."""
        return self.with_base(IntegersMod(p))

    def rules(self):
        """Oriented rules as ``(lhs Poly, rhs Poly)`` pairs."""
        return [
            (Poly({l: 1}, self.generators, self.laurent), Poly(r, self.generators, self.laurent))
            for l, r in self._rules
        ]

    def signature(self):
        return (
            self.base,
            self.user_generators,
            self.laurent,
            tuple(r.canonical() for r in self.user_relations),
            self.order,
        )

    def __eq__(self, other):
        return isinstance(other, RingPresentation) and self.signature() == other.signature()

    def __hash__(self):
        return hash(self.signature())

    def __repr__(self):
        rels = ", ".join(str(r) for r in self.user_relations)
        return f"RingPresentation({self.name}{' / (' + rels + ')' if rels else ''})"


def normal_form(elem, pres):
    return pres.normal_form(elem)


def exact_div(elem, n):
    """``elem / n`` with integer coefficients, or :class:`NonIntegralDivision`."""
    return elem.exact_div(n)


def enumerate_points(pres, value_ring, budget=None):
    """All assignments of generators to ``value_ring`` satisfying every relation.

    Returns tuples aligned with ``pres.generators``, in lexicographic order of
    the value ring's element order (first generator slowest).  Laurent
    generators only take unit values.
    """
    if pres.modulus:
        if not value_ring.is_zero(value_ring.from_int(pres.modulus)):
            return []
    elems = value_ring.elements()
    k = len(pres.generators)
    check_budget(len(elems) ** k, budget)
    units = [a for a in elems if value_ring.is_unit(a)]
    choices = [units if g in pres.laurent else elems for g in pres.generators]
    rels = list(pres.user_relations)
    if isinstance(pres.base, FiniteField) and pres.base.e > 1:
        f = Poly({(i,): c for i, c in enumerate(pres.base.modulus) if c}, variables=(GEN,))
        rels.append(f.with_variables(pres.generators))
    out = []
    for values in itertools.product(*choices):
        if all(value_ring.is_zero(r.evaluate(values, value_ring)) for r in rels):
            out.append(values)
    return out


def polynomial_ring(generators, base=ZZ, laurent=()):
    return RingPresentation(base, generators, (), laurent)


def base_ring_from_spec(text):
    """Parse ``Z``, ``Z/m`` or ``GF(q)``."""
    t = text.replace(" ", "")
    if t in ("Z", "ZZ"):
        return ZZ
    if t.startswith("Z/"):
        return IntegersMod(int(t[2:]))
    if t.startswith("GF(") and t.endswith(")"):
        return GF(int(t[3:-1]))
    raise ValueError(f"unknown base ring {text!r}")
