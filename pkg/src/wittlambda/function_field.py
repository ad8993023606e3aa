"""F_q[t], twisted polynomials, the Carlitz module and Moore determinants.

The twisted ring R{τ} over an F_q-algebra R has τ·a = a^q·τ.  The Carlitz
module is the ring map ρ: F_q[t] -> F_q[t]{τ} with ρ(t) = t + τ; for a monic
irreducible m, ρ(m) reduces to τ^(deg m) modulo m, i.e. it lifts the
q^(deg m)-power Frobenius of F_q[t]/(m).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .algebra.finite_field import GEN, GF
from .algebra.parse import parse_poly
from .errors import NotIrreducible, ParseError
from .report import Report


class FqPoly:
    """Sparse polynomial in t over a finite field: {exponent: nonzero element}."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=None):
        self.field = field
        out = {}
        for e, c in (coeffs or {}).items():
            if isinstance(c, int):
                c = field.from_int(c)
            if not field.is_zero(c):
                out[int(e)] = c
        self.coeffs = out

    @classmethod
    def t(cls, field):
        return cls(field, {1: field.one()})

    @classmethod
    def const(cls, field, c):
        return cls(field, {0: c})

    @classmethod
    def parse(cls, field, text):
        names = ("t",) if field.e == 1 else ("t", GEN)
        poly = parse_poly(text, variables=names, laurent=())
        coeffs = {}
        for exps, c in poly.terms.items():
            if not isinstance(c, int):
                raise ParseError(f"non-integer coefficient in {text!r}")
            val = field.from_int(c)
            if len(exps) > 1 and exps[1]:
                val = field.mul(val, field.pow(field.gen(), exps[1]))
            coeffs[exps[0]] = field.add(coeffs.get(exps[0], field.zero()), val)
        return cls(field, coeffs)

    def degree(self):
        return max(self.coeffs, default=-1)

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[self.degree()] if self.coeffs else self.field.zero()

    def is_monic(self):
        return bool(self.coeffs) and self.leading() == self.field.one()

    def __add__(self, other):
        other = self._lift(other)
        f = self.field
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = f.add(out[e], c) if e in out else c
        return FqPoly(f, out)

    __radd__ = __add__

    def __neg__(self):
        return FqPoly(self.field, {e: self.field.neg(c) for e, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        f = self.field
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                prod = f.mul(c1, c2)
                out[e] = f.add(out[e], prod) if e in out else prod
        return FqPoly(f, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        result = FqPoly(self.field, {0: self.field.one()})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def _lift(self, other):
        if isinstance(other, FqPoly):
            if other.field != self.field:
                raise ValueError("polynomials over different fields")
            return other
        if isinstance(other, int):
            return FqPoly(self.field, {0: self.field.from_int(other)})
        return FqPoly(self.field, {0: other})

    def divmod(self, other):
        other = self._lift(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        f = self.field
        inv = f.inverse(other.leading())
        d = other.degree()
        rem = dict(self.coeffs)
        quo = {}
        while rem and max(rem) >= d:
            top = max(rem)
            c = f.mul(rem[top], inv)
            quo[top - d] = c
            for e, oc in other.coeffs.items():
                k = e + top - d
                v = f.sub(rem.get(k, f.zero()), f.mul(c, oc))
                if f.is_zero(v):
                    rem.pop(k, None)
                else:
                    rem[k] = v
        return FqPoly(f, quo), FqPoly(f, rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def frobenius(self, q):
        """Coefficientwise a -> a^q together with t -> t^q, i.e. f -> f^q."""
        return self**q

    def evaluate(self, x):
        f = self.field
        total = f.zero()
        for e, c in self.coeffs.items():
            total = f.add(total, f.mul(c, f.pow(x, e)))
        return total

    def __eq__(self, other):
        if isinstance(other, int):
            other = self._lift(other)
        if not isinstance(other, FqPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.q, tuple(sorted((e, c.code) for e, c in self.coeffs.items()))))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs, reverse=True):
            c = self.coeffs[e]
            cs = self.field.format(c)
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mono:
                parts.append(cs if self.field.e == 1 or len(c.poly().terms) == 1 else f"({cs})")
            elif c == self.field.one():
                parts.append(mono)
            elif self.field.e > 1 and len(c.poly().terms) > 1:
                parts.append(f"({cs})*{mono}")
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)

    def __repr__(self):
        return f"FqPoly[GF({self.field.q})]({self})"


def monic_polys(field, d):
    """All monic polynomials of degree d, in code order of the lower coefficients."""
    elems = field.elements()
    for low in itertools.product(elems, repeat=d):
        coeffs = {i: c for i, c in enumerate(low)}
        coeffs[d] = field.one()
        yield FqPoly(field, coeffs)


def is_irreducible(f):
    d = f.degree()
    if d < 1:
        return False
    for k in range(1, d // 2 + 1):
        for g in monic_polys(f.field, k):
            if (f % g).is_zero():
                return False
    return True


def monic_irreducibles(field, d):
    return [f for f in monic_polys(field, d) if is_irreducible(f)]


# -- twisted polynomials -----------------------------------------------------------


class TwistedPoly:
    """sum_i a_i τ^i with coefficients in an F_q-algebra, τ·a = a^q·τ.

    ``power`` computes a^q for a coefficient; coefficients are either
    :class:`FqPoly` or finite field elements.
    """

    __slots__ = ("q", "coeffs", "zero")

    def __init__(self, q, coeffs, zero):
        coeffs = list(coeffs)
        while coeffs and _is_zero(coeffs[-1]):
            coeffs.pop()
        self.q = q
        self.coeffs = tuple(coeffs)
        self.zero = zero

    def degree(self):
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.zero

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return TwistedPoly(self.q, [self[i] + other[i] for i in range(n)], self.zero)

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return TwistedPoly(self.q, [self[i] - other[i] for i in range(n)], self.zero)

    def __mul__(self, other):
        return twisted_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, TwistedPoly) and self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if _is_zero(c):
                continue
            tau = "" if i == 0 else ("tau" if i == 1 else f"tau^{i}")
            cs = str(c)
            if not tau:
                parts.append(cs)
            elif cs == "1":
                parts.append(tau)
            else:
                parts.append(f"({cs})*{tau}" if " " in cs else f"{cs}*{tau}")
        return " + ".join(parts)

    __repr__ = __str__


def _is_zero(c):
    if isinstance(c, FqPoly):
        return c.is_zero()
    return c == 0


def twisted_mul(f, g):
    """(sum a_i τ^i)(sum b_j τ^j) = sum a_i b_j^(q^i) τ^(i+j)."""
    if f.q != g.q:
        raise ValueError("twisted polynomials over different bases")
    q = f.q
    n = len(f.coeffs) + len(g.coeffs) - 1
    out = [f.zero] * max(n, 0)
    for j, b in enumerate(g.coeffs):
        twisted = b
        for i, a in enumerate(f.coeffs):
            if i:
                twisted = twisted**q
            out[i + j] = out[i + j] + a * twisted
    return TwistedPoly(q, out, f.zero)


def carlitz_t(field):
    t = FqPoly.t(field)
    return TwistedPoly(field.q, [t, FqPoly.const(field, field.one())], FqPoly(field))


def carlitz_rho(f):
    """ρ(f) for f in F_q[t], by Horner's rule in ρ(t) = t + τ."""
    field = f.field
    zero = FqPoly(field)
    rho_t = carlitz_t(field)
    result = TwistedPoly(field.q, [], zero)
    for e in range(f.degree(), -1, -1):
        result = twisted_mul(result, rho_t)
        c = f.coeffs.get(e)
        if c is not None:
            result = result + TwistedPoly(field.q, [FqPoly.const(field, c)], zero)
    return result


def verify_carlitz_frobenius_lift(m, partners=(), rng=None, samples=0):
    """Check ρ(m) ≡ τ^(deg m) (mod m) coefficientwise, plus commutation of
    ρ(m) with ρ(m') for each m' in ``partners``."""
    if not m.is_monic() or not is_irreducible(m):
        raise NotIrreducible(f"{m} is not a monic irreducible polynomial")
    rep = Report()
    d = m.degree()
    rho = carlitz_rho(m)
    bad = [i for i in range(d) if not (rho[i] % m).is_zero()]
    rep.record(
        f"rho({m}) coefficients below tau^{d} divisible by m",
        not bad,
        ", ".join(f"a_{i} = {rho[i]} (mod m: {rho[i] % m})" for i in bad),
    )
    lead = rho[d] - FqPoly.const(m.field, m.field.one())
    rep.record(f"rho({m}) coefficient of tau^{d} is 1 mod m", (lead % m).is_zero(), f"a_{d} = {rho[d]}")
    rep.record(f"rho({m}) has degree {d} in tau", rho.degree() == d, f"degree {rho.degree()}")
    rep.value(f"tau^0 coefficient of rho({m})", rho[0])
    for other in partners:
        r2 = carlitz_rho(other)
        rep.record(
            f"psi_({m}) psi_({other}) = psi_({other}) psi_({m})",
            twisted_mul(rho, r2) == twisted_mul(r2, rho),
            "products differ",
        )
    return rep


# -- Moore matrices ----------------------------------------------------------------


@dataclass(frozen=True)
class MooreMatrix:
    """Entries a_j^(q^i), i = 0..d-1, over F_(q^k)."""

    field: object
    q: int
    vector: tuple

    @property
    def entries(self):
        f = self.field
        d = len(self.vector)
        return [[f.pow(a, self.q**i) for a in self.vector] for i in range(d)]


def field_det(M, field):
    """Determinant by Gaussian elimination over a field."""
    n = len(M)
    A = [list(row) for row in M]
    det = field.one()
    for col in range(n):
        pivot = next((r for r in range(col, n) if not field.is_zero(A[r][col])), None)
        if pivot is None:
            return field.zero()
        if pivot != col:
            A[col], A[pivot] = A[pivot], A[col]
            det = field.neg(det)
        det = field.mul(det, A[col][col])
        inv = field.inverse(A[col][col])
        for r in range(col + 1, n):
            if field.is_zero(A[r][col]):
                continue
            factor = field.mul(A[r][col], inv)
            A[r] = [field.sub(x, field.mul(factor, y)) for x, y in zip(A[r], A[col])]
    return det


def moore_det(vector, q, field=None):
    """det(a_j^(q^i)) for a vector over F_(q^k)."""
    vector = tuple(vector)
    if not vector:
        raise ValueError("need at least one entry")
    field = field or vector[0].field
    return field_det(MooreMatrix(field, q, vector).entries, field)


def find_dependence(vector, q, field=None):
    """A nonzero c in F_q^d with sum c_j a_j = 0, or None (brute force)."""
    field = field or vector[0].field
    sub = field.subfield(q)
    for cs in itertools.product(sub, repeat=len(vector)):
        if all(field.is_zero(c) for c in cs):
            continue
        total = field.zero()
        for c, a in zip(cs, vector):
            total = field.add(total, field.mul(c, a))
        if field.is_zero(total):
            return cs
    return None


def random_fq_poly(field, max_degree, rng):
    d = rng.randint(0, max_degree)
    elems = field.elements()
    return FqPoly(field, {i: rng.choice(elems) for i in range(d + 1)})


def check_rho_multiplicative(q, pairs, max_degree, seed):
    """ρ(fg) = ρ(f)ρ(g) and ρ(f+g) = ρ(f)+ρ(g) on random pairs."""
    rng = random.Random(seed)
    field = GF(q)
    rep = Report()
    bad = ""
    for _ in range(pairs):
        f = random_fq_poly(field, max_degree, rng)
        g = random_fq_poly(field, max_degree, rng)
        if carlitz_rho(f * g) != twisted_mul(carlitz_rho(f), carlitz_rho(g)):
            bad = f"f = {f}, g = {g}: rho(fg) != rho(f)rho(g)"
            break
        if carlitz_rho(f + g) != carlitz_rho(f) + carlitz_rho(g):
            bad = f"f = {f}, g = {g}: rho(f+g) != rho(f)+rho(g)"
            break
    rep.record(f"rho multiplicative and additive on {pairs} random pairs over GF({q})", not bad, bad)
    return rep
