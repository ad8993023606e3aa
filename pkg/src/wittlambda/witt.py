"""Big Witt vectors over divisor-closed truncation sets.

Ring operations are computed by evaluating universal integer polynomials
(sum, product, negation, Frobenius) that are built once over Z from the ghost
equations and cached.  Evaluating them in an arbitrary coefficient ring is
what makes the operations correct in rings with torsion, where the ghost map
is not injective.

p-typical vectors use the big-Witt indices ``1, p, p^2, ...``; index ``p^i``
here corresponds to the classical coordinate ``i``
(see :func:`classical_coordinates`).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .algebra.poly import Poly
from .algebra.rings import ZZ, IntegersMod, divisors, is_prime
from .errors import MismatchedTruncation, ParseError


@dataclass(frozen=True)
class TruncationSet:
    elements: tuple

    def __post_init__(self):
        els = tuple(sorted(set(int(n) for n in self.elements)))
        if any(n < 1 for n in els):
            raise ValueError("truncation sets contain positive integers only")
        present = set(els)
        for n in els:
            for d in divisors(n):
                if d not in present:
                    raise ValueError(f"{sorted(present)} is not divisor-closed: {d} | {n} missing")
        object.__setattr__(self, "elements", els)

    @classmethod
    def parse(cls, text):
        try:
            return cls(tuple(int(t) for t in text.replace(" ", "").split(",") if t))
        except ValueError as exc:
            raise ParseError(f"bad truncation set {text!r}: {exc}") from None

    @classmethod
    def upto(cls, n):
        return cls(tuple(range(1, n + 1)))

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, n):
        return n in self.elements

    def divided_by(self, n):
        """``S/n = {m : n*m in S}``."""
        return TruncationSet(tuple(m // n for m in self.elements if m % n == 0))

    def is_subset(self, other):
        return set(self.elements) <= set(other.elements)

    def __str__(self):
        return ",".join(map(str, self.elements))


def divisor_closed_subsets(n):
    """Every nonempty divisor-closed subset of ``{1..n}``."""
    divs = {k: [d for d in divisors(k) if d < k] for k in range(1, n + 1)}
    out = []

    def rec(k, chosen):
        if k > n:
            if chosen:
                out.append(TruncationSet(tuple(chosen)))
            return
        rec(k + 1, chosen)
        if all(d in chosen_set for d in divs[k]):
            chosen.append(k)
            chosen_set.add(k)
            rec(k + 1, chosen)
            chosen.pop()
            chosen_set.discard(k)

    chosen_set = set()
    rec(1, [])
    return out


def ptypical(p, k):
    """``{1, p, ..., p^(k-1)}``."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("length must be at least 1")
    return TruncationSet(tuple(p**i for i in range(k)))


# -- universal polynomials -------------------------------------------------


def _xvars(n, name="x"):
    return tuple(f"{name}{d}" for d in divisors(n))


def ghost_poly(n, name="x"):
    """``w_n = sum_{d | n} d * x_d^(n/d)`` as a polynomial."""
    variables = _xvars(n, name)
    terms = {}
    for i, d in enumerate(divisors(n)):
        e = [0] * len(variables)
        e[i] = n // d
        terms[tuple(e)] = d
    return Poly(terms, variables)


def _solve_ghost(n, target, lower, variables):
    """Coordinate ``n`` of the vector whose ghost components are ``target``,
    given the lower coordinates ``lower(d)`` for proper divisors d."""
    acc = target
    for d in divisors(n)[:-1]:
        acc = acc - lower(d) ** (n // d) * d
    return acc.with_variables(variables).exact_div(n)


@functools.cache
def universal_sum_poly(n):
    """Integer polynomial in ``x_d, y_d`` (d | n) giving coordinate n of x + y."""
    if n < 1:
        raise ValueError("n must be positive")
    variables = _xvars(n, "x") + _xvars(n, "y")
    return _solve_ghost(n, ghost_poly(n, "x") + ghost_poly(n, "y"), universal_sum_poly, variables)


@functools.cache
def universal_prod_poly(n):
    """Integer polynomial in ``x_d, y_d`` (d | n) giving coordinate n of x * y."""
    if n < 1:
        raise ValueError("n must be positive")
    variables = _xvars(n, "x") + _xvars(n, "y")
    return _solve_ghost(n, ghost_poly(n, "x") * ghost_poly(n, "y"), universal_prod_poly, variables)


@functools.cache
def universal_neg_poly(n):
    variables = _xvars(n, "x")
    return _solve_ghost(n, -ghost_poly(n, "x"), universal_neg_poly, variables)


@functools.cache
def universal_frobenius_poly(n, m):
    """Coordinate m of F_n(x), a polynomial in ``x_d`` for d | n*m."""
    variables = _xvars(n * m, "x")
    return _solve_ghost(
        m, ghost_poly(n * m, "x"), lambda d: universal_frobenius_poly(n, d), variables
    )


def clear_caches():
    for f in (universal_sum_poly, universal_prod_poly, universal_neg_poly, universal_frobenius_poly):
        f.cache_clear()


# -- vectors -------------------------------------------------------------------


class WittVector:
    __slots__ = ("trunc", "coords", "ring")

    def __init__(self, trunc, coords, ring=ZZ):
        if not isinstance(trunc, TruncationSet):
            trunc = TruncationSet(tuple(trunc))
        if isinstance(coords, dict):
            missing = set(trunc) - set(coords)
            if missing or set(coords) - set(trunc):
                raise MismatchedTruncation("coordinates must be given on exactly the truncation set")
            coords = [coords[n] for n in trunc]
        coords = tuple(coords)
        if len(coords) != len(trunc):
            raise MismatchedTruncation(f"{len(coords)} coordinates for truncation set {trunc}")
        self.trunc = trunc
        self.ring = ring
        self.coords = tuple(_normalize(ring, c) for c in coords)

    def __getitem__(self, n):
        return self.coords[self.trunc.elements.index(n)]

    def as_dict(self):
        return dict(zip(self.trunc, self.coords))

    def restrict(self, S):
        if not S.is_subset(self.trunc):
            raise MismatchedTruncation(f"{S} is not contained in {self.trunc}")
        d = self.as_dict()
        return WittVector(S, [d[n] for n in S], self.ring)

    def __eq__(self, other):
        if not isinstance(other, WittVector):
            return NotImplemented
        return (
            self.trunc == other.trunc
            and self.ring == other.ring
            and all(self.ring.eq(a, b) for a, b in zip(self.coords, other.coords))
        )

    def __hash__(self):
        return hash((self.trunc, tuple(str(c) for c in self.coords)))

    def __add__(self, other):
        return witt_add(self, other)

    def __mul__(self, other):
        return witt_mul(self, other)

    def __neg__(self):
        return witt_neg(self)

    def __sub__(self, other):
        return witt_add(self, witt_neg(other))

    def lines(self):
        return [f"{n}={self.ring.format(c)}" for n, c in zip(self.trunc, self.coords)]

    def __repr__(self):
        inner = ", ".join(f"{n}: {self.ring.format(c)}" for n, c in zip(self.trunc, self.coords))
        return f"WittVector({{{inner}}}, ring={self.ring.name})"


def _normalize(ring, c):
    if isinstance(c, int):
        return ring.from_int(c)
    if isinstance(c, Poly) and hasattr(ring, "normal_form"):
        return ring.normal_form(c)
    return c


@dataclass(frozen=True)
class GhostVector:
    trunc: TruncationSet
    values: tuple
    ring: object = ZZ

    def __getitem__(self, n):
        return self.values[self.trunc.elements.index(n)]

    def __add__(self, other):
        return GhostVector(self.trunc, tuple(self.ring.add(a, b) for a, b in zip(self.values, other.values)), self.ring)

    def __mul__(self, other):
        return GhostVector(self.trunc, tuple(self.ring.mul(a, b) for a, b in zip(self.values, other.values)), self.ring)

    def __eq__(self, other):
        if not isinstance(other, GhostVector):
            return NotImplemented
        return self.trunc == other.trunc and all(self.ring.eq(a, b) for a, b in zip(self.values, other.values))

    def __hash__(self):
        return hash((self.trunc, tuple(str(v) for v in self.values)))


def _check_same(u, v):
    if u.trunc != v.trunc:
        raise MismatchedTruncation(f"truncation sets differ: {u.trunc} vs {v.trunc}")
    if u.ring != v.ring:
        raise MismatchedTruncation(f"coefficient rings differ: {u.ring.name} vs {v.ring.name}")


def ghost(w):
    ring = w.ring
    d = w.as_dict()
    values = []
    for n in w.trunc:
        acc = ring.zero()
        for e in divisors(n):
            acc = ring.add(acc, ring.scale(e, ring.pow(d[e], n // e)))
        values.append(acc)
    return GhostVector(w.trunc, tuple(values), ring)


def _binary(u, v, poly_for):
    _check_same(u, v)
    ring = u.ring
    du, dv = u.as_dict(), v.as_dict()
    out = []
    for n in u.trunc:
        divs = divisors(n)
        values = [du[d] for d in divs] + [dv[d] for d in divs]
        out.append(poly_for(n).evaluate(values, ring))
    return WittVector(u.trunc, out, ring)


def witt_add(u, v):
    return _binary(u, v, universal_sum_poly)


def witt_mul(u, v):
    return _binary(u, v, universal_prod_poly)


def witt_neg(u):
    ring = u.ring
    du = u.as_dict()
    out = [universal_neg_poly(n).evaluate([du[d] for d in divisors(n)], ring) for n in u.trunc]
    return WittVector(u.trunc, out, ring)


def witt_sub(u, v):
    return witt_add(u, witt_neg(v))


def witt_zero(S, ring=ZZ):
    return WittVector(S, [ring.zero()] * len(S), ring)


def witt_one(S, ring=ZZ):
    return teichmuller(ring.one(), S, ring)


def teichmuller(a, S, ring=ZZ):
    """``[a] = (a, 0, 0, ...)``."""
    if not isinstance(S, TruncationSet):
        S = TruncationSet(tuple(S))
    return WittVector(S, [a if n == 1 else ring.zero() for n in S], ring)


def witt_scale(k, w):
    """``k * w`` for an integer k, by double-and-add."""
    if k < 0:
        return witt_scale(-k, witt_neg(w))
    result = witt_zero(w.trunc, w.ring)
    base = w
    while k:
        if k & 1:
            result = witt_add(result, base)
        k >>= 1
        if k:
            base = witt_add(base, base)
    return result


def frobenius(n, w):
    """F_n: W_S -> W_{S/n}, with ghost(F_n w)_m = ghost(w)_{nm}."""
    target = w.trunc.divided_by(n)
    ring = w.ring
    d = w.as_dict()
    out = [
        universal_frobenius_poly(n, m).evaluate([d[e] for e in divisors(n * m)], ring)
        for m in target
    ]
    return WittVector(target, out, ring)


def verschiebung(n, w, S):
    """V_n: W_{S/n} -> W_S, ``(V_n w)_m = w_{m/n}`` if n | m else 0."""
    if not isinstance(S, TruncationSet):
        S = TruncationSet(tuple(S))
    if S.divided_by(n) != w.trunc:
        raise MismatchedTruncation(f"input truncation {w.trunc} must equal S/{n} = {S.divided_by(n)}")
    d = w.as_dict()
    ring = w.ring
    return WittVector(S, [d[m // n] if m % n == 0 else ring.zero() for m in S], ring)


def ptypical_ring_order(p, k, ring=None):
    """Additive order of 1 in W_{ptypical(p, k)}(F_p)."""
    ring = ring or IntegersMod(p)
    S = ptypical(p, k)
    one = witt_one(S, ring)
    zero = witt_zero(S, ring)
    acc = one
    order = 1
    limit = p ** (k + 1)
    while acc != zero:
        acc = witt_add(acc, one)
        order += 1
        if order > limit:
            raise ArithmeticError("additive order exceeds p^(k+1)")
    return order


def classical_coordinates(w, p):
    """Coordinates ``(w_1, w_p, w_{p^2}, ...)`` in classical p-typical indexing."""
    out = []
    k = 0
    while p**k in w.trunc:
        out.append(w[p**k])
        k += 1
    return out
