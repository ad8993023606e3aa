"""Finite fields F_q, q = p^e, as F_p[w]/(f(w)) for a fixed irreducible f.

Elements are encoded by the integer ``sum(c_i * p**i)`` of their
representative coefficients; multiplication goes through exp/log tables
built once per field.  ``GF(q)`` is cached, so each field (and its chosen
modulus) is created once and then only read.
"""

from __future__ import annotations

import functools
import itertools

from ..errors import ParseError
from .poly import Poly
from .rings import Ring, prime_power

GEN = "w"


# -- dense univariate arithmetic over F_p (ascending coefficient lists) -----


def _trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def fp_poly_mod(a, b, p):
    a = list(a)
    _trim(a)
    db = len(b) - 1
    inv = pow(b[-1], -1, p)
    while len(a) - 1 >= db and a:
        c = (a[-1] * inv) % p
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bc) % p
        _trim(a)
    return a


def fp_monic_polys(p, d):
    """All monic polynomials of degree ``d`` over F_p, lexicographic in
    (c_0, c_1, ...) with c_0 varying fastest."""
    for tail in itertools.product(range(p), repeat=d):
        yield list(tail) + [1]


def fp_is_irreducible(f, p):
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    for k in range(1, d // 2 + 1):
        for g in fp_monic_polys(p, k):
            if not fp_poly_mod(f, g, p):
                return False
    return True


@functools.cache
def irreducible_polynomial(p, e):
    """The fixed degree-``e`` modulus for F_{p^e}: first monic irreducible in
    the order of ``sum(c_i * p**i)`` over its lower coefficients."""
    if e == 1:
        return (0, 1)
    for code in range(p**e):
        low = [(code // p**i) % p for i in range(e)]
        f = low + [1]
        if f[0] == 0:
            continue
        if fp_is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class FiniteFieldElem:
    __slots__ = ("field", "code")

    def __init__(self, field, code):
        self.field = field
        self.code = code

    def _lift(self, other):
        if isinstance(other, FiniteFieldElem):
            if other.field is not self.field:
                raise ValueError("elements of different fields")
            return other
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.sub(self, other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.sub(other, self)

    def __neg__(self):
        return self.field.neg(self)

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self.field.mul(self, self.field.inverse(other))

    def __pow__(self, n):
        return self.field.pow(self, n)

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.from_int(other)
        if not isinstance(other, FiniteFieldElem):
            return NotImplemented
        return self.field.q == other.field.q and self.code == other.code

    def __hash__(self):
        return hash((self.field.q, self.code))

    def __bool__(self):
        return self.code != 0

    @property
    def characteristic(self):
        return self.field.p

    @property
    def degree(self):
        return self.field.e

    def coefficients(self):
        return self.field.digits(self.code)

    def poly(self):
        """Representative polynomial in ``w`` of degree < e."""
        digits = self.coefficients()
        return Poly({(i,): c for i, c in enumerate(digits) if c}, variables=(GEN,))

    def __str__(self):
        return self.field.format(self)

    def __repr__(self):
        return f"GF({self.field.q})({self.field.format(self)})"


class FiniteField(Ring):
    finite = True

    def __init__(self, q):
        p, e = prime_power(q)
        self.p, self.e, self.q = p, e, q
        self.characteristic = p
        self.name = f"GF({q})"
        self.modulus = irreducible_polynomial(p, e)
        self._elems = [FiniteFieldElem(self, c) for c in range(q)]
        self._build_tables()

    # -- encoding ---------------------------------------------------------

    def digits(self, code):
        return [(code // self.p**i) % self.p for i in range(self.e)]

    def encode(self, digits):
        code = 0
        for i, d in enumerate(digits[: self.e]):
            code += (d % self.p) * self.p**i
        return code

    def _poly_mulmod(self, a, b):
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        r = fp_poly_mod(prod, list(self.modulus), p)
        return r + [0] * (e - len(r))

    def _build_tables(self):
        q = self.q
        # primitive element: smallest code whose powers reach every unit
        for g in range(1, q):
            exp = [0] * (q - 1)
            cur = [1] + [0] * (self.e - 1)
            gd = self.digits(g)
            seen = set()
            ok = True
            for k in range(q - 1):
                c = self.encode(cur)
                if c in seen:
                    ok = False
                    break
                seen.add(c)
                exp[k] = c
                cur = self._poly_mulmod(cur, gd)
            if ok and len(seen) == q - 1:
                break
        self._exp = exp
        self._log = [None] * q
        for k, c in enumerate(exp):
            self._log[c] = k
        if q <= 256:
            self._add = [[self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])
                          for b in range(q)] for a in range(q)]
        else:
            self._add = None

    # -- ring interface ---------------------------------------------------

    def elem(self, code):
        return self._elems[code]

    def from_int(self, n):
        return self._elems[int(n) % self.p]

    def zero(self):
        return self._elems[0]

    def one(self):
        return self._elems[1]

    def gen(self):
        """The class of ``w`` (a root of the fixed modulus)."""
        if self.e == 1:
            raise ValueError(f"GF({self.q}) is a prime field; it has no generator w")
        return self._elems[self.p]

    def _add_codes(self, a, b):
        if self._add is not None:
            return self._add[a][b]
        return self.encode([x + y for x, y in zip(self.digits(a), self.digits(b))])

    def add(self, a, b):
        return self._elems[self._add_codes(a.code, b.code)]

    def neg(self, a):
        return self._elems[self.encode([-d for d in self.digits(a.code)])]

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a.code == 0 or b.code == 0:
            return self._elems[0]
        k = (self._log[a.code] + self._log[b.code]) % (self.q - 1)
        return self._elems[self._exp[k]]

    def pow(self, a, n):
        if a.code == 0:
            if n == 0:
                return self._elems[1]
            if n < 0:
                raise ZeroDivisionError("0 has no inverse")
            return a
        k = (self._log[a.code] * n) % (self.q - 1)
        return self._elems[self._exp[k]]

    def inverse(self, a):
        if a.code == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(a, -1)

    def eq(self, a, b):
        return a.code == b.code

    def is_zero(self, a):
        return a.code == 0

    def elements(self):
        return list(self._elems)

    def units(self):
        return self._elems[1:]

    def size(self):
        return self.q

    def frobenius(self, a, k=1):
        return self.pow(a, self.p**k)

    def subfield(self, q0):
        """Elements fixed by x -> x^q0, i.e. the subfield of order q0."""
        return [a for a in self._elems if self.pow(a, q0).code == a.code]

    def is_field(self):
        return True

    # -- text -------------------------------------------------------------

    def format(self, a):
        if self.e == 1:
            return str(a.code)
        return str(a.poly())

    def parse(self, text):
        from .parse import parse_poly

        poly = parse_poly(text, variables=(GEN,), laurent=())
        for c in poly.terms.values():
            if not isinstance(c, int):
                raise ParseError(f"non-integer coefficient in {text!r}")
        return self.from_poly(poly)

    def from_poly(self, poly):
        if self.e == 1:
            if not poly.is_constant():
                raise ParseError(f"GF({self.q}) elements are integers mod {self.p}")
            return self.from_int(poly.constant_value())
        return poly.with_variables((GEN,)).evaluate([self.gen()], self)

    def __eq__(self, other):
        return isinstance(other, FiniteField) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))

    def __reduce__(self):
        return (GF, (self.q,))


@functools.cache
def GF(q):
    """The finite field of order ``q`` (one cached instance per q)."""
    return FiniteField(q)
