"""Coefficient rings used throughout: the integers and integers modulo m.

Every ring object exposes the same small method surface (``zero``, ``one``,
``from_int``, ``add``, ``sub``, ``neg``, ``mul``, ``pow``, ``eq``,
``is_zero``); generic algorithms (Witt vectors, point enumeration) are
written against it.  Elements themselves are plain values -- ints here,
:class:`~wittlambda.algebra.finite_field.FiniteFieldElem` for finite fields,
normal-form :class:`~wittlambda.algebra.poly.Poly` for presentations.
"""

from __future__ import annotations

import math

from ..errors import ParseError


class Ring:
    name = "ring"
    characteristic = 0
    torsion_free = False
    finite = False
    plain_int = False

    def zero(self):
        return self.from_int(0)

    def one(self):
        return self.from_int(1)

    def from_int(self, n):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inverse(a), -n)
        result = self.one()
        while n:
            if n & 1:
                result = self.mul(result, a)
            n >>= 1
            if n:
                a = self.mul(a, a)
        return result

    def inverse(self, a):
        raise ValueError(f"{self.format(a)} is not invertible in {self.name}")

    def is_unit(self, a):
        try:
            self.inverse(a)
        except (ValueError, ZeroDivisionError):
            return False
        return True

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero())

    def sum(self, items):
        total = self.zero()
        for x in items:
            total = self.add(total, x)
        return total

    def scale(self, n, a):
        return self.mul(self.from_int(n), a)

    def elements(self):
        raise TypeError(f"{self.name} is not finite")

    def size(self):
        raise TypeError(f"{self.name} is not finite")

    def format(self, a):
        return str(a)

    def parse(self, text):
        raise NotImplementedError

    def evaluate(self, poly, values):
        return poly.evaluate(values, self)

    def __repr__(self):
        return self.name


class IntegerRing(Ring):
    name = "Z"
    torsion_free = True
    plain_int = True

    def from_int(self, n):
        return int(n)

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inverse(a), -n)
        return a**n

    def inverse(self, a):
        if a in (1, -1):
            return a
        raise ValueError(f"{a} is not a unit in Z")

    def is_zero(self, a):
        return a == 0

    def parse(self, text):
        try:
            return int(text.strip())
        except ValueError:
            raise ParseError(f"not an integer: {text!r}") from None

    def __eq__(self, other):
        return isinstance(other, IntegerRing)

    def __hash__(self):
        return hash("Z")


ZZ = IntegerRing()


class IntegersMod(Ring):
    finite = True

    def __init__(self, m):
        if m < 2:
            raise ValueError("modulus must be at least 2")
        self.m = m
        self.characteristic = m
        self.name = f"Z/{m}"

    def from_int(self, n):
        return int(n) % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def sub(self, a, b):
        return (a - b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def pow(self, a, n):
        if n < 0:
            return pow(self.inverse(a), -n, self.m)
        return pow(a, n, self.m)

    def inverse(self, a):
        if math.gcd(a, self.m) != 1:
            raise ValueError(f"{a} is not a unit mod {self.m}")
        return pow(a, -1, self.m)

    def is_zero(self, a):
        return a % self.m == 0

    def elements(self):
        return list(range(self.m))

    def size(self):
        return self.m

    def is_field(self):
        return is_prime(self.m)

    def parse(self, text):
        try:
            return int(text.strip()) % self.m
        except ValueError:
            raise ParseError(f"not an integer: {text!r}") from None

    def __eq__(self, other):
        return isinstance(other, IntegersMod) and other.m == self.m

    def __hash__(self):
        return hash(("Z/", self.m))


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(n):
    return [p for p in range(2, n + 1) if is_prime(p)]


def prime_factors(n):
    """Prime factors of ``n`` with multiplicity, ascending."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q):
    """Return ``(p, e)`` with ``q == p**e``, or raise ValueError."""
    fs = prime_factors(q) if q > 1 else []
    if not fs or len(set(fs)) != 1:
        raise ValueError(f"{q} is not a prime power")
    return fs[0], len(fs)


def divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]
