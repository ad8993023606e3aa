"""Sparse multivariate (Laurent-capable) polynomials with exact coefficients.

Terms are stored as ``{exponent tuple: coefficient}`` over an ordered tuple of
variable names.  Coefficients are Python ints or :class:`fractions.Fraction`;
zero coefficients are never stored.  Polynomials over different variable lists
are aligned on the fly, so ``x + y`` works without declaring a common ring.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from ..errors import NonIntegralDivision


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def grlex_key(exps):
    return (sum(exps), exps)


class Poly:
    __slots__ = ("variables", "laurent", "terms", "_key", "_sparse")

    def __init__(self, terms=None, variables=(), laurent=()):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variables in {variables}")
        laurent = frozenset(laurent)
        n = len(variables)
        clean = {}
        for exps, c in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} does not match {variables}")
            if c:
                clean[exps] = clean.get(exps, 0) + c
        clean = {e: _norm(c) for e, c in clean.items() if c}
        for exps in clean:
            for v, e in zip(variables, exps):
                if e < 0 and v not in laurent:
                    raise ValueError(f"negative exponent on non-Laurent variable {v}")
        self._init(variables, laurent, clean)

    def _init(self, variables, laurent, terms):
        self.variables = variables
        self.laurent = laurent
        self.terms = terms
        self._key = None
        self._sparse = None

    @classmethod
    def _make(cls, variables, laurent, terms):
        p = cls.__new__(cls)
        p._init(variables, laurent, terms)
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, c, variables=(), laurent=()):
        variables = tuple(variables)
        c = _norm(c)
        terms = {(0,) * len(variables): c} if c else {}
        return cls._make(variables, frozenset(laurent), terms)

    @classmethod
    def zero(cls, variables=(), laurent=()):
        return cls._make(tuple(variables), frozenset(laurent), {})

    @classmethod
    def var(cls, name, variables=None, laurent=False):
        if variables is None:
            variables = (name,)
        variables = tuple(variables)
        exps = tuple(1 if v == name else 0 for v in variables)
        if 1 not in exps:
            raise ValueError(f"{name} not among {variables}")
        lau = frozenset([name]) if laurent else frozenset()
        return cls._make(variables, lau, {exps: 1})

    @classmethod
    def monomial(cls, powers, coeff=1, variables=None, laurent=()):
        """``powers`` maps variable name to exponent."""
        if variables is None:
            variables = tuple(powers)
        variables = tuple(variables)
        exps = tuple(powers.get(v, 0) for v in variables)
        lau = frozenset(laurent) | frozenset(v for v, e in powers.items() if e < 0)
        return cls(terms={exps: coeff}, variables=variables, laurent=lau)

    # -- alignment --------------------------------------------------------

    def with_variables(self, variables, laurent=None):
        """Re-express over ``variables`` (a superset of the used variables)."""
        variables = tuple(variables)
        lau = self.laurent if laurent is None else frozenset(laurent) | self.laurent
        if variables == self.variables:
            return self if lau == self.laurent else Poly._make(variables, lau, self.terms)
        index = {v: i for i, v in enumerate(variables)}
        pos = []
        for i, v in enumerate(self.variables):
            if v in index:
                pos.append(index[v])
            else:
                if any(e[i] for e in self.terms):
                    raise ValueError(f"variable {v} is used but not in {variables}")
                pos.append(None)
        n = len(variables)
        terms = {}
        for exps, c in self.terms.items():
            new = [0] * n
            for i, e in enumerate(exps):
                if e:
                    new[pos[i]] = e
            terms[tuple(new)] = c
        return Poly._make(variables, lau, terms)

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Rational)):
            return Poly.const(other, self.variables, self.laurent)
        return NotImplemented

    def _align(self, other):
        if self.variables == other.variables:
            return self.variables, self.terms, other.terms, self.laurent | other.laurent
        variables = self.variables + tuple(v for v in other.variables if v not in self.variables)
        lau = self.laurent | other.laurent
        return (
            variables,
            self.with_variables(variables).terms,
            other.with_variables(variables).terms,
            lau,
        )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        variables, a, b, lau = self._align(other)
        terms = dict(a)
        for e, c in b.items():
            s = terms.get(e, 0) + c
            if s:
                terms[e] = _norm(s)
            else:
                terms.pop(e, None)
        return Poly._make(variables, lau, terms)

    __radd__ = __add__

    def __neg__(self):
        return Poly._make(self.variables, self.laurent, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, bool):
            if not other:
                return Poly.zero(self.variables, self.laurent)
            return Poly._make(
                self.variables, self.laurent, {e: _norm(c * other) for e, c in self.terms.items()}
            )
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        variables, a, b, lau = self._align(other)
        if len(a) > len(b):
            a, b = b, a
        terms = {}
        get = terms.get
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple([x + y for x, y in zip(ea, eb)])
                terms[e] = get(e, 0) + ca * cb
        return Poly._make(variables, lau, {e: _norm(c) for e, c in terms.items() if c})

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            inv = self.monomial_inverse()
            return inv ** (-n)
        result = Poly.const(1, self.variables, self.laurent)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def monomial_inverse(self):
        """Inverse of a +-1 multiple of a monomial in Laurent variables."""
        if len(self.terms) != 1:
            raise ValueError(f"{self} is not an invertible monomial")
        (exps, c), = self.terms.items()
        if c not in (1, -1):
            raise ValueError(f"{self} is not an invertible monomial")
        for v, e in zip(self.variables, exps):
            if e and v not in self.laurent:
                raise ValueError(f"{self} is not a unit: {v} is not a Laurent variable")
        return Poly._make(self.variables, self.laurent, {tuple(-e for e in exps): c})

    def exact_div(self, n):
        """Divide every coefficient by the integer ``n``; raise if any is not divisible."""
        if n == 0:
            raise ZeroDivisionError("exact_div by zero")
        terms = {}
        for e, c in self.terms.items():
            if isinstance(c, int):
                q, r = divmod(c, n)
                if r:
                    raise NonIntegralDivision(c, n)
                terms[e] = q
            else:
                q = Fraction(c) / n
                if q.denominator != 1:
                    raise NonIntegralDivision(c, n)
                terms[e] = int(q)
        return Poly._make(self.variables, self.laurent, terms)

    # -- comparison -------------------------------------------------------

    def canonical(self):
        """Variable-list independent form: sorted ((name, exp), ...) -> coeff pairs."""
        if self._key is None:
            items = []
            for exps, c in self.terms.items():
                mono = tuple((v, e) for v, e in zip(self.variables, exps) if e)
                items.append((tuple(sorted(mono)), c))
            items.sort()
            self._key = tuple(items)
        return self._key

    def __eq__(self, other):
        if isinstance(other, (int, Rational)) and not isinstance(other, Poly):
            other = Poly.const(other)
        if not isinstance(other, Poly):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def __bool__(self):
        return bool(self.terms)

    # -- inspection -------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not any(e) for e in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * len(self.variables), 0)

    def used_variables(self):
        used = set()
        for exps in self.terms:
            used.update(v for v, e in zip(self.variables, exps) if e)
        return [v for v in self.variables if v in used]

    def total_degree(self):
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def degree(self, var):
        if var not in self.variables:
            return 0 if self.terms else -1
        i = self.variables.index(var)
        if not self.terms:
            return -1
        return max(e[i] for e in self.terms)

    def min_degree(self, var):
        i = self.variables.index(var)
        return min(e[i] for e in self.terms)

    def sorted_terms(self):
        """Terms in descending graded-lexicographic order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def coefficient(self, powers):
        exps = tuple(powers.get(v, 0) for v in self.variables)
        return self.terms.get(exps, 0)

    def univariate_coefficients(self, var):
        """Coefficient list (ascending) of a polynomial in the single variable ``var``."""
        i = self.variables.index(var) if var in self.variables else None
        out = {}
        for exps, c in self.terms.items():
            for j, e in enumerate(exps):
                if j != i and e:
                    raise ValueError(f"{self} is not univariate in {var}")
            k = exps[i] if i is not None else 0
            if k < 0:
                raise ValueError(f"{self} has negative powers of {var}")
            out[k] = c
        if not out:
            return []
        return [out.get(k, 0) for k in range(max(out) + 1)]

    # -- transformations --------------------------------------------------

    def map_coefficients(self, f):
        return Poly._make(
            self.variables,
            self.laurent,
            {e: _norm(f(c)) for e, c in self.terms.items() if f(c)},
        )

    def derivative(self, var):
        if var not in self.variables:
            return Poly.zero(self.variables, self.laurent)
        i = self.variables.index(var)
        terms = {}
        for exps, c in self.terms.items():
            if exps[i]:
                e = list(exps)
                e[i] -= 1
                terms[tuple(e)] = c * exps[i]
        return Poly._make(self.variables, self.laurent, terms)

    def rename(self, mapping):
        variables = tuple(mapping.get(v, v) for v in self.variables)
        lau = frozenset(mapping.get(v, v) for v in self.laurent)
        return Poly._make(variables, lau, dict(self.terms))

    def subs(self, images, one=None, inverses=None):
        """Substitute ``images[name]`` (Polys) for variables; others stay.

        Negative exponents use ``inverses[name]`` if given, else the image's
        monomial inverse.
        """
        inverses = dict(inverses or {})
        one = one if one is not None else Poly.const(1)
        result = Poly.zero()
        cache = {}

        def power(v, e):
            key = (v, e)
            if key not in cache:
                if v in images:
                    if e >= 0:
                        cache[key] = images[v] ** e
                    else:
                        if v not in inverses:
                            inverses[v] = images[v].monomial_inverse()
                        cache[key] = inverses[v] ** (-e)
                else:
                    cache[key] = Poly.monomial({v: e}, laurent=self.laurent & {v})
            return cache[key]

        for exps, c in self.terms.items():
            t = one * c
            for v, e in zip(self.variables, exps):
                if e:
                    t = t * power(v, e)
            result = result + t
        return result

    def _sparse_terms(self):
        if self._sparse is None:
            self._sparse = [
                (c, tuple((i, e) for i, e in enumerate(exps) if e)) for exps, c in self.terms.items()
            ]
        return self._sparse

    def evaluate(self, values, ring=None):
        """Evaluate at ``values`` (mapping name -> element, or sequence aligned
        with ``self.variables``) in ``ring``; plain integer arithmetic when
        ``ring`` is None."""
        if isinstance(values, dict):
            vals = [values.get(v) for v in self.variables]
            for v, x in zip(self.variables, vals):
                if x is None and self.degree(v) != 0 and any(
                    e[self.variables.index(v)] for e in self.terms
                ):
                    raise KeyError(f"no value for {v}")
        else:
            vals = list(values)
            if len(vals) != len(self.variables):
                raise ValueError("value count does not match variables")
        sparse = self._sparse_terms()
        if ring is None or getattr(ring, "plain_int", False):
            powers = [{} for _ in vals]
            total = 0
            for c, mono in sparse:
                factors = [c]
                for i, e in mono:
                    p = powers[i].get(e)
                    if p is None:
                        p = vals[i] ** e if e > 0 else Fraction(1, vals[i]) ** (-e)
                        powers[i][e] = p
                    factors.append(p)
                total += math.prod(factors)
            return _norm(total)
        powers = [{} for _ in vals]
        total = ring.zero()
        for c, mono in sparse:
            t = ring.from_int(c)
            for i, e in mono:
                p = powers[i].get(e)
                if p is None:
                    if e > 0:
                        p = ring.pow(vals[i], e)
                    else:
                        p = ring.pow(ring.inverse(vals[i]), -e)
                    powers[i][e] = p
                t = ring.mul(t, p)
            total = ring.add(total, t)
        return total

    # -- printing ---------------------------------------------------------

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


def _format_monomial(variables, exps):
    parts = []
    for v, e in zip(variables, exps):
        if e == 1:
            parts.append(v)
        elif e:
            parts.append(f"{v}^{e}")
    return "*".join(parts)


def format_poly(p, coeff_format=str):
    """Render in descending grlex order with explicit ``*`` and ``^``."""
    if not p.terms:
        return "0"
    out = []
    for exps, c in p.sorted_terms():
        mono = _format_monomial(p.variables, exps)
        neg = c < 0
        a = -c if neg else c
        if mono:
            body = mono if a == 1 else f"{coeff_format(a)}*{mono}"
        else:
            body = coeff_format(a)
        if isinstance(a, Fraction) and not mono:
            body = f"({body})"
        if not out:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)
