"""λ-operations from Adams operations, and the e/p bases of symmetric functions.

Both directions use Newton's identity ``n*e_n = sum_{i=1}^n (-1)^(i-1) e_{n-i} p_i``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..algebra.poly import Poly
from ..errors import TorsionBase
from .structure import apply_psi


def lambda_from_psi(L, n, a):
    """λ_n(a), from n*λ_n = sum_{i=1}^n (-1)^(i-1) λ_{n-i} ψ_i.

    Needs a torsion-free base; every division is exact or raises
    :class:`~wittlambda.errors.NonIntegralDivision`.
    """
    ring = L.ring
    if not ring.torsion_free:
        raise TorsionBase(f"lambda operations need a torsion-free base, got {ring.base.name}")
    if n < 0:
        raise ValueError("n must be non-negative")
    a = ring.element(a)
    lam = [ring.one()]
    psi = [None] + [apply_psi(L, i, a) for i in range(1, n + 1)]
    for k in range(1, n + 1):
        acc = ring.zero()
        for i in range(1, k + 1):
            term = lam[k - i] * psi[i]
            acc = acc + term if i % 2 else acc - term
        lam.append(ring.normal_form(ring.normal_form(acc).exact_div(k)))
    return lam[n]


BASES = ("e", "p")


def _names(basis, N):
    return tuple(f"{basis}{i}" for i in range(1, N + 1))


def _weighted_degree(poly):
    return max((sum(i * e for i, e in enumerate(exps, 1)) for exps in poly.terms), default=0)


@dataclass(frozen=True)
class SymFun:
    """A symmetric function of degree <= N written in the e- or p-basis."""

    poly: Poly
    basis: str
    N: int

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"basis must be one of {BASES}")
        names = _names(self.basis, self.N)
        extra = set(self.poly.used_variables()) - set(names)
        if extra:
            raise ValueError(f"variables {sorted(extra)} are not in the {self.basis}-basis up to {self.N}")
        poly = self.poly.with_variables(names)
        if _weighted_degree(poly) > self.N:
            raise ValueError(f"degree {_weighted_degree(poly)} exceeds bound {self.N}")
        object.__setattr__(self, "poly", poly)

    @classmethod
    def generator(cls, basis, i, N):
        return cls(Poly.var(f"{basis}{i}").with_variables(_names(basis, N)), basis, N)

    def __eq__(self, other):
        return (
            isinstance(other, SymFun)
            and self.basis == other.basis
            and self.N == other.N
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.basis, self.N, self.poly))

    def __str__(self):
        return str(self.poly)


def power_sums_in_e(N):
    """[p_1, ..., p_N] as polynomials in e_1..e_N."""
    names = _names("e", N)
    e = [Poly.const(1, names)] + [Poly.var(x).with_variables(names) for x in names]
    p = [None]
    for n in range(1, N + 1):
        acc = e[n] * ((-1) ** (n - 1) * n)
        for i in range(1, n):
            acc = acc + e[i] * p[n - i] * (-1) ** (i - 1)
        p.append(acc)
    return p[1:]


def elementary_in_p(N):
    """[e_1, ..., e_N] as polynomials in p_1..p_N (rational coefficients)."""
    names = _names("p", N)
    p = [None] + [Poly.var(x).with_variables(names) for x in names]
    e = [Poly.const(1, names)]
    for n in range(1, N + 1):
        acc = Poly.zero(names)
        for i in range(1, n + 1):
            acc = acc + e[n - i] * p[i] * (-1) ** (i - 1)
        e.append(acc * Fraction(1, n))
    return e[1:]


def newton_convert(f, target):
    """Rewrite ``f`` in the ``target`` basis ("e" or "p")."""
    if target not in BASES:
        raise ValueError(f"basis must be one of {BASES}")
    if f.basis == target:
        return f
    images = power_sums_in_e(f.N) if f.basis == "p" else elementary_in_p(f.N)
    names = _names(f.basis, f.N)
    out = f.poly.subs(dict(zip(names, images)))
    return SymFun(out.with_variables(_names(target, f.N)), target, f.N)
