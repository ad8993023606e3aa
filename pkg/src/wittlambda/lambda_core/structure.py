"""Λ-structures on finitely presented rings, as commuting Frobenius lifts.

A :class:`LambdaStructure` stores, for finitely many primes, the images of
the generators under ψ_p, plus an optional rule for every other prime:

``toric``      ψ_p(g) = g^p
``identity``   ψ_p(g) = g
``chebychev``  ψ_p(g) = D_p(g), the Dickson polynomial
``pullback``   the ring is a subring of Z[t^(+-1)] via ``embedding`` and ψ_p
               is the restriction of t -> t^p
"""

from __future__ import annotations

from ..algebra.poly import Poly
from ..algebra.presentation import RingPresentation
from ..algebra.rings import ZZ, is_prime, prime_factors, primes_up_to
from ..errors import PresentationError, UndeclaredPrime
from ..report import Report

DEFAULT_RULES = ("toric", "identity", "chebychev", "pullback")


def dickson(n, var="x"):
    """D_n with D_0 = 2, D_1 = x, D_n = x*D_{n-1} - D_{n-2}."""
    if n < 0:
        raise ValueError("n must be non-negative")
    x = Poly.var(var)
    prev, cur = Poly.const(2, (var,)), x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, x * cur - prev
    return cur.with_variables((var,))


class LambdaStructure:
    def __init__(self, ring, psi=None, default=None, embedding=None, name=""):
        if default is not None and default not in DEFAULT_RULES:
            raise PresentationError(f"unknown default rule {default!r}")
        if default == "pullback" and not embedding:
            raise PresentationError("the pullback rule needs an embedding")
        self.ring = ring
        self.default = default
        self.name = name
        self.embedding = None
        if embedding:
            from .subrings import Embedding

            self.embedding = embedding if isinstance(embedding, Embedding) else Embedding(ring, embedding)
        declared = {}
        for p, images in (psi or {}).items():
            p = int(p)
            if not is_prime(p):
                raise PresentationError(f"psi index {p} is not prime")
            imgs = {}
            for g, img in images.items():
                if g not in ring.user_generators:
                    raise PresentationError(f"psi {p}: unknown generator {g!r}")
                imgs[g] = ring.element(img)
            missing = [g for g in ring.user_generators if g not in imgs]
            if missing and default is None:
                raise PresentationError(f"psi {p}: no image for {', '.join(missing)}")
            declared[p] = imgs
        self.psi = dict(sorted(declared.items()))

    @property
    def declared_primes(self):
        return tuple(self.psi)

    def covers(self, p):
        return p in self.psi or self.default is not None

    def default_image(self, p, g):
        ring = self.ring
        x = ring.gen(g)
        if self.default == "toric":
            return ring.normal_form(x**p)
        if self.default == "identity":
            return x
        if self.default == "chebychev":
            return ring.normal_form(dickson(p, g))
        if self.default == "pullback":
            return self.embedding.pull_psi(p, g)
        raise UndeclaredPrime(p)

    def images(self, p):
        """Generator images under ψ_p, aligned with ``ring.generators``."""
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if not self.covers(p):
            raise UndeclaredPrime(p)
        declared = self.psi.get(p, {})
        out = []
        for g in self.ring.generators:
            if g in declared:
                out.append(declared[g])
            elif g in self.ring.user_generators:
                out.append(self.default_image(p, g))
            else:
                # hidden finite-field generator: fixed
                out.append(self.ring.gen(g))
        return out

    def apply_prime(self, p, a, images=None):
        a = self.ring.element(a)
        images = images if images is not None else self.images(p)
        return self.ring.normal_form(a.evaluate(images, self.ring))

    def __eq__(self, other):
        return (
            isinstance(other, LambdaStructure)
            and self.ring == other.ring
            and self.default == other.default
            and self.psi == other.psi
            and self.embedding == other.embedding
        )

    def __hash__(self):
        return hash((self.ring, self.default, tuple(self.psi)))

    def __repr__(self):
        label = self.name or self.ring.name
        return f"LambdaStructure({label}, declared={list(self.psi)}, default={self.default})"


def apply_psi(L, n, a):
    """ψ_n(a) for n >= 1, composing ψ_p over the prime factors of n."""
    if n < 1:
        raise ValueError("n must be positive")
    factors = prime_factors(n) if n > 1 else []
    for p in set(factors):
        if not L.covers(p):
            raise UndeclaredPrime(p)
    a = L.ring.element(a)
    for p in factors:
        a = L.apply_prime(p, a)
    return a


# -- verification ----------------------------------------------------------


def verify_frobenius_lift(L, p):
    """ψ_p(g) ≡ g^p in ring ⊗ F_p, one check per generator."""
    rep = Report()
    ring = L.ring
    if not ring.torsion_free:
        rep.skip(f"frobenius p={p}", f"base {ring.base.name} is not torsion-free")
        return rep
    reduced = ring.tensor_fp(p)
    imgs = L.images(p)
    for g, img in zip(ring.generators, imgs):
        if g not in ring.user_generators:
            continue
        diff = reduced.normal_form(img - ring.gen(g) ** p)
        rep.record(
            f"frobenius p={p} {g}",
            diff.is_zero(),
            witness=f"psi_{p}({g}) - {g}^{p} = {diff} (mod {p})",
        )
    return rep


def verify_well_defined(L, p):
    """ψ_p sends every relation to zero."""
    rep = Report()
    imgs = L.images(p)
    for r in L.ring.user_relations:
        val = L.ring.normal_form(r.evaluate(imgs, L.ring))
        rep.record(f"well-defined p={p} [{r}]", val.is_zero(), witness=f"psi_{p}({r}) = {val}")
    return rep


def verify_commutation(L, p, q):
    rep = Report()
    ip, iq = L.images(p), L.images(q)
    for g in L.ring.user_generators:
        x = L.ring.gen(g)
        pq = L.apply_prime(p, L.apply_prime(q, x, iq), ip)
        qp = L.apply_prime(q, L.apply_prime(p, x, ip), iq)
        rep.record(
            f"commute p={p} q={q} {g}",
            pq == qp,
            witness=f"psi_{p}psi_{q}({g}) = {pq} but psi_{q}psi_{p}({g}) = {qp}",
        )
    return rep


def verify_structure(L, primes=None, frobenius=True, commute=True, well_defined=True):
    """Run the standard invariant checks for the given primes."""
    primes = list(primes) if primes is not None else (list(L.psi) or primes_up_to(13))
    rep = Report()
    for p in primes:
        if not L.covers(p):
            rep.record(f"declared p={p}", False, witness=f"no psi_{p} and no default rule")
    primes = [p for p in primes if L.covers(p)]
    if well_defined:
        for p in primes:
            rep.extend(verify_well_defined(L, p))
    if frobenius:
        for p in primes:
            rep.extend(verify_frobenius_lift(L, p))
    if commute:
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                rep.extend(verify_commutation(L, p, q))
    return rep


# -- built-in structures ----------------------------------------------------


def toric_structure(M, check_primes=(2, 3, 5)):
    """The toric structure m -> m^p on Z[M] for a monoid presentation M."""
    L = LambdaStructure(M.ring(), default="toric", name=f"toric {M}")
    rep = verify_structure(L, check_primes)
    if not rep.ok:
        raise PresentationError(f"toric structure failed its own checks: {rep.failures[0].witness}")
    return L


def chebychev_structure():
    ring = RingPresentation(ZZ, ("x",))
    psi = {p: {"x": dickson(p)} for p in (2, 3, 5)}
    return LambdaStructure(ring, psi, default="chebychev", name="chebychev line")


def broken_structure():
    """Z[x] with psi_2(x) = x^2 + 1, which is not a Frobenius lift."""
    ring = RingPresentation(ZZ, ("x",))
    return LambdaStructure(ring, {2: {"x": "x^2 + 1"}}, name="broken")


def _pullback_structure(ring, embedding, primes, name):
    from .subrings import Embedding

    emb = Embedding(ring, embedding)
    psi = {p: {g: emb.pull_psi(p, g) for g in ring.user_generators} for p in primes}
    return LambdaStructure(ring, psi, default="pullback", embedding=emb, name=name)


def nodal_structure(primes=tuple(primes_up_to(13))):
    """{f in Z[t^(+-1)] : f(1) = f(-1)} = Z[s^(+-1), v]/(v^2 - s + 2 - s^-1),
    s = t^2, v = t - t^-1."""
    ring = RingPresentation(ZZ, ("s", "v"), ["v^2 - s + 2 - s^-1"], laurent=("s",))
    return _pullback_structure(ring, {"s": "t^2", "v": "t - t^-1"}, primes, "nodal line")


def cuspidal_structure(primes=tuple(primes_up_to(13))):
    """{f in Z[t^(+-1)] : f'(1) = 0} = Z[x, y]/(y^2 - x^2*y - 2*x*y + x^2),
    x = t - 2 + t^-1, y = (t - 1)^2."""
    ring = RingPresentation(ZZ, ("x", "y"), ["y^2 - x^2*y - 2*x*y + x^2"], order=("lex", "y", "x"))
    return _pullback_structure(ring, {"x": "t - 2 + t^-1", "y": "t^2 - 2*t + 1"}, primes, "cuspidal line")
