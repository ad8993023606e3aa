"""Command-line interface.

Exit codes: 0 success, 1 a check failed, 2 bad input (parse errors carry
file, line and column).
"""

from __future__ import annotations

import argparse
import sys
import warnings

from . import formats
from .algebra.finite_field import GF
from .algebra.parse import parse_poly
from .algebra.presentation import base_ring_from_spec
from .budget import default_budget
from .errors import ParseError, WittLambdaError
from .report import Report


def _ints(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _ring(spec):
    try:
        return base_ring_from_spec(spec)
    except ValueError:
        return formats.parse_ring(formats.resolve(spec))


def _coords(ring, text):
    return [ring.parse(x) for x in text.split(",")]


def _print_report(rep, out):
    out.write(rep.render())
    return rep.exit_code


# -- witt ------------------------------------------------------------------------------


def cmd_witt(args, out):
    from . import witt

    ring = _ring(args.ring)
    S = witt.TruncationSet.parse(args.trunc)
    op = args.op
    if op in ("add", "mul"):
        if len(args.values) != 2:
            raise ParseError(f"witt {op} needs two coordinate lists")
        u, v = (witt.WittVector(S, _coords(ring, x), ring) for x in args.values)
        res = witt.witt_add(u, v) if op == "add" else witt.witt_mul(u, v)
        lines = res.lines()
    elif op == "ghost":
        w = witt.WittVector(S, _coords(ring, _one(args.values, op)), ring)
        g = witt.ghost(w)
        lines = [f"{n}={ring.format(x)}" for n, x in zip(g.trunc, g.values)]
    elif op == "teich":
        a = ring.parse(_one(args.values, op))
        lines = witt.teichmuller(a, S, ring).lines()
    elif op == "frob":
        w = witt.WittVector(S, _coords(ring, _one(args.values, op)), ring)
        lines = witt.frobenius(args.n, w).lines()
    elif op == "versch":
        w = witt.WittVector(S.divided_by(args.n), _coords(ring, _one(args.values, op)), ring)
        lines = witt.verschiebung(args.n, w, S).lines()
    out.write("\n".join(lines) + "\n")
    return 0


def _one(values, op):
    if len(values) != 1:
        raise ParseError(f"witt {op} needs exactly one argument")
    return values[0]


# -- lambda ----------------------------------------------------------------------------


def cmd_lambda(args, out):
    from .lambda_core import structure as st

    if args.op == "sub":
        from .lambda_core import subrings as sr

        conds = {"nodal": sr.nodal_conditions, "cuspidal": sr.cuspidal_conditions, "fake": sr.fake_conditions}
        ambient = st.LambdaStructure(sr.laurent_line(), default="toric")
        rep = sr.sublambda_check(ambient, conds[args.file](), args.degree, args.primes or [2, 3, 5])
        rep.command = f"lambda sub {args.file}"
        return _print_report(rep, out)

    L = formats.parse_structure(formats.resolve(args.file))
    if args.op in ("psi", "lam"):
        try:
            elem = L.ring.normal_form(parse_poly(args.elem, variables=L.ring.generators,
                                                 laurent=L.ring.laurent, source="--elem"))
        except ParseError as exc:
            raise ParseError(f"{exc} (generators: {' '.join(L.ring.user_generators)})") from None
    if args.op == "verify":
        primes = args.primes or list(L.declared_primes) or [2, 3, 5, 7, 11, 13]
        everything = not (args.frobenius or args.commute or args.well_defined)
        rep = st.verify_structure(
            L, primes,
            frobenius=everything or args.frobenius,
            commute=everything or args.commute,
            well_defined=everything or args.well_defined,
        )
        rep.command = f"lambda verify {args.file} --primes {','.join(map(str, primes))}"
        return _print_report(rep, out)
    if args.op == "psi":
        out.write(f"{st.apply_psi(L, args.n, elem)}\n")
        return 0
    if args.op == "lam":
        from .lambda_core.newton import lambda_from_psi

        out.write(f"{lambda_from_psi(L, args.n, elem)}\n")
        return 0
    raise AssertionError(args.op)


# -- f1 ----------------------------------------------------------------------------------


def cmd_f1(args, out):
    from .f1 import fan as fanmod
    from .f1 import gln, monoid

    if args.op == "points":
        L = formats.parse_structure(formats.resolve(args.file))
        rep = Report(command=f"f1 points {args.file}")
        if args.target:
            M = _monoid_of(L)
            pts = monoid.f1_points_monoid(M, args.target)
            rep.value("target", f"mu_{args.target} + {{0}}" if args.target > 1 else "{0, 1}")
        else:
            pts, complete = monoid.f1_points_affine(L, args.bound, args.primes or [2, 3, 5], args.budget)
            rep.value("complete", "yes" if complete else "no (bounded search only)")
        rep.value("count", len(pts))
        for i, p in enumerate(pts, 1):
            rep.value(f"point {i}", p)
        return _print_report(rep, out)

    if args.op == "toric":
        F = formats.parse_fan(formats.resolve(args.file))
        rep = Report(command=f"f1 toric {args.file}")
        rep.value("cones", len(F.cones))
        rep.value("smooth", "yes" if F.is_smooth else "no")
        P = None
        if args.hodge or args.verify:
            with warnings.catch_warnings():
                warnings.simplefilter("ignore")
                P = fanmod.hodge_poly_toric(F)
            if args.hodge:
                rep.value("P(t)" if F.is_smooth else "orbit sum (not a Hodge polynomial: fan not smooth)", P)
        if args.complemented:
            ups = fanmod.complemented_closed_subspaces(F, args.budget if args.budget_given else fanmod.UPSET_BUDGET)
            rep.value("complemented closed subspaces", len(ups))
            pts = fanmod.complemented_f1_points(F)
            rep.value("complemented F1-points", len(pts))
            rep.value("fixed-point cones", " ".join(F.format_cone(c) for c in pts) or "none")
        for q in args.count_fq or []:
            orbit = fanmod.count_points_Fq(F, q)
            rep.value(f"#X(F_{q})", orbit)
            if args.verify:
                pq = P.evaluate([q])
                if F.is_smooth:
                    brute = fanmod.count_points_Fq_bruteforce(F, q, args.budget)
                    rep.record(f"{orbit} = P({q})", orbit == brute == pq,
                               f"orbit {orbit}, brute force {brute}, P({q}) = {pq}",
                               f"brute force {brute}")
                else:
                    rep.skip(f"{orbit} = P({q})", "fan not smooth: no chart brute force")
        if args.verify and F.is_complete():
            p1 = P.evaluate([1])
            n = len(fanmod.complemented_f1_points(F))
            rep.record(f"P(1) = {p1} = complemented points", p1 == n, f"{n} complemented points")
        return _print_report(rep, out)

    if args.op == "gln":
        n = args.n
        rep = Report(command=f"f1 gln --n {n}")
        if args.q:
            field = GF(args.q)
            axes = gln.f1_linear_functionals(n, field, args.budget)
            rep.value("axis vectors", len(axes))
            rep.value("|M_n|", len(gln.mn_points_Fq(n, args.q, args.budget)))
            rep.value("|GL_n|", len(gln.gln_points_Fq(n, args.q, args.budget)))
        else:
            rep.value("|M_n(F1)|", len(gln.mn_f1_points(n, args.budget)))
            rep.value("|GL_n(F1)|", len(gln.gln_f1_points(n, args.budget)))
        if n >= 2:
            rep.extend(gln.det_psi2_compat_check(n))
        return _print_report(rep, out)
    raise AssertionError(args.op)


def _monoid_of(L):
    """Read a monoid presentation off a ring whose relations are binomials."""
    from .f1.monoid import MonoidPresentation

    ring = L.ring
    rels = []
    for r in ring.user_relations:
        pos = [e for e, c in r.terms.items() if c == 1]
        neg = [e for e, c in r.terms.items() if c == -1]
        if len(r.terms) != 2 or len(pos) != 1 or len(neg) != 1:
            raise ParseError(f"relation {r} is not a binomial m1 - m2")
        to_dict = lambda e: {g: x for g, x in zip(ring.generators, e) if x}
        rels.append((to_dict(pos[0]), to_dict(neg[0])))
    return MonoidPresentation(ring.user_generators, tuple(g for g in ring.user_generators if g in ring.laurent), rels)


# -- carlitz / moore --------------------------------------------------------------------


def cmd_carlitz(args, out):
    from . import function_field as ff

    field = GF(args.q)
    if args.op == "rho":
        f = ff.FqPoly.parse(field, args.poly)
        out.write(f"{ff.carlitz_rho(f)}\n")
        return 0
    rep = Report(command=f"carlitz verify --q {args.q} --deg-bound {args.deg_bound}")
    ms = [m for d in range(1, args.deg_bound + 1) for m in ff.monic_irreducibles(field, d)]
    for m in ms:
        rep.extend(ff.verify_carlitz_frobenius_lift(m, ms[:3]))
    rep.extend(ff.check_rho_multiplicative(args.q, args.pairs, 4, args.seed))
    return _print_report(rep, out)


def cmd_moore(args, out):
    from . import function_field as ff

    field = GF(args.q**args.ext)
    vec = [field.parse(x) for x in args.vector.split(",")]
    d = ff.moore_det(vec, args.q, field)
    dep = ff.find_dependence(vec, args.q, field)
    rep = Report(command=f"moore --q {args.q} --ext {args.ext} --vector {args.vector}")
    rep.value("field", f"GF({field.q}) = F_{field.p}[w]/({_modulus_str(field)})" if field.e > 1 else f"GF({field.q})")
    rep.value("det", field.format(d))
    rep.value("independent over F_%d" % args.q, "yes" if dep is None else "no")
    if dep is not None:
        rep.value("dependence", ", ".join(field.format(c) for c in dep))
    rep.record("det = 0 exactly when dependent", field.is_zero(d) == (dep is not None),
               f"det {field.format(d)}, dependence {dep}")
    return _print_report(rep, out)


def _modulus_str(field):
    from .algebra.poly import Poly

    return str(Poly({(i,): c for i, c in enumerate(field.modulus) if c}, variables=("w",)))


def cmd_verify_all(args, out):
    from .acceptance import run_all

    rep = run_all(args.seed, args.criteria)
    return _print_report(rep, out)


def cmd_fixtures(args, out):
    out.write("\n".join(formats.fixture_names()) + "\n")
    return 0


# -- parser ------------------------------------------------------------------------------


def build_parser():
    p = argparse.ArgumentParser(prog="wittlambda", description="Witt vectors, Lambda-rings and F1-geometry")
    p.add_argument("--seed", type=int, default=42, help="seed for randomized checks")
    p.add_argument("--budget", type=int, default=None, help="enumeration budget (env WITTLAMBDA_BUDGET)")
    sub = p.add_subparsers(dest="command", required=True)

    w = sub.add_parser("witt", help="Witt vector arithmetic")
    w.add_argument("op", choices=["add", "mul", "ghost", "teich", "frob", "versch"])
    w.add_argument("values", nargs="+", help="comma-separated coordinates (or one element for teich)")
    w.add_argument("--trunc", required=True, help="truncation set, e.g. 1,2,3,6")
    w.add_argument("--ring", default="Z", help="Z, Z/m, GF(q) or a ring file")
    w.add_argument("--n", type=int, default=2, help="index for frob/versch")
    w.set_defaults(func=cmd_witt)

    lam = sub.add_parser("lambda", help="Lambda-structures")
    lam.add_argument("op", choices=["verify", "psi", "lam", "sub"])
    lam.add_argument("file", help="structure file or builtin fixture (for sub: nodal, cuspidal or fake)")
    lam.add_argument("--primes", type=_ints)
    lam.add_argument("--frobenius", action="store_true")
    lam.add_argument("--commute", action="store_true")
    lam.add_argument("--well-defined", action="store_true")
    lam.add_argument("--n", type=int, default=2)
    lam.add_argument("--elem", default="x1")
    lam.add_argument("--degree", type=int, default=6)
    lam.set_defaults(func=cmd_lambda)

    f1 = sub.add_parser("f1", help="F1-points and toric fans")
    f1.add_argument("op", choices=["points", "toric", "gln"])
    f1.add_argument("file", nargs="?", help="structure file (points) or fan file (toric)")
    f1.add_argument("--bound", type=int, default=5)
    f1.add_argument("--primes", type=_ints)
    f1.add_argument("--target", type=int, default=0, help="monoid maps into mu_n + {0}")
    f1.add_argument("--hodge", action="store_true")
    f1.add_argument("--complemented", action="store_true")
    f1.add_argument("--count-fq", type=_ints)
    f1.add_argument("--verify", action="store_true")
    f1.add_argument("--n", type=int, default=2)
    f1.add_argument("--q", type=int, default=0)
    f1.set_defaults(func=cmd_f1)

    c = sub.add_parser("carlitz", help="the Carlitz module")
    c.add_argument("op", choices=["verify", "rho"])
    c.add_argument("--q", type=int, default=2)
    c.add_argument("--deg-bound", type=int, default=3)
    c.add_argument("--poly", default="t")
    c.add_argument("--pairs", type=int, default=100)
    c.set_defaults(func=cmd_carlitz)

    m = sub.add_parser("moore", help="Moore determinant over F_(q^ext)")
    m.add_argument("--q", type=int, required=True)
    m.add_argument("--ext", type=int, default=1)
    m.add_argument("--vector", required=True, help="comma-separated elements, polynomials in w")
    m.set_defaults(func=cmd_moore)

    v = sub.add_parser("verify-all", help="run the acceptance suite")
    v.add_argument("--criteria", type=_ints)
    for sp in (c, v):
        sp.add_argument("--seed", type=int, default=argparse.SUPPRESS, help="seed for randomized checks")
    v.set_defaults(func=cmd_verify_all)

    fx = sub.add_parser("fixtures", help="list builtin fixture files")
    fx.set_defaults(func=cmd_fixtures)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    args = parser.parse_args(argv)
    args.budget_given = args.budget is not None
    if not args.budget_given:
        args.budget = default_budget()
    if args.command == "f1" and args.op in ("points", "toric") and not args.file:
        parser.error(f"f1 {args.op} needs a file")
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return 2
    except FileNotFoundError as exc:
        err.write(f"error: {exc}\n")
        return 2
    except (WittLambdaError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
