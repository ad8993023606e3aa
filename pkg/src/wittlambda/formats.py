"""Line-based text formats for rings, Λ-structures and fans.

Ring / structure file (``#`` starts a comment)::

    base Z                  # Z, Z/m or GF(q)
    gens s v
    laurent s
    order lex y x           # optional; default grlex
    rel v^2 - s + 2 - s^-1
    psi 2: v -> s - s^-1    # structure files only
    default pullback        # toric | identity | chebychev | pullback
    embed s -> t^2          # images in Z[t^(+-1)] for the pullback rule

Fan file::

    dim 2
    ray 1 0
    ray 0 1
    cone 0 1                # ray indices; the zero cone is implicit
"""

from __future__ import annotations

import re
from importlib import resources
from pathlib import Path

from .algebra.parse import parse_poly
from .algebra.presentation import RingPresentation, base_ring_from_spec
from .errors import ParseError, WittLambdaError
from .f1.fan import Fan
from .lambda_core.structure import DEFAULT_RULES, LambdaStructure

RING_KEYS = ("base", "gens", "laurent", "order", "rel")
STRUCTURE_KEYS = RING_KEYS + ("psi", "default", "embed")


def _lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.lstrip()
        indent = len(line) - len(stripped)
        key, _, rest = stripped.partition(" ")
        col = indent + len(key) + 1 + (len(rest) - len(rest.lstrip()))
        yield no, key, rest.strip(), col + 1


def _read(source):
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source and Path(source).exists()):
        path = Path(source)
        return path.read_text(encoding="utf-8"), str(path)
    return source, "<string>"


def _ring_from_entries(entries, source):
    base_spec = None
    gens = None
    laurent = []
    order = None
    rels = []
    for no, key, rest, col in entries:
        if key == "base":
            if base_spec is not None:
                raise ParseError("duplicate 'base' line", no, 1, source)
            try:
                base_spec = base_ring_from_spec(rest)
            except ValueError as exc:
                raise ParseError(str(exc), no, col, source) from None
        elif key == "gens":
            if gens is not None:
                raise ParseError("duplicate 'gens' line", no, 1, source)
            gens = rest.split()
            for g in gens:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", g):
                    raise ParseError(f"bad generator name {g!r}", no, col, source)
        elif key == "laurent":
            laurent.extend(rest.split())
        elif key == "order":
            parts = rest.split()
            if not parts or parts[0] not in ("lex", "grlex"):
                raise ParseError("order must be 'grlex' or 'lex <vars>'", no, col, source)
            order = tuple(parts) if parts[0] == "lex" else None
        elif key == "rel":
            rels.append((no, rest, col))
    if gens is None:
        gens = []
    from .algebra.rings import ZZ

    base = base_spec if base_spec is not None else ZZ
    names = list(gens)
    if hasattr(base, "e") and base.e > 1:
        names.append("w")
    polys = []
    for no, text, col in rels:
        polys.append(parse_poly(text, variables=names, laurent=laurent, line=no, source=source, column_offset=col - 1))
    for g in laurent:
        if g not in gens:
            raise ParseError(f"Laurent variable {g!r} is not a generator", None, None, source)
    try:
        return RingPresentation(base, gens, polys, laurent, order)
    except WittLambdaError as exc:
        raise ParseError(f"invalid presentation: {exc}", None, None, source) from None


def _entries(text, source, allowed):
    out = []
    for no, key, rest, col in _lines(text):
        if key not in allowed:
            raise ParseError(f"unknown directive {key!r}", no, 1, source)
        out.append((no, key, rest, col))
    return out


def parse_ring(source):
    text, name = _read(source)
    return _ring_from_entries(_entries(text, name, RING_KEYS), name)


def parse_structure(source):
    text, name = _read(source)
    entries = _entries(text, name, STRUCTURE_KEYS)
    ring = _ring_from_entries(entries, name)
    psi = {}
    default = None
    embed = {}
    names = ring.generators
    for no, key, rest, col in entries:
        if key == "psi":
            m = re.fullmatch(r"(\d+)\s*:\s*([A-Za-z_][A-Za-z_0-9]*)\s*->\s*(.+)", rest)
            if not m:
                raise ParseError("expected 'psi <p>: <gen> -> <expr>'", no, col, name)
            p, g, expr = int(m.group(1)), m.group(2), m.group(3)
            if g not in ring.user_generators:
                raise ParseError(f"unknown generator {g!r}", no, col + m.start(2), name)
            if g in psi.get(p, {}):
                raise ParseError(f"duplicate image for psi {p} of {g}", no, col, name)
            img = parse_poly(expr, variables=names, laurent=ring.laurent, line=no, source=name,
                             column_offset=col - 1 + m.start(3))
            psi.setdefault(p, {})[g] = img
        elif key == "default":
            if rest not in DEFAULT_RULES:
                raise ParseError(f"default must be one of {', '.join(DEFAULT_RULES)}", no, col, name)
            default = rest
        elif key == "embed":
            m = re.fullmatch(r"([A-Za-z_][A-Za-z_0-9]*)\s*->\s*(.+)", rest)
            if not m:
                raise ParseError("expected 'embed <gen> -> <Laurent polynomial>'", no, col, name)
            embed[m.group(1)] = parse_poly(m.group(2), line=no, source=name, column_offset=col - 1 + m.start(2))
    try:
        return LambdaStructure(ring, psi, default, embed or None)
    except WittLambdaError as exc:
        raise ParseError(f"invalid structure: {exc}", None, None, name) from None


def parse_fan(source):
    text, name = _read(source)
    dim = None
    rays = []
    cones = []
    for no, key, rest, col in _lines(text):
        try:
            nums = [int(x) for x in rest.split()]
        except ValueError:
            raise ParseError(f"expected integers after {key!r}", no, col, name) from None
        if key == "dim":
            if len(nums) != 1 or nums[0] < 1:
                raise ParseError("expected 'dim <n>' with n >= 1", no, col, name)
            dim = nums[0]
        elif key == "ray":
            if dim is None:
                raise ParseError("'dim' must come before rays", no, 1, name)
            if len(nums) != dim:
                raise ParseError(f"ray needs {dim} coordinates", no, col, name)
            rays.append(tuple(nums))
        elif key == "cone":
            for i in nums:
                if not 0 <= i < len(rays):
                    raise ParseError(f"cone refers to undefined ray {i}", no, col, name)
            cones.append(tuple(nums))
        else:
            raise ParseError(f"unknown directive {key!r}", no, 1, name)
    if dim is None:
        raise ParseError("missing 'dim' line", None, None, name)
    try:
        return Fan.from_cones(dim, rays, cones)
    except WittLambdaError as exc:
        raise ParseError(f"invalid fan: {exc}", None, None, name) from None


# -- serialization -----------------------------------------------------------------


def serialize_ring(ring):
    lines = [f"base {ring.base.name}"]
    if ring.user_generators:
        lines.append("gens " + " ".join(ring.user_generators))
    lau = [g for g in ring.user_generators if g in ring.laurent]
    if lau:
        lines.append("laurent " + " ".join(lau))
    if ring.order != ("grlex",):
        lines.append("order " + " ".join(ring.order))
    for r in ring.user_relations:
        lines.append(f"rel {r}")
    return "\n".join(lines) + "\n"


def serialize_structure(L):
    out = serialize_ring(L.ring)
    lines = []
    for p, imgs in L.psi.items():
        for g in L.ring.user_generators:
            if g in imgs:
                lines.append(f"psi {p}: {g} -> {imgs[g]}")
    if L.default:
        lines.append(f"default {L.default}")
    if L.embedding is not None:
        for g in L.ring.user_generators:
            lines.append(f"embed {g} -> {L.embedding.images[g]}")
    return out + ("\n".join(lines) + "\n" if lines else "")


def serialize_fan(F):
    lines = [f"dim {F.dim}"]
    lines += ["ray " + " ".join(map(str, r)) for r in F.rays]
    lines += ["cone " + " ".join(map(str, c)) for c in F.listed]
    return "\n".join(lines) + "\n"


# -- builtin fixtures --------------------------------------------------------------


def fixture_names():
    root = resources.files("wittlambda") / "fixtures"
    return sorted(p.name for p in root.iterdir() if p.name.endswith((".lr", ".fan")))


def fixture_path(name):
    root = resources.files("wittlambda") / "fixtures"
    path = root / name
    if not path.is_file():
        raise FileNotFoundError(f"no builtin fixture {name!r}")
    return Path(str(path))


def resolve(name):
    """A path to ``name``, falling back to the builtin fixtures."""
    p = Path(name)
    if p.exists():
        return p
    try:
        return fixture_path(name)
    except FileNotFoundError:
        raise FileNotFoundError(f"{name}: no such file or builtin fixture") from None
