"""Newton polytopes of sparse polynomials, used as an independent oracle.

Facets are found by brute force: every N-subset of vertices spanning an
affine hyperplane is a candidate, kept when all vertices lie weakly on one
side.  No hull library is involved so the check stays independent of the
fan computation.
"""

import json
import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from pathlib import Path
from typing import Dict, List, Sequence, Tuple

from .exactmath import Vector, dot, nullspace, primitive, rank
from .lp import in_convex_hull

MAX_VERTEX_SUBSETS = 2_000_000


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DegenerateSupport(ValueError):
    pass


@dataclass
class SupportPolynomial:
    dim: int
    terms: Dict[Vector, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {tuple(e): Fraction(c) for e, c in self.terms.items() if c != 0}
        for e in self.terms:
            if len(e) != self.dim:
                raise ValueError(f"exponent {e} does not have {self.dim} entries")

    @property
    def support(self) -> List[Vector]:
        return sorted(self.terms)

    def __len__(self):
        return len(self.terms)

    def with_coefficient_shift(self, exponent: Sequence[int], delta) -> "SupportPolynomial":
        terms = dict(self.terms)
        e = tuple(exponent)
        terms[e] = terms.get(e, Fraction(0)) + delta
        return SupportPolynomial(self.dim, terms)


_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<sign>[+-])
  | (?P<num>\d+(?:/\d+)?)
  | (?P<var>x_?\{?(?P<idx>\d+)\}?)
  | (?P<pow>(?:\^|\*\*)\{?(?P<exp>\d+)\}?)
  | (?P<mul>\*)
""", re.VERBOSE)


def parse_polynomial(text: str, dim: int = None) -> SupportPolynomial:
    """Parse text such as ``432x1^11x3^3 - 1296x1^9x2^2x3^3 + 6912x2``.

    Accepts ``x1`` / ``x_1`` / ``x_{1}`` variables, ``^`` or ``**`` powers
    (optionally braced) and optional ``*``.  Variables are 1-based; the
    dimension defaults to the largest index seen.
    """
    pos = 0
    terms: List[Tuple[int, Fraction, Dict[int, int]]] = []
    sign = 1
    coeff = None
    powers: Dict[int, int] = {}
    last_var = None
    started = False
    expect_term = True

    def flush(at):
        nonlocal coeff, powers, started, last_var, sign
        if not started:
            raise PolynomialSyntaxError("empty term", at)
        terms.append((sign, coeff if coeff is not None else Fraction(1), powers))
        coeff, powers, started, last_var, sign = None, {}, False, None, 1

    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise PolynomialSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.group("ws"):
            pass
        elif m.group("sign"):
            if started:
                flush(pos)
            elif not expect_term:
                raise PolynomialSyntaxError("misplaced sign", pos)
            sign = sign * (1 if m.group("sign") == "+" else -1)
        elif m.group("num"):
            if coeff is not None or powers:
                raise PolynomialSyntaxError("coefficient must lead the monomial", pos)
            coeff = Fraction(m.group("num"))
            started = True
            expect_term = False
        elif m.group("var"):
            i = int(m.group("idx"))
            if i < 1:
                raise PolynomialSyntaxError("variables are numbered from 1", pos)
            powers[i] = powers.get(i, 0) + 1
            last_var = i
            started = True
            expect_term = False
        elif m.group("pow"):
            if last_var is None:
                raise PolynomialSyntaxError("power without a variable", pos)
            powers[last_var] += int(m.group("exp")) - 1
            last_var = None
        elif m.group("mul"):
            if not started:
                raise PolynomialSyntaxError("misplaced '*'", pos)
        pos = m.end()
    if started:
        flush(pos)
    elif terms or not expect_term or sign != 1:
        raise PolynomialSyntaxError("dangling sign", pos)

    top = max((i for _, _, p in terms for i in p), default=0)
    if dim is None:
        dim = top
    elif top > dim:
        raise ValueError(f"variable x{top} exceeds dimension {dim}")
    acc: Dict[Vector, Fraction] = {}
    for s, c, p in terms:
        e = tuple(p.get(i, 0) for i in range(1, dim + 1))
        acc[e] = acc.get(e, Fraction(0)) + s * c
    return SupportPolynomial(dim, {e: c for e, c in acc.items() if c != 0})


def load_polynomial(path, dim: int = None) -> SupportPolynomial:
    """Read a polynomial file: plain expression text or a JSON term list.

    The JSON form is either a list of ``{"exponent": [...], "coeff": c}`` or
    an object with such a list under ``"terms"``.
    """
    text = Path(path).read_text()
    stripped = text.lstrip()
    if stripped.startswith(("[", "{")):
        data = json.loads(text)
        if isinstance(data, dict):
            dim = data.get("dim", dim)
            data = data["terms"]
        terms: Dict[Vector, Fraction] = {}
        for t in data:
            e = tuple(int(x) for x in t["exponent"])
            terms[e] = terms.get(e, Fraction(0)) + Fraction(t["coeff"])
        if dim is None:
            dim = len(next(iter(terms))) if terms else 0
        return SupportPolynomial(dim, terms)
    return parse_polynomial(text, dim)


@dataclass(frozen=True)
class Facet:
    normal: Vector
    support_value: int


@dataclass
class PolytopeFacets:
    vertices: List[Vector]
    facets: List[Facet]

    @property
    def normals(self) -> List[Vector]:
        return [f.normal for f in self.facets]


def _probe_directions(dim: int, count: int = 400) -> List[Vector]:
    if 7 ** dim - 1 <= count:
        return [d for d in product(range(-3, 4), repeat=dim) if any(d)]
    rng = random.Random(dim)
    return [tuple(rng.randint(-9, 9) for _ in range(dim)) for _ in range(count)]


def vertices(points: Sequence[Vector]) -> List[Vector]:
    """Points that are not convex combinations of the other points.

    Unique minimisers of a fixed set of linear functionals are vertices for
    sure; every other point is first tested against the hull of those (a
    small LP) and only falls back to the full LP when it lies outside.
    """
    pts = sorted(set(points))
    if len(pts) <= 1:
        return pts
    known = set()
    for d in _probe_directions(len(pts[0])):
        vals = [dot(d, p) for p in pts]
        lo = min(vals)
        if vals.count(lo) == 1:
            known.add(pts[vals.index(lo)])
    base = sorted(known)
    out = []
    for i, p in enumerate(pts):
        if p in known:
            out.append(p)
        elif in_convex_hull(p, base):
            continue
        elif not in_convex_hull(p, pts[:i] + pts[i + 1:]):
            out.append(p)
    return out


def facet_normals(p: SupportPolynomial) -> PolytopeFacets:
    pts = p.support
    N = p.dim
    if not pts:
        raise DegenerateSupport("empty support")
    base = pts[0]
    if rank([[a - b for a, b in zip(q, base)] for q in pts]) < N:
        raise DegenerateSupport("support does not affinely span the ambient space")
    verts = vertices(pts)
    n_subsets = 1
    for k in range(N):
        n_subsets = n_subsets * (len(verts) - k) // (k + 1)
    if n_subsets > MAX_VERTEX_SUBSETS:
        raise ValueError(f"{n_subsets} candidate hyperplanes exceed the brute-force cap")

    found: Dict[Vector, int] = {}
    for subset in combinations(verts, N):
        diffs = [[a - b for a, b in zip(q, subset[0])] for q in subset[1:]]
        if N > 1 and rank(diffs) != N - 1:
            continue
        ns = nullspace(diffs, N) if diffs else nullspace([], N)
        if len(ns) != 1:
            continue
        n = ns[0]
        c = dot(n, subset[0])
        vals = [dot(n, v) for v in verts]
        if all(v >= c for v in vals):
            found.setdefault(n, c)
        elif all(v <= c for v in vals):
            found.setdefault(tuple(-x for x in n), -c)
    facets = [Facet(n, c) for n, c in sorted(found.items())]
    return PolytopeFacets(verts, facets)


@dataclass
class RayComparison:
    matched: List[Vector]
    oracle_only: List[Vector]
    fan_only: List[Vector]

    @property
    def ok(self) -> bool:
        return not self.oracle_only and not self.fan_only

    def summary(self) -> str:
        return (f"matched: {len(self.matched)}, oracle-only: {len(self.oracle_only)}, "
                f"fan-only: {len(self.fan_only)}")


def compare_rays(oracle: PolytopeFacets, fan_rays) -> RayComparison:
    """Set comparison of primitive directions; ``fan_rays`` may be a TropicalFan."""
    rays = getattr(fan_rays, "rays", fan_rays)
    a = {primitive(n) for n in oracle.normals}
    b = {primitive(r) for r in rays}
    return RayComparison(sorted(a & b), sorted(a - b), sorted(b - a))
