"""Image of the Bergman fan under V and the ray set it determines.

Pipeline: matroid on the rows of U -> Bergman cones -> push forward by V ->
merge cones that tile a common hyperplane -> intersect merged cones to find
rays that are not columns of V ("hidden" rays).
"""

import logging
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .bergman import BergmanCone, bergman_fan
from .cones import Cone, canonical_hyperplane, full_dim_overlap, intersect, union_is_convex
from .exactmath import Vector, primitive
from .matroid import LinearMatroid, set_label
from .system import DerivedMatrices

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ImageCone:
    generators: Tuple[Vector, ...]
    label: str
    members: Tuple[int, ...]
    sources: Tuple[str, ...] = ()

    @cached_property
    def cone(self) -> Cone:
        return Cone(len(self.generators[0]) if self.generators else 0, self.generators)

    @property
    def span_dim(self) -> int:
        return self.cone.span_dim if self.generators else 0


@dataclass(frozen=True)
class HiddenRay:
    ray: Vector
    parents: Tuple[Tuple[str, str], ...]


@dataclass
class TropicalFan:
    dim: int
    cones: List[ImageCone]
    direct_rays: List[Vector]
    hidden_rays: List[HiddenRay]
    degenerate: List[ImageCone] = field(default_factory=list)
    diagnostics: List[str] = field(default_factory=list)

    @property
    def rays(self) -> List[Vector]:
        return sorted(set(self.direct_rays) | {h.ray for h in self.hidden_rays})

    def cone_labels(self) -> List[str]:
        return [c.label for c in self.cones]


def _apply(V: Sequence[Sequence[int]], g: Sequence[int]) -> Vector:
    return tuple(sum(a * b for a, b in zip(row, g)) for row in V)


def map_cone(V: Sequence[Sequence[int]], c: BergmanCone) -> ImageCone:
    """Push a Bergman cone forward; zero images (and the lineality) drop out."""
    gens = {}
    for g in c.generators:
        img = _apply(V, g)
        if any(img):
            gens.setdefault(primitive(img), None)
    top = c.flag.chain[-1].members if c.flag.chain else ()
    return ImageCone(tuple(gens), set_label(top), tuple(top), (c.label,))


def _span_key(ic: ImageCone) -> Tuple[int, ...]:
    eqs = ic.cone.span_equalities
    return canonical_hyperplane(eqs[0])


def _adjacent(a: Cone, b: Cone) -> bool:
    """Equal-span cones that overlap or share a common facet-dimensional face."""
    if full_dim_overlap(a, b):
        return True
    # rays (span_dim 1) only ever touch at the origin
    return a.span_dim >= 2 and intersect(a, b).span_dim >= a.span_dim - 1


def _components(items: List[ImageCone]) -> List[List[int]]:
    parent = list(range(len(items)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    cones = [ic.cone for ic in items]
    for i, j in combinations(range(len(items)), 2):
        if find(i) != find(j) and _adjacent(cones[i], cones[j]):
            parent[find(i)] = find(j)
    groups: Dict[int, List[int]] = {}
    for i in range(len(items)):
        groups.setdefault(find(i), []).append(i)
    return list(groups.values())


def _combine(parts: List[ImageCone]) -> ImageCone:
    dim = len(parts[0].generators[0])
    hull = Cone.from_generators([g for p in parts for g in p.generators], dim).reduced()
    members = sorted({m for p in parts for m in p.members})
    sources = sorted({s for p in parts for s in p.sources})
    return ImageCone(hull.generators, set_label(members), tuple(members), tuple(sources))


def merge_cones(cones: Sequence[ImageCone], diagnostics: Optional[List[str]] = None) -> List[ImageCone]:
    """Union cones with a common hyperplane span that overlap or abut.

    Cones in one hyperplane are grouped when they overlap in full dimension
    or share a wall; each group is replaced by its hull when the union is
    convex.  A group whose union is not convex is kept unmerged and reported.
    """
    if diagnostics is None:
        diagnostics = []
    by_span: Dict[Tuple[int, ...], List[ImageCone]] = {}
    for ic in cones:
        by_span.setdefault(_span_key(ic), []).append(ic)
    out = []
    for key in sorted(by_span):
        group = by_span[key]
        for comp in _components(group):
            parts = [group[i] for i in comp]
            if len(parts) == 1:
                out.append(_combine(parts))
            elif union_is_convex([p.cone for p in parts]):
                out.append(_combine(parts))
            else:
                msg = "NonConvexUnion: " + ", ".join(sorted(p.label for p in parts))
                log.warning(msg)
                diagnostics.append(msg)
                out.extend(_combine([p]) for p in parts)
    out.sort(key=lambda c: (c.members, c.generators))
    return out


def intersect_pair(a: ImageCone, b: ImageCone) -> Cone:
    return intersect(a.cone, b.cone)


def _rays_of(c: Cone) -> List[Vector]:
    return [g for g in c.generators if any(g)]


def tropicalize(d: DerivedMatrices, max_ground: Optional[int] = None) -> TropicalFan:
    N = d.N
    direct = sorted({primitive(v) for v in d.V_columns() if any(v)})
    kwargs = {} if max_ground is None else {"max_ground": max_ground}
    m = LinearMatroid(d.U, **kwargs)
    if m.rank_total < 2:
        # fan in R^1 is the origin; only the columns of V carry information
        return TropicalFan(N, [], direct, [])

    fan = bergman_fan(m)
    images = [map_cone(d.V, c) for c in fan.cones]
    full = [ic for ic in images if ic.generators and ic.span_dim == N - 1]
    degenerate = [ic for ic in images if not ic.generators or ic.span_dim != N - 1]
    diagnostics: List[str] = []
    merged = merge_cones(full, diagnostics)

    for a, b in combinations(merged, 2):
        if _span_key(a) == _span_key(b) and full_dim_overlap(a.cone, b.cone):
            diagnostics.append(f"full-dimensional overlap between {a.label} and {b.label}")

    direct_set = set(direct)
    hidden: Dict[Vector, set] = {}
    frontier = []
    for a, b in combinations(merged, 2):
        if _span_key(a) == _span_key(b):
            continue
        c = intersect_pair(a, b)
        if c.span_dim == 0:
            continue
        pair = tuple(sorted((a.label, b.label), key=lambda s: (len(s), s)))
        for r in _rays_of(c):
            if r not in direct_set:
                hidden.setdefault(r, set()).add(pair)
        frontier.append((c, pair))

    if N >= 4:
        # deeper intersections until the ray set stops growing
        seen = {c.key() for c, _ in frontier}
        while frontier:
            nxt = []
            for c, pair in frontier:
                for mc in merged:
                    if mc.cone.contains_cone(c):
                        continue
                    cc = intersect(c, mc.cone)
                    if cc.span_dim == 0 or cc.key() in seen:
                        continue
                    seen.add(cc.key())
                    for r in _rays_of(cc):
                        if r not in direct_set:
                            hidden.setdefault(r, set()).add(pair)
                    nxt.append((cc, pair))
            frontier = nxt

    hidden_rays = [HiddenRay(r, tuple(sorted(ps))) for r, ps in sorted(hidden.items())]
    return TropicalFan(N, merged, direct, hidden_rays, degenerate, diagnostics)
