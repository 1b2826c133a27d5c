"""Rational polyhedral cones with integer generators.

A cone is stored by generators (V-representation).  The H-representation,
pairs of equalities ``e.x = 0`` and inequalities ``a.x >= 0``, is derived on
demand by brute-force facet enumeration, which is fine at desk scale.
"""

from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import List, Optional, Sequence, Tuple

from .exactmath import Vector, dot, nullspace, primitive, rank
from .lp import in_cone, strictly_feasible


def canonical_hyperplane(normal: Sequence[int]) -> Vector:
    """Primitive normal with first nonzero entry positive (orientation-free key)."""
    v = primitive(normal)
    first = next(x for x in v if x != 0)
    return v if first > 0 else tuple(-x for x in v)


def _dedup(vectors) -> List[Vector]:
    seen = {}
    for v in vectors:
        if any(x != 0 for x in v):
            seen.setdefault(primitive(v), None)
    return list(seen)


@dataclass(frozen=True)
class HRep:
    equalities: Tuple[Vector, ...]
    inequalities: Tuple[Vector, ...]


@dataclass(frozen=True, eq=False)
class Cone:
    """Cone generated by integer vectors in R^dim."""

    dim: int
    generators: Tuple[Vector, ...] = field(default=())

    @classmethod
    def from_generators(cls, generators, dim: Optional[int] = None) -> "Cone":
        gens = _dedup(generators)
        if dim is None:
            dim = len(generators[0])
        return cls(dim, tuple(gens))

    @cached_property
    def span_dim(self) -> int:
        return rank(self.generators) if self.generators else 0

    @cached_property
    def span_equalities(self) -> Tuple[Vector, ...]:
        return tuple(nullspace(self.generators, self.dim) if self.generators
                     else nullspace([], self.dim))

    @cached_property
    def hrep(self) -> HRep:
        eqs = self.span_equalities
        d = self.span_dim
        if d == 0:
            return HRep(eqs, ())
        facets = {}
        for subset in combinations(self.generators, d - 1):
            if d > 1 and rank(subset) != d - 1:
                continue
            normals = nullspace(list(subset) + list(eqs), self.dim)
            if len(normals) != 1:
                continue
            a = normals[0]
            vals = [dot(a, g) for g in self.generators]
            if all(v >= 0 for v in vals):
                facets.setdefault(a, None)
            elif all(v <= 0 for v in vals):
                facets.setdefault(tuple(-x for x in a), None)
        return HRep(eqs, tuple(sorted(facets)))

    def contains(self, point: Sequence) -> bool:
        h = self.hrep
        return (all(dot(e, point) == 0 for e in h.equalities)
                and all(dot(a, point) >= 0 for a in h.inequalities))

    def contains_cone(self, other: "Cone") -> bool:
        return all(self.contains(g) for g in other.generators)

    def is_pointed(self) -> bool:
        return not lineality_basis(self.hrep, self.dim)

    def reduced(self) -> "Cone":
        """Same cone with redundant generators removed.

        A generator is dropped when it is a nonnegative combination of the
        remaining ones (exact LP).
        """
        gens = list(self.generators)
        i = 0
        while i < len(gens):
            others = gens[:i] + gens[i + 1:]
            if others and in_cone(gens[i], others):
                gens.pop(i)
            else:
                i += 1
        return Cone(self.dim, tuple(sorted(gens)))

    def key(self) -> Tuple[Vector, ...]:
        return tuple(sorted(self.generators))

    def same_set(self, other: "Cone") -> bool:
        return self.contains_cone(other) and other.contains_cone(self)

    def __repr__(self):
        return f"Cone({list(self.generators)})"


def lineality_basis(h: HRep, dim: int) -> List[Vector]:
    return nullspace(list(h.equalities) + list(h.inequalities), dim)


def cone_from_hrep(h: HRep, dim: int) -> Cone:
    """Generators of {x : E x = 0, A x >= 0}: extreme rays plus +-lineality."""
    lin = lineality_basis(h, dim)
    fixed = list(h.equalities) + lin
    complement = nullspace(fixed, dim)
    k = len(complement)
    rays = {}
    if k > 0:
        for subset in combinations(h.inequalities, k - 1):
            sol = nullspace(fixed + list(subset), dim)
            if len(sol) != 1:
                continue
            r = sol[0]
            vals = [dot(a, r) for a in h.inequalities]
            if all(v >= 0 for v in vals):
                rays.setdefault(r, None)
            elif all(v <= 0 for v in vals):
                rays.setdefault(tuple(-x for x in r), None)
    gens = list(rays)
    for v in lin:
        gens.append(v)
        gens.append(tuple(-x for x in v))
    return Cone(dim, tuple(sorted(gens)))


def intersect(a: Cone, b: Cone) -> Cone:
    ha, hb = a.hrep, b.hrep
    h = HRep(ha.equalities + hb.equalities, ha.inequalities + hb.inequalities)
    return cone_from_hrep(h, a.dim).reduced()


def full_dim_overlap(a: Cone, b: Cone) -> bool:
    """Do two cones with the same linear span overlap in that span's dimension?"""
    ha, hb = a.hrep, b.hrep
    y = strictly_feasible(ha.equalities, ha.inequalities + hb.inequalities, a.dim)
    return y is not None


def union_is_convex(cones: Sequence[Cone]) -> bool:
    """Exact test that a union of equal-span cones is the cone they generate.

    The facet hyperplanes of all pieces cut the hull into chambers; each
    chamber lies wholly inside or wholly outside every piece, so checking one
    strictly interior point per chamber decides coverage.
    """
    dim = cones[0].dim
    hull = Cone.from_generators([g for c in cones for g in c.generators], dim)
    eqs = hull.hrep.equalities
    cuts = {}
    for c in cones:
        for a in c.hrep.inequalities:
            cuts.setdefault(canonical_hyperplane(a), None)
    chambers = [list(hull.hrep.inequalities)]
    for h in cuts:
        nxt = []
        neg = tuple(-x for x in h)
        for ch in chambers:
            for side in (h, neg):
                cand = ch + [side]
                if strictly_feasible(eqs, cand, dim) is not None:
                    nxt.append(cand)
        chambers = nxt
    for ch in chambers:
        y = strictly_feasible(eqs, ch, dim)
        if not any(c.contains(y) for c in cones):
            return False
    return True
