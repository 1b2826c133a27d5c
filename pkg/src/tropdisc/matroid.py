"""Linear matroids on the rows of an integer matrix.

Ground-set elements are 1-based row labels.  Subsets are handled as sorted
tuples in every public return value so output order is canonical.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Sequence, Tuple

from .exactmath import rank

DEFAULT_MAX_GROUND = 24


class GroundSetTooLarge(ValueError):
    pass


@dataclass(frozen=True)
class Flat:
    members: Tuple[int, ...]
    rank: int

    def label(self) -> str:
        return set_label(self.members)


@dataclass(frozen=True)
class Flag:
    chain: Tuple[Flat, ...]

    def label(self) -> str:
        return "<".join(f.label() for f in self.chain)


def set_label(members: Iterable[int]) -> str:
    """"346" for {3, 4, 6}; comma separated once a label exceeds 9."""
    members = sorted(members)
    if all(m < 10 for m in members):
        return "".join(str(m) for m in members)
    return ",".join(str(m) for m in members)


@dataclass(eq=False)
class LinearMatroid:
    matrix: Tuple[Tuple[int, ...], ...]
    max_ground: int = DEFAULT_MAX_GROUND
    _ranks: Dict[FrozenSet[int], int] = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self.matrix = tuple(tuple(row) for row in self.matrix)
        if len(self.matrix) > self.max_ground:
            raise GroundSetTooLarge(
                f"ground set of size {len(self.matrix)} exceeds the cap {self.max_ground}")

    @property
    def ground(self) -> Tuple[int, ...]:
        return tuple(range(1, len(self.matrix) + 1))

    @property
    def rank_total(self) -> int:
        return self.rank_of(self.ground)

    def _check(self, S):
        for e in S:
            if not 1 <= e <= len(self.matrix):
                raise IndexError(f"element {e} not in ground set 1..{len(self.matrix)}")

    def rank_of(self, S: Iterable[int]) -> int:
        key = frozenset(S)
        r = self._ranks.get(key)
        if r is None:
            self._check(key)
            r = rank([self.matrix[e - 1] for e in sorted(key)]) if key else 0
            self._ranks[key] = r
        return r

    def is_independent(self, S: Iterable[int]) -> bool:
        S = tuple(S)
        return self.rank_of(S) == len(set(S))

    def closure(self, S: Iterable[int]) -> Tuple[int, ...]:
        S = set(S)
        r = self.rank_of(S)
        return tuple(e for e in self.ground if e in S or self.rank_of(S | {e}) == r)

    def is_flat(self, S: Iterable[int]) -> bool:
        S = tuple(sorted(set(S)))
        return self.closure(S) == S

    def circuits(self) -> List[Tuple[int, ...]]:
        """Minimal dependent subsets, lexicographically sorted."""
        out = []
        for k in range(1, self.rank_total + 2):
            for C in combinations(self.ground, k):
                if self.rank_of(C) != k - 1:
                    continue
                if all(self.rank_of(C[:i] + C[i + 1:]) == k - 1 for i in range(k)):
                    out.append(C)
        return sorted(out)

    def flats_of_rank(self, k: int) -> List[Flat]:
        found = set()
        for I in combinations(self.ground, k):
            if self.rank_of(I) == k:
                found.add(self.closure(I))
        return [Flat(F, k) for F in sorted(found)]

    def proper_flats(self) -> List[Flat]:
        out = []
        for k in range(1, self.rank_total):
            out.extend(self.flats_of_rank(k))
        return out

    def maximal_flags(self) -> List[Flag]:
        """Complete flags F_1 < ... < F_{r-1} of proper flats, rank(F_k) = k."""
        r = self.rank_total
        if r < 2:
            return []
        by_rank = [self.flats_of_rank(k) for k in range(1, r)]
        flags = [(F,) for F in by_rank[0]]
        for level in by_rank[1:]:
            flags = [
                chain + (G,)
                for chain in flags
                for G in level
                if set(chain[-1].members) < set(G.members)
            ]
        return [Flag(chain) for chain in flags]


def rank_of(m: LinearMatroid, S: Sequence[int]) -> int:
    return m.rank_of(S)


def closure(m: LinearMatroid, S: Sequence[int]) -> Tuple[int, ...]:
    return m.closure(S)


def circuits(m: LinearMatroid) -> List[Tuple[int, ...]]:
    return m.circuits()


def proper_flats(m: LinearMatroid) -> List[Flat]:
    return m.proper_flats()


def maximal_flags(m: LinearMatroid) -> List[Flag]:
    return m.maximal_flags()
