"""Bergman fan of a linear matroid, one cone per complete flag of proper flats.

Cones keep full R^|E| coordinates; the lineality direction (1,...,1) is
carried as a marker and only disappears once the fan is pushed forward.
"""

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .exactmath import Vector
from .matroid import Flag, LinearMatroid


class RankTooSmall(ValueError):
    pass


def incidence_vector(members: Sequence[int], size: int) -> Vector:
    s = set(members)
    return tuple(int(i in s) for i in range(1, size + 1))


@dataclass(frozen=True)
class BergmanCone:
    flag: Flag
    generators: Tuple[Vector, ...]
    lineality: Vector

    @property
    def label(self) -> str:
        return self.flag.label()


@dataclass(frozen=True)
class BergmanFan:
    matroid: LinearMatroid
    cones: Tuple[BergmanCone, ...]

    @property
    def dim(self) -> int:
        """Cone dimension modulo the lineality line."""
        return self.matroid.rank_total - 1


def bergman_fan(m: LinearMatroid) -> BergmanFan:
    if m.rank_total < 2:
        raise RankTooSmall("a matroid of rank < 2 has no proper flags; the fan is its lineality")
    size = len(m.ground)
    ones = (1,) * size
    cones = [
        BergmanCone(flag, tuple(incidence_vector(F.members, size) for F in flag.chain), ones)
        for flag in m.maximal_flags()
    ]
    cones.sort(key=lambda c: [F.members for F in c.flag.chain])
    return BergmanFan(m, tuple(cones))
