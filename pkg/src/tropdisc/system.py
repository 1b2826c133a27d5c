"""Reduced polynomial systems and the matrices derived from their exponents.

A reduced system has equations

    y^omega_i + sum_{lam in Lambda_i} x_lam y^lam - 1 = 0,   i = 1..n,

and is described only by its exponent data: one distinguished exponent
``omega_i`` and the list ``Lambda_i`` per equation.  Coefficient coordinates
are indexed by the disjoint union of the ``Lambda_i`` in input order.
"""

import json
import warnings
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import List, Tuple

from .exactmath import (
    Vector,
    adjugate,
    det,
    format_rational,
    matmul,
    minor_gcd,
    primitive,
    rank,
)


class InvalidSystem(ValueError):
    """Base class for invalid exponent data."""


class DegenerateOmega(InvalidSystem):
    pass


class DuplicateExponent(InvalidSystem):
    pass


class ZeroOrOmegaInLambda(InvalidSystem):
    pass


class RankDeficient(InvalidSystem):
    pass


class HypersurfaceWarning(UserWarning):
    pass


@dataclass(frozen=True)
class SystemSpec:
    omegas: Tuple[Vector, ...]
    lambdas: Tuple[Tuple[Vector, ...], ...]

    @classmethod
    def from_lists(cls, omegas, lambdas) -> "SystemSpec":
        return cls(
            tuple(tuple(int(x) for x in w) for w in omegas),
            tuple(tuple(tuple(int(x) for x in lam) for lam in block) for block in lambdas),
        )

    @property
    def n(self) -> int:
        return len(self.omegas)

    @property
    def N(self) -> int:
        return sum(len(block) for block in self.lambdas)

    def omega_matrix(self) -> List[List[int]]:
        """n x n matrix whose columns are the omega_i."""
        return [[w[r] for w in self.omegas] for r in range(self.n)]

    def exponent_matrix(self) -> List[List[int]]:
        """The n x (n + N) block matrix (omega | Lambda)."""
        cols = list(self.omegas) + [lam for block in self.lambdas for lam in block]
        return [[c[r] for c in cols] for r in range(self.n)]


def validate(spec: SystemSpec) -> SystemSpec:
    n = spec.n
    if n == 0:
        raise InvalidSystem("system has no equations")
    if len(spec.lambdas) != n:
        raise InvalidSystem(f"{n} omegas but {len(spec.lambdas)} lambda blocks")
    for w in spec.omegas:
        if len(w) != n:
            raise InvalidSystem(f"omega {w} is not in Z^{n}")
    if det(spec.omega_matrix()) == 0:
        raise DegenerateOmega("the matrix of distinguished exponents omega is singular")
    zero = (0,) * n
    for i, (w, block) in enumerate(zip(spec.omegas, spec.lambdas), start=1):
        seen = set()
        for lam in block:
            if len(lam) != n:
                raise InvalidSystem(f"exponent {lam} in equation {i} is not in Z^{n}")
            if lam == zero or lam == w:
                raise ZeroOrOmegaInLambda(
                    f"equation {i}: {lam} is the zero vector or omega_{i}")
            if lam in seen:
                raise DuplicateExponent(f"equation {i}: exponent {lam} listed twice")
            seen.add(lam)
    return spec


@dataclass(frozen=True)
class DerivedMatrices:
    n: int
    N: int
    Lambda: Tuple[Vector, ...]
    chi: Tuple[Vector, ...]
    detOmega: int
    detSign: int
    Phi: Tuple[Tuple[Fraction, ...], ...]
    PhiTilde: Tuple[Tuple[Fraction, ...], ...]
    Psi: Tuple[Vector, ...]
    PsiTilde: Tuple[Vector, ...]
    U: Tuple[Vector, ...]
    V: Tuple[Vector, ...]
    # equation index (0-based) owning each coefficient coordinate
    block_of: Tuple[int, ...]

    def V_columns(self) -> List[Vector]:
        return [tuple(row[j] for row in self.V) for j in range(len(self.U))]

    def to_dict(self) -> dict:
        rat = lambda m: [[format_rational(x) for x in row] for row in m]
        ints = lambda m: [list(row) for row in m]
        return {
            "N": self.N,
            "n": self.n,
            "Lambda": ints(self.Lambda),
            "chi": ints(self.chi),
            "detOmega": self.detOmega,
            "detSign": self.detSign,
            "Phi": rat(self.Phi),
            "PhiTilde": rat(self.PhiTilde),
            "Psi": ints(self.Psi),
            "PsiTilde": ints(self.PsiTilde),
            "U": ints(self.U),
            "V": ints(self.V),
        }


def _tup(m) -> tuple:
    return tuple(tuple(row) for row in m)


def derive(spec: SystemSpec) -> DerivedMatrices:
    validate(spec)
    n, N = spec.n, spec.N
    columns = [lam for block in spec.lambdas for lam in block]
    block_of = tuple(i for i, block in enumerate(spec.lambdas) for _ in block)
    Lam = [[c[r] for c in columns] for r in range(n)]
    chi = [[int(block_of[j] == i) for j in range(N)] for i in range(n)]

    omega = spec.omega_matrix()
    signed = det(omega)
    # work with d = |det omega| > 0 so Psi = d * Phi; with a negative
    # determinant the signed adjugate would reverse every direction
    d = abs(signed)
    sign = 1 if signed > 0 else -1
    if N:
        Psi = [[sign * x for x in row] for row in matmul(adjugate(omega), Lam)]
    else:
        Psi = [[] for _ in range(n)]
    PsiT = [[Psi[i][j] - d * chi[i][j] for j in range(N)] for i in range(n)]
    Phi = [[Fraction(x, d) for x in row] for row in Psi]
    PhiT = [[Phi[i][j] - chi[i][j] for j in range(N)] for i in range(n)]

    # U stacks the rows -|w| E_N, Psi, PsiTilde; V = (|w| E_N | -Psi^T | PsiTilde^T)
    U = [[-d * int(i == j) for j in range(N)] for i in range(N)] + Psi + PsiT
    V = [
        [d * int(i == j) for j in range(N)]
        + [-Psi[k][i] for k in range(n)]
        + [PsiT[k][i] for k in range(n)]
        for i in range(N)
    ]
    return DerivedMatrices(
        n=n, N=N, Lambda=_tup(Lam), chi=_tup(chi), detOmega=d, detSign=sign,
        Phi=_tup(Phi), PhiTilde=_tup(PhiT), Psi=_tup(Psi), PsiTilde=_tup(PsiT),
        U=_tup(U), V=_tup(V), block_of=block_of,
    )


def hypersurface_check(d: DerivedMatrices) -> bool:
    """True when no entry of Phi or PhiTilde vanishes.

    This is the sufficient condition for the parametrized image to be a
    hypersurface; failing it only earns a warning downstream.
    """
    return all(x != 0 for m in (d.Phi, d.PhiTilde) for row in m for x in row)


def warn_if_not_hypersurface(d: DerivedMatrices) -> bool:
    ok = hypersurface_check(d)
    if not ok:
        warnings.warn("Phi or PhiTilde has a zero entry; the image may not be a hypersurface",
                      HypersurfaceWarning, stacklevel=2)
    return ok


def lattice_index(spec: SystemSpec) -> int:
    """Index in Z^n of the lattice spanned by all exponent columns (omega | Lambda)."""
    validate(spec)
    m = spec.exponent_matrix()
    if rank(m) < spec.n:
        raise RankDeficient("exponent columns do not span R^n")
    return minor_gcd(m, spec.n)


@dataclass(frozen=True)
class Normal:
    raw: Vector
    primitive: Vector


def theorem1_normals(d: DerivedMatrices) -> List[Normal]:
    """Facet-normal directions read off from the exponent data.

    In order: the unit vectors e_1..e_N, then -psi_1..-psi_n, then
    psi~_1..psi~_n.  Up to the positive factor |omega| on the unit vectors
    these are the columns of V.
    """
    N = d.N
    raws = [tuple(int(i == j) for j in range(N)) for i in range(N)]
    raws += [tuple(-x for x in row) for row in d.Psi]
    raws += [tuple(row) for row in d.PsiTilde]
    return [Normal(r, primitive(r) if any(r) else r) for r in raws]


def load_system(path) -> SystemSpec:
    data = json.loads(Path(path).read_text())
    return system_from_dict(data)


def system_from_dict(data: dict) -> SystemSpec:
    try:
        eqs = data["equations"]
        spec = SystemSpec.from_lists([e["omega"] for e in eqs],
                                     [e.get("lambda", []) for e in eqs])
    except (KeyError, TypeError) as exc:
        raise InvalidSystem(f"malformed system document: {exc!r}") from exc
    if "n" in data and int(data["n"]) != spec.n:
        raise InvalidSystem(f"n = {data['n']} but {spec.n} equations given")
    return spec


def system_to_dict(spec: SystemSpec) -> dict:
    return {
        "n": spec.n,
        "equations": [
            {"omega": list(w), "lambda": [list(lam) for lam in block]}
            for w, block in zip(spec.omegas, spec.lambdas)
        ],
    }
