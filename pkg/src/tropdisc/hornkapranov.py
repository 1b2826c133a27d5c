"""Evaluation of the discriminant parametrization and residual checks.

``eval_w`` evaluates the |omega|-th power map exactly: every coordinate is a
product of linear forms in s with integer exponents.  ``eval_x_branches``
evaluates the multivalued map itself in complex floating point.
"""

import cmath
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .exactmath import dot
from .polytope import SupportPolynomial
from .system import DerivedMatrices

BRANCH_TOL = 1e-9


class PoleOrZero(ValueError):
    """A linear form of the parametrization vanishes at the requested point."""

    def __init__(self, which: str, s):
        super().__init__(f"linear form {which} vanishes at s = {list(map(str, s))}")
        self.which = which


def _point(s) -> Tuple[Fraction, ...]:
    s = tuple(Fraction(x) for x in s)
    if not any(s):
        raise ValueError("s must be a nonzero point of projective space")
    return s


def linear_forms(d: DerivedMatrices, s) -> List[Fraction]:
    """Values <U_r, s> for every row r of U (1-based labels in errors)."""
    s = _point(s)
    if len(s) != d.N:
        raise ValueError(f"s has {len(s)} coordinates, expected {d.N}")
    vals = [dot(row, s) for row in d.U]
    for r, v in enumerate(vals, start=1):
        if v == 0:
            raise PoleOrZero(_form_name(d, r), s)
    return vals


def _form_name(d: DerivedMatrices, r: int) -> str:
    N, n = d.N, d.n
    if r <= N:
        return f"s_{r} (row {r} of U)"
    if r <= N + n:
        return f"<psi_{r - N}, s> (row {r} of U)"
    return f"<psi~_{r - N - n}, s> (row {r} of U)"


def eval_w(d: DerivedMatrices, s) -> List[Fraction]:
    """The power map, coordinate by coordinate as written in closed form.

    w_lam = (-|w| s_lam / <psi~_i, s>)^|w| * prod_k (<psi~_k, s> / <psi_k, s>)^psi_{k,lam}
    with i the equation owning lam.
    """
    linear_forms(d, s)  # pole guard
    s = _point(s)
    a = d.detOmega
    psi = [dot(row, s) for row in d.Psi]
    psit = [dot(row, s) for row in d.PsiTilde]
    out = []
    for lam in range(d.N):
        i = d.block_of[lam]
        w = (Fraction(-a) * s[lam] / psit[i]) ** a
        for k in range(d.n):
            w *= (psit[k] / psi[k]) ** d.Psi[k][lam]
        out.append(w)
    return out


def eval_w_uv(d: DerivedMatrices, s) -> List[Fraction]:
    """Second route to the power map: prod_r <U_r, s> ** V[lam][r]."""
    forms = linear_forms(d, s)
    out = []
    for row in d.V:
        num, den = Fraction(1), Fraction(1)
        for f, e in zip(forms, row):
            if e > 0:
                num *= f ** e
            elif e < 0:
                den *= f ** -e
        out.append(num / den)
    return out


def eval_x_branches(d: DerivedMatrices, s, tol: float = BRANCH_TOL) -> List[np.ndarray]:
    """All branches of the multivalued map, deduplicated within ``tol``.

    The base of each fractional power is b_k = <phi~_k, s> / <phi_k, s>.  A
    branch fixes one value of log b_k per k (principal value plus 2 pi i m_k)
    and reuses it in every coordinate, so the choices are m in
    {0..|w|-1}^n.
    """
    linear_forms(d, s)
    s = _point(s)
    a = d.detOmega
    phi = [sum(p * x for p, x in zip(row, s)) for row in d.Phi]
    phit = [sum(p * x for p, x in zip(row, s)) for row in d.PhiTilde]
    logs = [cmath.log(complex(float(t / p))) for t, p in zip(phit, phi)]
    expo = np.array([[float(x) for x in row] for row in d.Phi])  # n x N

    # prefactor -s_lam / <phi~_i, s>, exact then rounded
    pre = np.array([complex(float(-s[lam] / phit[d.block_of[lam]])) for lam in range(d.N)])
    branches: List[np.ndarray] = []
    for m in product(range(a), repeat=d.n):
        lg = np.array([logs[k] + 2j * math.pi * m[k] for k in range(d.n)])
        x = pre * np.exp(lg @ expo)
        if not any(np.allclose(x, y, rtol=tol, atol=0) for y in branches):
            branches.append(x)
    return branches


def eval_polynomial(p: SupportPolynomial, x: Sequence[complex]) -> Tuple[complex, float]:
    """Value of p at x and the largest bare monomial modulus max |x^beta|."""
    re_parts, im_parts = [], []
    biggest = 0.0
    logabs = [math.log(abs(v)) for v in x]
    for e, c in p.terms.items():
        mono = complex(1.0)
        for v, k in zip(x, e):
            if k:
                mono *= v ** k
        biggest = max(biggest, math.exp(sum(k * l for k, l in zip(e, logabs))))
        t = float(c) * mono
        re_parts.append(t.real)
        im_parts.append(t.imag)
    return complex(math.fsum(re_parts), math.fsum(im_parts)), biggest


def residual(d: DerivedMatrices, delta: SupportPolynomial, s) -> float:
    """min over branches of |Delta(x(s))| / (1 + max_beta |x(s)^beta|).

    The normaliser uses bare monomials (no coefficients) so that a unit
    change in one coefficient moves the residual by an O(1) relative amount.
    """
    if delta.dim != d.N:
        raise ValueError(f"polynomial has dimension {delta.dim}, system has N = {d.N}")
    best = math.inf
    for x in eval_x_branches(d, s):
        val, big = eval_polynomial(delta, x)
        best = min(best, abs(val) / (1.0 + big))
    return best


@dataclass(frozen=True)
class ResidualRow:
    s: Tuple[Fraction, ...]
    branches: int
    residual: float


def sample_points(d: DerivedMatrices, count: int, seed: int = 0,
                  low: int = -9, high: int = 9) -> List[Tuple[Fraction, ...]]:
    """Seeded integer points avoiding every vanishing linear form."""
    for r, row in enumerate(d.U, start=1):
        if not any(row):
            raise ValueError(f"{_form_name(d, r)} is identically zero; the map is undefined")
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 1000 * max(count, 1):
            raise RuntimeError("could not find enough pole-free sample points")
        s = tuple(Fraction(rng.randint(low, high)) for _ in range(d.N))
        if not any(s):
            continue
        try:
            linear_forms(d, s)
        except PoleOrZero:
            continue
        out.append(s)
    return out


def residual_table(d: DerivedMatrices, delta: SupportPolynomial, samples: int = 10,
                   seed: int = 0) -> List[ResidualRow]:
    rows = []
    for s in sample_points(d, samples, seed):
        rows.append(ResidualRow(s, len(eval_x_branches(d, s)), residual(d, delta, s)))
    return rows


def perturbed(delta: SupportPolynomial, exponent: Optional[Sequence[int]] = None) -> SupportPolynomial:
    """Copy of ``delta`` with one coefficient raised by 1.

    The default is the first term in input order (``terms`` keeps it).
    """
    if exponent is None:
        exponent = next(iter(delta.terms))
    return delta.with_coefficient_shift(exponent, 1)
