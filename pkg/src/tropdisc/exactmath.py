"""Exact integer and rational matrix arithmetic.

Matrices are plain nested sequences (rows of ``int`` or ``Fraction``).
Every routine here is exact; nothing goes through floating point.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd, lcm
from typing import List, Optional, Sequence, Tuple

Vector = Tuple[int, ...]
Matrix = Sequence[Sequence]


def shape(m: Matrix) -> Tuple[int, int]:
    rows = len(m)
    cols = len(m[0]) if rows else 0
    for row in m:
        if len(row) != cols:
            raise ValueError("ragged matrix")
    return rows, cols


def _check_square(m: Matrix) -> int:
    rows, cols = shape(m)
    if rows != cols:
        raise ValueError(f"expected a square matrix, got {rows}x{cols}")
    return rows


def to_integer_rows(m: Matrix) -> List[List[int]]:
    """Scale each row by the lcm of its denominators (rank preserving)."""
    out = []
    for row in m:
        if all(type(x) is int for x in row):
            out.append(list(row))
            continue
        den = 1
        for x in row:
            den = lcm(den, Fraction(x).denominator)
        out.append([int(Fraction(x) * den) for x in row])
    return out


def _bareiss(a: List[List[int]]) -> Tuple[int, int]:
    """Fraction-free elimination in place; returns (rank, sign-adjusted last pivot)."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    prev = 1
    sign = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
            sign = -sign
        p = a[r][c]
        for i in range(r + 1, rows):
            ai = a[i]
            f = ai[c]
            for j in range(c + 1, cols):
                # exact division is guaranteed by Sylvester's identity
                ai[j] = (p * ai[j] - f * a[r][j]) // prev
            ai[c] = 0
        prev = p
        r += 1
    return r, sign * prev


def det(m: Matrix) -> int:
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = _check_square(m)
    if n == 0:
        return 1
    a = [[int(x) for x in row] for row in m]
    r, last = _bareiss(a)
    return last if r == n else 0


def det_rational(m: Matrix) -> Fraction:
    n = _check_square(m)
    den = 1
    scaled = []
    for row in m:
        d = 1
        for x in row:
            d = lcm(d, Fraction(x).denominator)
        den *= d
        scaled.append([int(Fraction(x) * d) for x in row])
    return Fraction(det(scaled), den) if n else Fraction(1)


def rank(m: Matrix) -> int:
    """Exact rank of an integer or rational matrix."""
    if len(m) == 0:
        return 0
    a = to_integer_rows(m)
    if not a[0]:
        return 0
    return _bareiss(a)[0]


def adjugate(m: Matrix) -> List[List[int]]:
    """Classical adjoint: ``adjugate(m) @ m == det(m) * I``."""
    n = _check_square(m)
    if n == 1:
        return [[1]]
    adj = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [
                [m[r][c] for c in range(n) if c != i]
                for r in range(n) if r != j
            ]
            adj[i][j] = (-1) ** (i + j) * det(minor)
    return adj


def matmul(a: Matrix, b: Matrix) -> List[list]:
    ar, ac = shape(a)
    br, bc = shape(b)
    if ac != br:
        raise ValueError(f"shape mismatch {ar}x{ac} @ {br}x{bc}")
    return [[sum(a[i][k] * b[k][j] for k in range(ac)) for j in range(bc)] for i in range(ar)]


def transpose(m: Matrix) -> List[list]:
    rows, cols = shape(m)
    return [[m[i][j] for i in range(rows)] for j in range(cols)]


def identity(n: int) -> List[List[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def dot(u: Sequence, v: Sequence):
    if len(u) != len(v):
        raise ValueError("length mismatch")
    return sum(x * y for x, y in zip(u, v))


def primitive(v: Sequence) -> Vector:
    """Divide an integer (or rational) vector by the gcd of its entries.

    The sign is kept, so opposite directions stay distinct.
    """
    if any(Fraction(x).denominator != 1 for x in v):
        v = to_integer_rows([v])[0]
    v = [int(x) for x in v]
    g = 0
    for x in v:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("primitive() of the zero vector")
    return tuple(x // g for x in v)


def minor_gcd(m: Matrix, k: int) -> int:
    """gcd of the absolute values of all k x k minors (0 if they all vanish)."""
    rows, cols = shape(m)
    if not 1 <= k <= min(rows, cols):
        raise ValueError(f"minor order {k} out of range for a {rows}x{cols} matrix")
    g = 0
    for rs in combinations(range(rows), k):
        for cs in combinations(range(cols), k):
            g = gcd(g, det([[m[r][c] for c in cs] for r in rs]))
            if g == 1:
                return 1
    return g


def rref(m: Matrix) -> Tuple[List[List[Fraction]], List[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    a = [[Fraction(x) for x in row] for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        p = a[r][c]
        a[r] = [x / p for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def _int_rref(m: Matrix) -> Tuple[List[List[int]], List[int]]:
    """Integer reduced echelon form: pivot columns are zero off the pivot row."""
    a = to_integer_rows(m)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        pr = a[r]
        p = pr[c]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                row = [p * x - f * y for x, y in zip(a[i], pr)]
                g = 0
                for x in row:
                    g = gcd(g, x)
                a[i] = [x // g for x in row] if g > 1 else row
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return a, pivots


def nullspace(m: Matrix, ncols: Optional[int] = None) -> List[Vector]:
    """Basis of {x : m x = 0} as primitive integer vectors.

    ``ncols`` is needed when ``m`` has no rows.
    """
    if len(m) == 0:
        if ncols is None:
            raise ValueError("ncols required for an empty matrix")
        return [tuple(int(i == j) for j in range(ncols)) for i in range(ncols)]
    a, pivots = _int_rref(m)
    cols = len(a[0])
    pivset = set(pivots)
    scale = 1
    for i, p in enumerate(pivots):
        scale = lcm(scale, abs(a[i][p]))
    basis = []
    for f in range(cols):
        if f in pivset:
            continue
        x = [0] * cols
        x[f] = scale
        for i, p in enumerate(pivots):
            x[p] = -a[i][f] * scale // a[i][p]
        basis.append(primitive(x))
    return basis


def solve(m: Matrix, b: Sequence) -> Optional[List[Fraction]]:
    """One solution of m x = b over Q, or None when inconsistent."""
    rows, cols = shape(m)
    aug = [list(row) + [b[i]] for i, row in enumerate(m)]
    a, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [Fraction(0)] * cols
    for i, p in enumerate(pivots):
        x[p] = a[i][cols]
    return x


def is_reduced(q: Fraction) -> bool:
    return q.denominator > 0 and gcd(q.numerator, q.denominator) == 1


def format_rational(q) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rational(text) -> Fraction:
    return Fraction(text)
