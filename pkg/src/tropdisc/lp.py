"""Tiny exact linear-feasibility solver over the rationals.

Phase-one simplex with Bland's rule on a dense integer tableau, using
integer-preserving (Bareiss style) pivots so no fractions appear until the
solution is read off.
"""

from fractions import Fraction
from math import lcm
from typing import List, Optional, Sequence


def feasible_point(a_eq: Sequence[Sequence], b_eq: Sequence) -> Optional[List[Fraction]]:
    """Return some x >= 0 with ``a_eq @ x == b_eq``, or None if there is none."""
    m = len(a_eq)
    n = len(a_eq[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    # integer rows; rows with negative rhs are negated so the artificial basis is feasible
    rows = []
    for i, (row, b) in enumerate(zip(a_eq, b_eq)):
        row = list(row) + [b]
        if not all(type(x) is int for x in row):
            row = [Fraction(x) for x in row]
            den = 1
            for x in row:
                den = lcm(den, x.denominator)
            row = [int(x * den) for x in row]
        if row[-1] < 0:
            row = [-x for x in row]
        rows.append(row[:n] + [int(k == i) for k in range(m)] + [row[-1]])
    width = n + m
    basis = [n + i for i in range(m)]
    # phase-one objective (sum of artificials) as a reduced-cost row
    cost = [0] * (width + 1)
    for row in rows:
        for j in range(n):
            cost[j] -= row[j]
        cost[width] -= row[width]
    table = rows + [cost]
    # integer-preserving pivoting: true tableau entries are table / denom
    denom = 1

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(m):
            row = table[i]
            if row[enter] > 0:
                # compare row[width] / row[enter] without dividing
                if best is None:
                    best = i
                else:
                    lhs = row[width] * table[best][enter]
                    rhs = table[best][width] * row[enter]
                    if lhs < rhs or (lhs == rhs and basis[i] < basis[best]):
                        best = i
        if best is None:  # unbounded direction; cannot happen in phase one
            break
        pr = table[best]
        p = pr[enter]
        for i, row in enumerate(table):
            if i == best:
                continue
            f = row[enter]
            if f:
                table[i] = [(p * x - f * y) // denom for x, y in zip(row, pr)]
            else:
                table[i] = [p * x // denom for x in row]
        cost = table[m]
        denom = p
        basis[best] = enter

    if cost[width] != 0:
        return None
    x = [Fraction(0)] * n
    for i, j in enumerate(basis):
        if j < n:
            x[j] = Fraction(table[i][width], table[i][j])
    return x


def in_cone(point: Sequence, generators: Sequence[Sequence]) -> bool:
    """Is ``point`` a nonnegative combination of ``generators``?"""
    if not generators:
        return all(x == 0 for x in point)
    a = [[g[i] for g in generators] for i in range(len(point))]
    return feasible_point(a, point) is not None


def in_convex_hull(point: Sequence, points: Sequence[Sequence]) -> bool:
    if not points:
        return False
    a = [[p[i] for p in points] for i in range(len(point))]
    a.append([1] * len(points))
    return feasible_point(a, list(point) + [1]) is not None


def strictly_feasible(equalities: Sequence[Sequence], inequalities: Sequence[Sequence],
                      dim: int) -> Optional[List[Fraction]]:
    """Find y with ``e.y == 0`` for all equalities and ``a.y > 0`` for all inequalities.

    Homogeneous, so ``a.y >= 1`` is equivalent.  y is split as u - v with
    slacks t; returns y or None.
    """
    if not inequalities:
        return [Fraction(0)] * dim
    rows, rhs = [], []
    k = len(inequalities)
    for e in equalities:
        rows.append(list(e) + [-x for x in e] + [0] * k)
        rhs.append(0)
    for i, a in enumerate(inequalities):
        rows.append(list(a) + [-x for x in a] + [-int(j == i) for j in range(k)])
        rhs.append(1)
    sol = feasible_point(rows, rhs)
    if sol is None:
        return None
    return [sol[i] - sol[dim + i] for i in range(dim)]
