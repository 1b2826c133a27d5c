from fractions import Fraction
from itertools import combinations, permutations

import pytest
from hypothesis import given, settings, strategies as st

from tropdisc.exactmath import (
    adjugate, det, det_rational, format_rational, identity, matmul, minor_gcd,
    nullspace, parse_rational, primitive, rank, solve,
)


def laplace_det(m):
    """Leibniz-formula determinant, independent of the Bareiss code."""
    n = len(m)
    total = 0
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = (-1) ** inv
        for i in range(n):
            term *= m[i][p[i]]
        total += term
    return total


def brute_rank(m):
    """Largest k with a nonzero k x k minor."""
    rows, cols = len(m), len(m[0])
    for k in range(min(rows, cols), 0, -1):
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                if laplace_det([[m[r][c] for c in cs] for r in rs]):
                    return k
    return 0


def int_matrix(rows, cols, lo=-4, hi=4):
    return st.lists(st.lists(st.integers(lo, hi), min_size=cols, max_size=cols),
                    min_size=rows, max_size=rows)


def test_det_small():
    assert det([[1, 2], [3, 4]]) == -2
    assert det([[2, 0], [0, 2]]) == 4
    assert det([[0, 2], [2, 0]]) == -4
    assert det([]) == 1


def test_det_rational():
    assert det_rational([[Fraction(1, 2), 0], [0, Fraction(2, 3)]]) == Fraction(1, 3)


def test_adjugate_paper_omega():
    assert adjugate([[2, 0], [0, 2]]) == [[2, 0], [0, 2]]
    assert adjugate([[5]]) == [[1]]


def test_rank_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[Fraction(1, 2), 1], [1, 2]]) == 1


def test_primitive():
    assert primitive([-2, -2, -4]) == (-1, -1, -2)
    assert primitive([Fraction(1, 2), Fraction(1, 3)]) == (3, 2)
    with pytest.raises(ValueError):
        primitive([0, 0])


def test_minor_gcd_examples():
    assert minor_gcd([[2, 0, 1, 1, 2], [0, 2, 1, 2, 1]], 2) == 1
    assert minor_gcd([[2, 0], [0, 2]], 2) == 4
    assert minor_gcd([[2, 4]], 1) == 2
    with pytest.raises(ValueError):
        minor_gcd([[1, 2]], 2)


def test_nullspace_and_solve():
    basis = nullspace([[1, 1, 1]])
    assert len(basis) == 2
    for v in basis:
        assert sum(v) == 0
    assert nullspace([], ncols=2) == [(1, 0), (0, 1)]
    assert solve([[1, 1], [1, -1]], [2, 0]) == [1, 1]
    assert solve([[1, 1], [1, 1]], [1, 2]) is None


def test_rational_format_round_trip():
    for q in (Fraction(3, 4), Fraction(-7, 2), Fraction(5)):
        assert parse_rational(format_rational(q)) == q
    assert format_rational(Fraction(6, 4)) == "3/2"


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 4).flatmap(lambda n: int_matrix(n, n, -6, 6)))
def test_adjugate_identity(m):
    n = len(m)
    d = det(m)
    assert d == laplace_det(m)
    expected = [[d * x for x in row] for row in identity(n)]
    assert matmul(adjugate(m), m) == expected
    assert matmul(m, adjugate(m)) == expected


@settings(max_examples=60, deadline=None)
@given(st.tuples(st.integers(1, 6), st.integers(1, 6)).flatmap(
    lambda rc: int_matrix(rc[0], rc[1], -2, 2)))
def test_rank_matches_brute_force(m):
    assert rank(m) == brute_rank(m)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-20, 20), min_size=1, max_size=5).filter(any))
def test_primitive_idempotent(v):
    p = primitive(v)
    assert primitive(p) == p
    # same direction: v is a positive multiple of p
    k = next(x // y for x, y in zip(v, p) if y)
    assert k > 0 and tuple(k * x for x in p) == tuple(v)


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(1, 3), st.integers(1, 4)).flatmap(
    lambda rc: int_matrix(rc[0], rc[1], -5, 5)))
def test_minor_gcd_matches_smith_form(m):
    sympy = pytest.importorskip("sympy")
    from sympy.matrices.normalforms import smith_normal_form

    k = min(len(m), len(m[0]))
    snf = smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
    prod = 1
    for i in range(k):
        prod *= int(snf[i, i])
    assert minor_gcd(m, k) == abs(prod)
