"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from tropdisc.exactmath import det
from tropdisc.system import SystemSpec


@st.composite
def valid_specs(draw, max_n=3, max_N=6, bound=3):
    n = draw(st.integers(1, max_n))
    vec = st.tuples(*[st.integers(-bound, bound)] * n)
    omegas = draw(st.lists(vec, min_size=n, max_size=n).filter(
        lambda ws: det([[w[r] for w in ws] for r in range(n)]) != 0))
    N = draw(st.integers(n, max(n, max_N)))
    sizes = [1] * n
    for _ in range(N - n):
        sizes[draw(st.integers(0, n - 1))] += 1
    zero = (0,) * n
    lam = st.tuples(*[st.integers(-5, 5)] * n)
    lambdas = []
    for w, k in zip(omegas, sizes):
        block = draw(st.lists(lam.filter(lambda v, w=w: v != zero and v != w),
                              min_size=k, max_size=k, unique=True))
        lambdas.append(block)
    return SystemSpec.from_lists(omegas, lambdas)
