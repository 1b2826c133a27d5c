from fractions import Fraction

import pytest

from tropdisc import compare_rays, derive, facet_normals, tropicalize
from tropdisc.polytope import SupportPolynomial
from tropdisc.system import SystemSpec

PAPER_LABELS = sorted(["12", "13", "14", "15", "16", "17", "23", "24", "25", "26", "27",
                       "45", "47", "56", "67", "346"])
PAPER_RAYS = sorted([(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -2), (-1, -2, -1),
                     (-1, -1, 2), (1, 2, -1), (-1, -1, -1), (0, 1, 1), (1, 3, 0)])


def test_paper_fan(paper_fan):
    assert sorted(paper_fan.cone_labels()) == PAPER_LABELS
    assert paper_fan.rays == PAPER_RAYS
    hidden = {h.ray: h.parents for h in paper_fan.hidden_rays}
    assert hidden == {
        (-1, -1, -1): (("25", "346"),),
        (0, 1, 1): (("23", "67"),),
        (1, 3, 0): (("12", "67"),),
    }
    assert not paper_fan.diagnostics


def test_paper_cones_are_two_dimensional(paper_fan):
    for c in paper_fan.cones:
        assert c.cone.span_dim == 2
        assert all(r in paper_fan.rays for r in c.generators)


def test_merged_cone_346(paper_fan):
    # flags 3<346, 4<346, 6<346 map into one plane and merge
    c = next(c for c in paper_fan.cones if c.label == "346")
    assert len(c.sources) == 3


def test_coordinate_swap_gives_same_rays(paper_fan):
    swapped = derive(SystemSpec.from_lists([(0, 2), (2, 0)], [[(1, 1), (2, 1)], [(1, 2)]]))
    assert tropicalize(swapped).rays == paper_fan.rays


def univariate(d, exps):
    return derive(SystemSpec.from_lists([(d,)], [[(e,) for e in exps]]))


def test_univariate_quadratic():
    fan = tropicalize(univariate(2, [1]))
    assert fan.rays == [(-1,), (1,)]
    assert fan.cones == [] and fan.hidden_rays == []


def sympy_discriminant_support(d, exps):
    """Support of disc_y(y^d + sum_j a_j y^e_j - 1), computed by sympy."""
    sympy = pytest.importorskip("sympy")
    y = sympy.Symbol("y")
    a = sympy.symbols(f"a1:{len(exps) + 1}")
    f = y ** d + sum(ai * y ** e for ai, e in zip(a, exps)) - 1
    disc = sympy.Poly(sympy.discriminant(f, y), *a)
    return SupportPolynomial(len(exps), {m: Fraction(int(c)) for m, c in disc.terms()})


@pytest.mark.parametrize("d,exps", [
    (3, [1, 2]), (4, [1, 3]), (4, [2, 3]), (5, [1, 2]), (6, [1, 4]),
    (3, [1, 2, 4]), (4, [1, 2, 3]),
])
def test_univariate_against_sympy(d, exps):
    poly = sympy_discriminant_support(d, exps)
    fan = tropicalize(univariate(d, exps))
    cmp = compare_rays(facet_normals(poly), fan)
    assert cmp.ok, cmp.summary()
