"""Tropical discriminants of reduced Laurent polynomial systems.

Exact computation of the tropicalization of the discriminant set via the
Bergman fan of a linear matroid, plus an independent Newton-polytope oracle
and a residual check on the Horn-Kapranov style parametrization.
"""

from .bergman import BergmanFan, bergman_fan, incidence_vector
from .exactmath import adjugate, det, minor_gcd, primitive, rank
from .hornkapranov import eval_w, eval_x_branches, residual
from .matroid import LinearMatroid
from .polytope import compare_rays, facet_normals, load_polynomial, parse_polynomial
from .system import (
    DerivedMatrices,
    SystemSpec,
    derive,
    hypersurface_check,
    lattice_index,
    load_system,
    theorem1_normals,
    validate,
)
from .tropical import TropicalFan, tropicalize

__all__ = [
    "BergmanFan", "DerivedMatrices", "LinearMatroid", "SystemSpec", "TropicalFan",
    "adjugate", "bergman_fan", "compare_rays", "derive", "det", "eval_w",
    "eval_x_branches", "facet_normals", "hypersurface_check", "incidence_vector",
    "lattice_index", "load_polynomial", "load_system", "minor_gcd", "parse_polynomial",
    "primitive", "rank", "residual", "theorem1_normals", "tropicalize", "validate",
]
