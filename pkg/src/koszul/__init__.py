"""Exact computations over graded polynomial rings, at desk scale.

Core objects: GradedPolyRing / Polynomial, Ideal with Groebner machinery,
free chain complexes with degreewise homology, coordinate-prime supports,
Stanley-Reisner complexes and their odd-sphere towers, and the tower of
quotients by tensor powers of an augmentation fiber.
"""

from .complexes import (
    ChainMap,
    FreeComplex,
    GradedModulePresentation,
    HomologyTable,
    cone,
    unit_complex,
    zero_complex,
)
from .dgalgebra import DGAlgebra
from .errors import InputError, InvariantViolation
from .fields import PrimeField, Q, Rationals
from .groebner import ZERO_RING, HilbertSeries, Ideal
from .rings import GradedPolyRing, Polynomial
from .stanley_reisner import (
    SimplicialComplex,
    SociTower,
    dj_cohomology,
    is_complete_intersection,
    minimal_nonfaces,
    soci_tower,
    sr_ideal,
    sr_ring,
)
from .supports import (
    SpecSubset,
    is_power_torsion,
    is_regular_sequence,
    koszul_complex,
    koszul_regularity_check,
    support_complex,
    support_member,
    support_module,
    torsion_submodule_dims,
)
from .thick import (
    AugmentedAlgebraModel,
    adams_injectivity_bound,
    classify_thick,
    ff_order_check,
    koszul_generator_for,
    po_triangle_check,
    supp_tensor_check,
)

__version__ = "0.1.0"

__all__ = [
    "AugmentedAlgebraModel",
    "ChainMap",
    "DGAlgebra",
    "FreeComplex",
    "GradedModulePresentation",
    "GradedPolyRing",
    "HilbertSeries",
    "HomologyTable",
    "Ideal",
    "InputError",
    "InvariantViolation",
    "Polynomial",
    "PrimeField",
    "Q",
    "Rationals",
    "SimplicialComplex",
    "SociTower",
    "SpecSubset",
    "ZERO_RING",
    "adams_injectivity_bound",
    "classify_thick",
    "cone",
    "dj_cohomology",
    "ff_order_check",
    "is_complete_intersection",
    "is_power_torsion",
    "is_regular_sequence",
    "koszul_complex",
    "koszul_generator_for",
    "koszul_regularity_check",
    "minimal_nonfaces",
    "po_triangle_check",
    "soci_tower",
    "sr_ideal",
    "sr_ring",
    "supp_tensor_check",
    "support_complex",
    "support_member",
    "support_module",
    "torsion_submodule_dims",
    "unit_complex",
    "zero_complex",
]
