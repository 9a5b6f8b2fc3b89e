"""Automorphisms and ample cones of Hilbert squares of generic K3 surfaces.

A generic projective K3 surface S with Pic(S) = Z H, H^2 = 2t, has
NS(S^[2]) = <2t> + <-2>.  Everything here reduces to exact integer work
with Pell equations on that rank-2 lattice.
"""

from .ample_cone import Cone, ConeCase, CaseTag, compute_cone, is_ample, is_nef, two_very_ample_threshold
from .classifier import (
    AutClassification,
    AutTag,
    EulerCharVal,
    classify,
    euler_characteristic,
    square2_condition_equivalence,
    unique_ample_square2,
)
from .errors import (
    InternalInconsistency,
    InvalidInput,
    InvalidNorm,
    K3HilbError,
    NonPositiveSquare,
    NotAnIsometry,
    NotIntegral,
    NotPrimitive,
    SquareRadicand,
    UnsupportedN,
)
from .ns_lattice import (
    GroupDescription,
    GroupStructure,
    Isometry,
    IsometryType,
    LatticeContext,
    NSClass,
    apply,
    bbf_square,
    classify_isometry,
    extends_to_full_lattice,
    group_structure,
    reflection_in_class,
)
from .pell import (
    ContinuedFraction,
    PellSolution,
    convergent,
    minimal_solution_general,
    minimal_solution_p1,
    minimal_solution_pm1,
    solution_power,
    solvable_general,
    sqrt_cf,
)

__version__ = "0.1.0"
