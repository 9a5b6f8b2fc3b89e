"""Automorphism group of the Hilbert square of a generic K3 surface of degree 2t.

For t = 1 the group is generated by the natural involution coming from the
double cover of the plane.  For t >= 2 it is either trivial or generated by
one non-symplectic involution, which exists exactly when t is not a square,
x^2 - 4t y^2 = 5 has no solution and x^2 - t y^2 = -1 has one.  The
involution acts on NS as the reflection in the unique ample class of
square 2.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .ample_cone import is_ample
from .errors import InternalInconsistency, InvalidInput
from .ns_lattice import (
    Isometry,
    LatticeContext,
    NSClass,
    bbf_square,
    extends_to_full_lattice,
    reflection_in_class,
)
from .pell import (
    PellSolution,
    is_square,
    minimal_solution_p1,
    minimal_solution_pm1,
    solution_power,
    solvable_general,
)

__all__ = [
    "AutTag",
    "AutClassification",
    "EulerCharVal",
    "classify",
    "square2_condition_equivalence",
    "unique_ample_square2",
    "euler_characteristic",
    "ODD_POWERS_CHECKED",
]

# z^(2k+1) for k < ODD_POWERS_CHECKED; only k = 0 can ever be ample
ODD_POWERS_CHECKED = 4


class AutTag(enum.Enum):
    TRIVIAL = "trivial"
    NATURAL_INVOLUTION = "natural_involution"
    NON_NATURAL_INVOLUTION = "non_natural_involution"


@dataclass(frozen=True)
class AutClassification:
    t: int
    tag: AutTag
    reason: str
    matrix: Isometry | None = None
    D: NSClass | None = None
    pell_m1: PellSolution | None = None
    pell_p1: PellSolution | None = None

    @property
    def action(self) -> str | None:
        # both involutions act by -1 on the symplectic form; recorded, not computed
        return None if self.tag is AutTag.TRIVIAL else "non-symplectic"

    @property
    def order(self) -> int:
        return 1 if self.tag is AutTag.TRIVIAL else 2


@dataclass(frozen=True)
class EulerCharVal:
    n: int
    chi: int


def _pell_conditions(t: int) -> tuple[bool, str]:
    if is_square(t):
        return False, "t is a perfect square"
    if solvable_general(4 * t, 5):
        return False, f"x^2-{4 * t}y^2=5 has a solution"
    if minimal_solution_pm1(t) is None:
        return False, f"x^2-{t}y^2=-1 has no solution"
    return True, "t is not a square, x^2-4ty^2=5 is unsolvable and x^2-ty^2=-1 is solvable"


def _involution_matrix(ctx: LatticeContext, a: int, b: int) -> Isometry:
    t = ctx.t
    return Isometry(2 * a * a + 1, -2 * a * b, 2 * t * a * b, -2 * a * a - 1, ctx)


def classify(t: int) -> AutClassification:
    if t < 1:
        raise InvalidInput(f"t must be >= 1, got {t}")
    if t == 1:
        return AutClassification(1, AutTag.NATURAL_INVOLUTION, "t = 1: double plane, the covering involution")
    ok, reason = _pell_conditions(t)
    if not ok:
        return AutClassification(t, AutTag.TRIVIAL, reason)

    ctx = LatticeContext(t)
    m1 = minimal_solution_pm1(t)
    p1 = minimal_solution_p1(t)
    a, b = m1.x, m1.y
    D = NSClass(b, a)
    matrix = _involution_matrix(ctx, a, b)

    if reflection_in_class(ctx, D) != matrix:
        raise InternalInconsistency(f"t={t}: closed-form involution differs from the reflection in D")
    if not extends_to_full_lattice(ctx, D):
        raise InternalInconsistency(f"t={t}: reflection in D does not extend")
    if (p1.x, p1.y) != (2 * a * a + 1, 2 * a * b) or (matrix.a, -matrix.b) != (p1.x, p1.y):
        raise InternalInconsistency(f"t={t}: minimal unit is not the square of the norm -1 unit")
    if bbf_square(ctx, D) != 2 or not is_ample(t, D):
        raise InternalInconsistency(f"t={t}: D={tuple(D)} is not an ample class of square 2")

    return AutClassification(t, AutTag.NON_NATURAL_INVOLUTION, reason, matrix, D, m1, p1)


def _ample_square2_candidates(t: int) -> list[NSClass]:
    if is_square(t):
        # x^2 - k^2 y^2 = -1 has no solutions once k >= 2
        return []
    z = minimal_solution_pm1(t)
    if z is None:
        return []
    out = []
    for k in range(ODD_POWERS_CHECKED):
        w = solution_power(z, 2 * k + 1)
        cls = NSClass(w.y, w.x)
        if is_ample(t, cls):
            out.append(cls)
    return out


def square2_condition_equivalence(t: int) -> tuple[bool, bool]:
    """(Pell triple condition, existence of an ample class of square 2) for t >= 2.

    The second value is decided independently, by testing ampleness of the
    classes built from odd powers of the minimal norm -1 unit.
    """
    if t < 2:
        raise InvalidInput(f"t must be >= 2, got {t}")
    return _pell_conditions(t)[0], bool(_ample_square2_candidates(t))


def unique_ample_square2(t: int) -> NSClass | None:
    if t < 2:
        raise InvalidInput(f"t must be >= 2, got {t}")
    found = _ample_square2_candidates(t)
    if len(found) > 1:
        raise InternalInconsistency(f"t={t}: several ample square-2 classes {found}")
    return found[0] if found else None


def euler_characteristic(n: int) -> EulerCharVal:
    """chi(nD) = n^4/2 + 5n^2/2 + 3 for D of square 2."""
    return EulerCharVal(n, (n**4 + 5 * n * n + 6) // 2)
