"""Ample cone of the Hilbert square of a generic K3 surface of degree 2t.

The cone is open and spanned by h = (1, 0) and a second ray read off from
a Pell equation.  All membership tests are exact integer cross products.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import InvalidInput
from .ns_lattice import NSClass
from .pell import PellSolution, is_square, minimal_solution_general, minimal_solution_p1

__all__ = [
    "CaseTag",
    "ConeCase",
    "Cone",
    "compute_cone",
    "is_ample",
    "is_nef",
    "two_very_ample_threshold",
    "cone_inequality",
]


class CaseTag(enum.Enum):
    SQUARE_T = "square_t"
    PELL_4T_5 = "pell_4t_5"
    PELL_T_1 = "pell_t_1"


@dataclass(frozen=True)
class ConeCase:
    """Which of the three cases fixed the second ray, with the data that did it."""

    tag: CaseTag
    raw_ray: NSClass
    k: int | None = None
    solution: PellSolution | None = None


@dataclass(frozen=True)
class Cone:
    ray1: NSClass
    ray2: NSClass

    def __post_init__(self):
        if self.ray1 != NSClass(1, 0):
            raise InvalidInput("first ray is always h = (1, 0)")
        r = self.ray2
        if not (r.x > 0 and r.y > 0 and r.is_primitive):
            raise InvalidInput(f"second ray {tuple(r)} must be primitive with positive entries")

    def contains(self, c: NSClass) -> bool:
        r = self.ray2
        return c.x > 0 and c.y > 0 and c.x * r.y - c.y * r.x > 0

    def closure_contains(self, c: NSClass) -> bool:
        r = self.ray2
        return c.x >= 0 and c.y >= 0 and c.x * r.y - c.y * r.x >= 0


@lru_cache(maxsize=4096)
def compute_cone(t: int) -> tuple[Cone, ConeCase]:
    if t < 1:
        raise InvalidInput(f"t must be >= 1, got {t}")
    if is_square(t):
        k = isqrt(t)
        raw = NSClass(1, k)
        case = ConeCase(CaseTag.SQUARE_T, raw, k=k)
    else:
        five = minimal_solution_general(4 * t, 5)
        if five is not None:
            raw = NSClass(five.x, 2 * t * five.y)
            case = ConeCase(CaseTag.PELL_4T_5, raw, solution=five)
        else:
            unit = minimal_solution_p1(t)
            raw = NSClass(unit.x, t * unit.y)
            case = ConeCase(CaseTag.PELL_T_1, raw, solution=unit)
    return Cone(NSClass(1, 0), raw.primitive()), case


def is_ample(t: int, c: NSClass) -> bool:
    """Strict interior membership; h and the second ray are nef but not ample."""
    return compute_cone(t)[0].contains(c)


def is_nef(t: int, c: NSClass) -> bool:
    # closure of the ample cone; not part of the classification logic
    return compute_cone(t)[0].closure_contains(c)


def two_very_ample_threshold(t: int) -> int:
    """Smallest a for which a*h - delta is known ample via 2-very-ampleness of aH."""
    if t < 1:
        raise InvalidInput(f"t must be >= 1, got {t}")
    if t == 1:
        return 3
    if t in (2, 3):
        return 2
    return 1


def _term(coef: int, var: str) -> str:
    return var if coef == 1 else f"{coef}{var}"


def cone_inequality(cone: Cone) -> str:
    """Defining inequalities, e.g. "y>0, 3y<4x" for the ray (3, 4)."""
    r = cone.ray2
    return f"y>0, {_term(r.x, 'y')}<{_term(r.y, 'x')}"
