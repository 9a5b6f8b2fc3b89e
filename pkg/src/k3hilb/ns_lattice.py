"""The Neron-Severi lattice <2t> + <-2> of a Hilbert square and its isometries.

Coordinates are always taken in the basis (h, -delta): the pair (x, y)
stands for the class x*h - y*delta, and the Gram matrix is diag(2t, -2).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd

from .errors import (
    InternalInconsistency,
    InvalidInput,
    NonPositiveSquare,
    NotAnIsometry,
    NotIntegral,
    NotPrimitive,
)
from .pell import is_square, minimal_solution_p1, solution_power

__all__ = [
    "LatticeContext",
    "NSClass",
    "Isometry",
    "IsometryType",
    "GroupStructure",
    "GroupDescription",
    "bbf_square",
    "pairing",
    "apply",
    "classify_isometry",
    "group_structure",
    "rotation",
    "reflection_s",
    "reflection_in_class",
    "extends_to_full_lattice",
    "invariant_generator",
]


@dataclass(frozen=True)
class LatticeContext:
    t: int

    def __post_init__(self):
        if self.t < 1:
            raise InvalidInput(f"t must be >= 1, got {self.t}")

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2 * self.t, 0), (0, -2))


@dataclass(frozen=True)
class NSClass:
    """The class x*h - y*delta."""

    x: int
    y: int

    def __iter__(self):
        yield self.x
        yield self.y

    @property
    def is_primitive(self) -> bool:
        return gcd(self.x, self.y) == 1

    def primitive(self) -> "NSClass":
        g = gcd(self.x, self.y)
        if g == 0:
            raise InvalidInput("the zero class has no primitive multiple")
        return NSClass(self.x // g, self.y // g)


class IsometryType(enum.Enum):
    ROTATION = "rotation"
    REFLECTION = "reflection"


@dataclass(frozen=True)
class Isometry:
    """Integer matrix [[a, b], [c, d]] acting on (x, y) coordinates.

    Construction fails with NotAnIsometry unless M^T G M = G.
    """

    a: int
    b: int
    c: int
    d: int
    ctx: LatticeContext

    def __post_init__(self):
        t = self.ctx.t
        ok = (
            self.c * self.c == t * (self.a * self.a - 1)
            and self.d * self.d == t * self.b * self.b + 1
            and self.c * self.d == t * self.a * self.b
        )
        if not ok:
            raise NotAnIsometry(f"{self.matrix} does not preserve diag({2 * t}, -2)")

    @classmethod
    def from_matrix(cls, ctx: LatticeContext, m) -> "Isometry":
        (a, b), (c, d) = m
        return cls(a, b, c, d, ctx)

    @classmethod
    def identity(cls, ctx: LatticeContext) -> "Isometry":
        return cls(1, 0, 0, 1, ctx)

    @property
    def matrix(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __matmul__(self, other: "Isometry") -> "Isometry":
        if self.ctx != other.ctx:
            raise InvalidInput("isometries of different lattices")
        return Isometry(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            self.ctx,
        )

    def inverse(self) -> "Isometry":
        # det is +-1, so the adjugate divided by det is integral
        e = self.det
        return Isometry(e * self.d, -e * self.b, -e * self.c, e * self.a, self.ctx)

    def __call__(self, c: NSClass) -> NSClass:
        return NSClass(self.a * c.x + self.b * c.y, self.c * c.x + self.d * c.y)


def pairing(ctx: LatticeContext, u: NSClass, v: NSClass) -> int:
    return 2 * ctx.t * u.x * v.x - 2 * u.y * v.y


def bbf_square(ctx: LatticeContext, c: NSClass) -> int:
    return 2 * ctx.t * c.x * c.x - 2 * c.y * c.y


def apply(iso: Isometry, c: NSClass) -> NSClass:
    return iso(c)


def classify_isometry(iso: Isometry) -> IsometryType:
    """Rotation type [[A, B], [tB, A]] or reflection type [[A, B], [-tB, -A]]."""
    t = iso.ctx.t
    rotation = iso.c == t * iso.b and iso.d == iso.a
    reflection = iso.c == -t * iso.b and iso.d == -iso.a
    if rotation == reflection:
        raise NotAnIsometry(f"{iso.matrix} matches neither normal form")
    return IsometryType.ROTATION if rotation else IsometryType.REFLECTION


class GroupStructure(enum.Enum):
    FINITE_DIHEDRAL_4 = "finite_dihedral_4"
    INFINITE_GENERALIZED_DIHEDRAL = "infinite_generalized_dihedral"


@dataclass(frozen=True)
class GroupDescription:
    """O(NS) is N x| Z/2 where N holds the rotations and Z/2 = <s>."""

    is_square_t: bool
    structure: GroupStructure
    generator: tuple[int, int] | None = None


def group_structure(ctx: LatticeContext) -> GroupDescription:
    if is_square(ctx.t):
        # A^2 - k^2 B^2 = 1 forces B = 0: the group is {+-id, +-s}
        return GroupDescription(True, GroupStructure.FINITE_DIHEDRAL_4)
    u = minimal_solution_p1(ctx.t)
    return GroupDescription(False, GroupStructure.INFINITE_GENERALIZED_DIHEDRAL, (u.x, u.y))


def rotation(ctx: LatticeContext, n: int, sign: int = 1) -> Isometry:
    """sign * Z^n as the matrix [[A, B], [tB, A]], Z the generator of N."""
    if is_square(ctx.t):
        if n:
            raise InvalidInput("N is {+-id} for square t; only n = 0 exists")
        return Isometry(sign, 0, 0, sign, ctx)
    z = solution_power(minimal_solution_p1(ctx.t), n)
    return Isometry(sign * z.x, sign * z.y, sign * ctx.t * z.y, sign * z.x, ctx)


def reflection_s(ctx: LatticeContext) -> Isometry:
    return Isometry(1, 0, 0, -1, ctx)


def _check_root(ctx: LatticeContext, v: NSClass) -> int:
    if not v.is_primitive:
        raise NotPrimitive(f"{tuple(v)} is not primitive")
    q = ctx.t * v.x * v.x - v.y * v.y
    if q <= 0:
        raise NonPositiveSquare(f"{tuple(v)} has non-positive square {2 * q}")
    return q


def reflection_in_class(ctx: LatticeContext, v: NSClass) -> Isometry:
    """Reflection fixing v = (b, a) and negating its orthogonal complement.

    Matrix [[A, B], [-tB, -A]] with A = (tb^2 + a^2)/(tb^2 - a^2) and
    B = -2ab/(tb^2 - a^2); raises NotIntegral if these are not integers.
    """
    q = _check_root(ctx, v)
    b, a = v.x, v.y
    num_a = ctx.t * b * b + a * a
    num_b = -2 * a * b
    if num_a % q or num_b % q:
        raise NotIntegral(f"reflection in {tuple(v)} is not integral for t={ctx.t}")
    A, B = num_a // q, num_b // q
    return Isometry(A, B, -ctx.t * B, -A, ctx)


def extends_to_full_lattice(ctx: LatticeContext, v: NSClass) -> bool:
    """Whether the reflection in v extends to H^2 acting as -1 on the transcendental part.

    Only the integrality condition b^2 / (tb^2 - a^2) in Z on the
    U + <-2> block is evaluated; for primitive v it must coincide with
    v having square 2.
    """
    q = _check_root(ctx, v)
    reflection_in_class(ctx, v)
    integral = v.x * v.x % q == 0
    square_two = bbf_square(ctx, v) == 2
    if integral != square_two:
        raise InternalInconsistency(f"extension criterion disagrees with square-2 test for {tuple(v)}")
    return integral


def invariant_generator(iso: Isometry) -> NSClass:
    """Generator of the fixed sublattice of a reflection-type isometry, with b > 0.

    Computed as (-B, A - 1) / gcd(B, A - 1).
    """
    if classify_isometry(iso) is not IsometryType.REFLECTION:
        raise InvalidInput("only reflection-type isometries have a rank-1 fixed lattice")
    b, a = -iso.b, iso.a - 1
    if b == 0 and a == 0:
        # the identity-like corner case s = diag(1, -1); use the other row of M - I
        b, a = iso.a + 1, -iso.ctx.t * iso.b
    g = gcd(b, a)
    b, a = b // g, a // g
    if b < 0 or (b == 0 and a < 0):
        b, a = -b, -a
    return NSClass(b, a)
