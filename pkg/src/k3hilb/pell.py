"""Exact solvers for Pell equations x^2 - D y^2 = N.

Everything here works on Python integers; no floating point is used.
The equations x^2 - t y^2 = +1 and -1 are solved through the periodic
continued fraction of sqrt(t).  Small general right-hand sides (N = 5 is
the case that matters for ample cones) are decided by an exhaustive
search: over the convergents of sqrt(D) when N^2 < D, otherwise over
every y below Nagell's bound on fundamental solutions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .errors import InternalInconsistency, InvalidInput, InvalidNorm, SquareRadicand, UnsupportedN

__all__ = [
    "ContinuedFraction",
    "PellSolution",
    "is_square",
    "sqrt_cf",
    "convergent",
    "minimal_solution_p1",
    "minimal_solution_pm1",
    "solvable_general",
    "minimal_solution_general",
    "solution_power",
    "positive_solutions",
    "fundamental_search_bound",
]


def is_square(n: int) -> bool:
    if n < 0:
        return False
    r = isqrt(n)
    return r * r == n


def _require_nonsquare(d: int) -> None:
    if d < 2:
        raise InvalidInput(f"radicand must be >= 2, got {d}")
    if is_square(d):
        raise SquareRadicand(f"{d} is a perfect square")


@dataclass(frozen=True)
class ContinuedFraction:
    """Expansion sqrt(t) = [a0; a1, ..., as] with the bracketed block repeating."""

    t: int
    a0: int
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise InvalidInput("period must be non-empty")
        if self.a0 != isqrt(self.t):
            raise InvalidInput(f"a0={self.a0} is not floor(sqrt({self.t}))")
        if self.period[-1] != 2 * self.a0:
            raise InvalidInput("last partial quotient of the period must be 2*a0")
        if any(a <= 0 for a in self.period):
            raise InvalidInput("partial quotients must be positive")

    @property
    def s(self) -> int:
        return len(self.period)

    def quotient(self, k: int) -> int:
        """Partial quotient a_k, wrapping around the period for k >= 1."""
        if k < 0:
            raise InvalidInput("index must be non-negative")
        if k == 0:
            return self.a0
        return self.period[(k - 1) % self.s]


@dataclass(frozen=True)
class PellSolution:
    """An exact solution of x^2 - D y^2 = N."""

    x: int
    y: int
    D: int
    N: int
    minimal: bool = False

    def __post_init__(self):
        if self.x * self.x - self.D * self.y * self.y != self.N:
            raise InvalidInput(
                f"({self.x}, {self.y}) does not solve x^2 - {self.D}y^2 = {self.N}"
            )
        if self.minimal and not self.positive:
            raise InvalidInput("a minimal solution must be positive")

    @property
    def positive(self) -> bool:
        return self.x > 0 and self.y > 0

    def __iter__(self):
        yield self.x
        yield self.y

    def __mul__(self, other: "PellSolution") -> "PellSolution":
        # (x1 + y1 sqrt D)(x2 + y2 sqrt D); norms multiply
        if self.D != other.D:
            raise InvalidInput("cannot multiply solutions for different D")
        return PellSolution(
            self.x * other.x + self.D * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.D,
            self.N * other.N,
        )


@lru_cache(maxsize=4096)
def sqrt_cf(t: int) -> ContinuedFraction:
    """Continued fraction of sqrt(t) via the quadratic-surd recurrence.

    The state (m, d) of (sqrt(t) + m) / d determines every later quotient,
    so the period closes exactly when the first state comes back.
    """
    if t < 2:
        raise InvalidInput(f"t must be >= 2, got {t}")
    if is_square(t):
        raise SquareRadicand(f"{t} is a perfect square")
    a0 = isqrt(t)
    m, d, a = 0, 1, a0
    first_state = None
    period = []
    while True:
        m = d * a - m
        d = (t - m * m) // d
        a = (a0 + m) // d
        if (m, d) == first_state:
            break
        if first_state is None:
            first_state = (m, d)
        period.append(a)
    if period[-1] != 2 * a0 or period.index(2 * a0) != len(period) - 1:
        raise InternalInconsistency(f"state-repetition period of sqrt({t}) disagrees with a_k = 2*a0")
    return ContinuedFraction(t, a0, tuple(period))


def convergent(cf: ContinuedFraction, k: int) -> tuple[int, int]:
    """Numerator and denominator of the k-th convergent C_k."""
    if k < 0:
        raise InvalidInput("k must be non-negative")
    x_prev, x = 0, 1
    y_prev, y = 1, 0
    for i in range(k + 1):
        a = cf.quotient(i)
        x_prev, x = x, a * x + x_prev
        y_prev, y = y, a * y + y_prev
    return x, y


@lru_cache(maxsize=4096)
def minimal_solution_p1(t: int) -> PellSolution:
    """Minimal positive solution of x^2 - t y^2 = 1."""
    _require_nonsquare(t)
    cf = sqrt_cf(t)
    k = cf.s - 1 if cf.s % 2 == 0 else 2 * cf.s - 1
    x, y = convergent(cf, k)
    return PellSolution(x, y, t, 1, minimal=True)


@lru_cache(maxsize=4096)
def minimal_solution_pm1(t: int) -> PellSolution | None:
    """Minimal positive solution of x^2 - t y^2 = -1, or None if there is none.

    Solvable exactly when the period of sqrt(t) has odd length.
    """
    _require_nonsquare(t)
    cf = sqrt_cf(t)
    if cf.s % 2 == 0:
        return None
    x, y = convergent(cf, cf.s - 1)
    return PellSolution(x, y, t, -1, minimal=True)


def solution_power(base: PellSolution, n: int) -> PellSolution:
    """(x_b + y_b sqrt D)^n for a unit of norm +1 or -1; n may be negative."""
    if base.N not in (1, -1):
        raise InvalidNorm(f"base has norm {base.N}, expected +1 or -1")
    if n < 0:
        # inverse of a unit is its conjugate times its norm
        inv = PellSolution(base.N * base.x, -base.N * base.y, base.D, base.N)
        return solution_power(inv, -n)
    result = PellSolution(1, 0, base.D, 1)
    for _ in range(n):
        result = result * base
    return result


def fundamental_search_bound(D: int, N: int) -> int:
    """Upper bound on y for a fundamental solution in each class of x^2 - D y^2 = N.

    Uses Nagell's bounds v*sqrt(N / (2(u+1))) for N > 0 and
    v*sqrt(|N| / (2(u-1))) for N < 0, where (u, v) is the minimal unit.
    The smaller denominator 2(u-1) is used for both signs and the
    result is rounded up and padded by one.
    """
    if N == 0:
        raise UnsupportedN("N = 0 is not supported")
    _require_nonsquare(D)
    u, v = minimal_solution_p1(D)
    # smallest Y with Y^2 * 2(u-1) >= v^2 |N|
    num = v * v * abs(N)
    den = 2 * (u - 1)
    y = isqrt(num // den)
    while y * y * den < num:
        y += 1
    return y + 1


def _nagell_seeds(D: int, N: int) -> list[PellSolution]:
    out = []
    for y in range(fundamental_search_bound(D, N) + 1):
        rhs = N + D * y * y
        if rhs < 0:
            continue
        x = isqrt(rhs)
        if x * x == rhs:
            out.append(PellSolution(x, y, D, N))
            if x:
                out.append(PellSolution(-x, y, D, N))
    return out


def _convergent_seeds(D: int, N: int) -> list[PellSolution]:
    # Valid for N^2 < D: every primitive solution is then a convergent of
    # sqrt(D), and the smallest positive solution of each class has
    # y <= (isqrt|N| + 1) * (y_unit + 1).
    cf = sqrt_cf(D)
    y_cap = (isqrt(abs(N)) + 1) * (minimal_solution_p1(D).y + 1)
    out = []
    for g in range(1, isqrt(abs(N)) + 1):
        if N % (g * g):
            continue
        n = N // (g * g)
        x_prev, x = 0, 1
        y_prev, y = 1, 0
        k = 0
        while True:
            a = cf.quotient(k)
            x_prev, x = x, a * x + x_prev
            y_prev, y = y, a * y + y_prev
            if g * y > y_cap:
                break
            if x * x - D * y * y == n:
                out.append(PellSolution(g * x, g * y, D, N))
            k += 1
    return out


def _class_seeds(D: int, N: int, method: str = "auto") -> list[PellSolution]:
    """Solutions such that every solution is a seed times a power of the minimal unit."""
    if method == "auto":
        method = "convergents" if N * N < D else "nagell"
    if method == "convergents":
        if N * N >= D:
            raise UnsupportedN(f"convergent search needs N^2 < D (N={N}, D={D})")
        return _convergent_seeds(D, N)
    if method == "nagell":
        return _nagell_seeds(D, N)
    raise InvalidInput(f"unknown method {method!r}")


def _mod8_obstructed(D: int, N: int) -> bool:
    # x^2 = N + D y^2 (mod 8) must have a solution; squares mod 8 are {0, 1, 4}
    squares = {0, 1, 4}
    return not any((N + D * y * y) % 8 in squares for y in range(8))


def solvable_general(D: int, N: int, use_filters: bool = True, method: str = "auto") -> bool:
    """Whether x^2 - D y^2 = N has an integer solution.

    ``method`` picks the exhaustive search: "nagell" scans every y below
    the fundamental-solution bound, "convergents" scans the convergents of
    sqrt(D) (only complete for N^2 < D), "auto" prefers the latter.
    With ``use_filters=False`` the mod-8 shortcut is skipped.
    """
    if N == 0:
        raise UnsupportedN("N = 0 is not supported")
    _require_nonsquare(D)
    if use_filters and _mod8_obstructed(D, N):
        return False
    return bool(_class_seeds(D, N, method))


def positive_solutions(D: int, N: int, count: int, method: str = "auto") -> list[PellSolution]:
    """The `count` smallest positive solutions of x^2 - D y^2 = N, ordered by x.

    Every solution is +-(seed) times a power of the minimal unit, and
    within a class x grows with the power, so a few powers on each side of
    every seed suffice.
    """
    if count <= 0:
        return []
    unit = minimal_solution_p1(D)
    seen = set()
    minus_one = PellSolution(-1, 0, D, 1)
    for f in _class_seeds(D, N, method):
        for seed in (f, f * minus_one):
            for n in range(-2, count + 3):
                z = seed * solution_power(unit, n)
                if z.positive:
                    seen.add((z.x, z.y))
    ordered = sorted(seen)[:count]
    return [PellSolution(x, y, D, N, minimal=(i == 0)) for i, (x, y) in enumerate(ordered)]


def minimal_solution_general(D: int, N: int, method: str = "auto") -> PellSolution | None:
    """Positive solution of x^2 - D y^2 = N with the smallest x, or None."""
    if N == 0:
        raise UnsupportedN("N = 0 is not supported")
    _require_nonsquare(D)
    found = positive_solutions(D, N, 1, method)
    return found[0] if found else None
