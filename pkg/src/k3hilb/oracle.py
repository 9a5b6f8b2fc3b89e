"""Slow reference implementations used to cross-check the fast paths.

Nothing in here touches continued fractions, unit powers or the Nagell
bound; every routine enumerates candidates directly.
"""

from __future__ import annotations

from math import isqrt

from .ample_cone import is_ample
from .errors import InvalidInput
from .ns_lattice import NSClass
from .pell import PellSolution

__all__ = [
    "brute_pell",
    "brute_minimal",
    "stern_brocot_pell",
    "brute_square2_ample",
]


def _square_root(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def brute_pell(D: int, N: int, y_max: int) -> list[PellSolution]:
    """All (x, y) with 0 <= y <= y_max, x >= 0 and x^2 - D y^2 = N, sorted by x."""
    out = []
    for y in range(y_max + 1):
        x = _square_root(N + D * y * y)
        if x is not None:
            out.append(PellSolution(x, y, D, N))
    out.sort(key=lambda s: (s.x, s.y))
    return out


def brute_minimal(D: int, N: int, y_max: int) -> PellSolution | None:
    """First solution with x, y > 0 found by walking y = 1, 2, ..., y_max.

    For N > -D the right-hand side N + D y^2 grows with y, so the first hit
    has the smallest x as well.
    """
    if N <= -D:
        raise InvalidInput("brute_minimal needs N > -D")
    for y in range(1, y_max + 1):
        x = _square_root(N + D * y * y)
        if x:
            return PellSolution(x, y, D, N)
    return None


def stern_brocot_pell(D: int, N: int, y_max: int) -> list[PellSolution]:
    """Positive solutions with y <= y_max, found by descending the Stern-Brocot tree toward sqrt(D).

    If x^2 - D y^2 = N with y > 0 and x + y*sqrt(D) > |N| y then
    |x/y - sqrt(D)| < 1/y^2, which is closer than either Stern-Brocot parent
    of x/y; so x/y (in lowest terms) lies on the path to sqrt(D).  The
    inequality holds whenever D > N^2 (N > 0) or D >= N^2 + |N| (N < 0),
    and primitive solutions are then all found.  Non-primitive ones are
    recovered by scaling solutions of N / g^2.
    """
    if D < 2 or _square_root(D) is not None:
        raise InvalidInput(f"D={D} must be a non-square >= 2")
    if N == 0 or not (D > N * N if N > 0 else D >= N * N - N):
        raise InvalidInput(f"Stern-Brocot enumeration is not complete for D={D}, N={N}")
    found = set()
    for g in range(1, isqrt(abs(N)) + 1):
        if N % (g * g):
            continue
        n = N // (g * g)
        lp, lq, rp, rq = 0, 1, 1, 0
        while True:
            p, q = lp + rp, lq + rq
            if g * q > y_max:
                break
            v = p * p - D * q * q
            if v == n:
                found.add((g * p, g * q))
            if v < 0:
                lp, lq = p, q
            else:
                rp, rq = p, q
    return [PellSolution(x, y, D, N) for x, y in sorted(found)]


def brute_square2_ample(t: int, coord_max: int) -> list[NSClass]:
    """Every ample class (x, y) with 0 < x, y <= coord_max and 2t x^2 - 2y^2 = 2."""
    out = []
    for x in range(1, coord_max + 1):
        y = _square_root(t * x * x - 1)
        if y is None or not 0 < y <= coord_max:
            continue
        c = NSClass(x, y)
        if is_ample(t, c):
            out.append(c)
    return out
