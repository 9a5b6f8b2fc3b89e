"""Acceptance gate.

Each test prints one ``PASS``/``FAIL`` line for its criterion, even under
captured output.  Run with ``pytest -m acceptance -s`` to see only these.
"""

import contextlib
import io
import random
import subprocess
import sys
import time

import pytest

from k3hilb import ample_cone, pell
from k3hilb.ample_cone import compute_cone, cone_inequality, is_ample, two_very_ample_threshold
from k3hilb.classifier import (
    AutTag,
    classify,
    euler_characteristic,
    square2_condition_equivalence,
    unique_ample_square2,
)
from k3hilb.cli import main
from k3hilb.ns_lattice import Isometry, LatticeContext, NSClass
from k3hilb.oracle import brute_minimal, brute_square2_ample, stern_brocot_pell
from k3hilb.pell import is_square, minimal_solution_p1, minimal_solution_pm1

pytestmark = pytest.mark.acceptance

# beyond this denominator a y-by-y walk is too slow; the Stern-Brocot descent takes over
BRUTE_Y_LIMIT = 10**6


@contextlib.contextmanager
def criterion(capsys, n, label):
    t0 = time.perf_counter()
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\nFAIL  criterion {n}: {label} ({time.perf_counter() - t0:.2f}s)")
        raise
    with capsys.disabled():
        print(f"\nPASS  criterion {n}: {label} ({time.perf_counter() - t0:.2f}s)")


def _clear_caches():
    for f in (pell.sqrt_cf, pell.minimal_solution_p1, pell.minimal_solution_pm1, ample_cone.compute_cone):
        f.cache_clear()


def test_c1_golden_values(capsys):
    with criterion(capsys, 1, "golden values for t=1,2,10,13,17 and chi(1)"):
        _clear_caches()
        t0 = time.perf_counter()
        for t, matrix, D, ineq in [
            (2, ((3, -2), (4, -3)), (1, 1), "y>0, 3y<4x"),
            (10, ((19, -6), (60, -19)), (1, 3), "y>0, 19y<60x"),
        ]:
            r = classify(t)
            assert r.tag is AutTag.NON_NATURAL_INVOLUTION
            assert r.matrix.matrix == matrix and r.D == NSClass(*D)
            assert cone_inequality(compute_cone(t)[0]) == ineq
        assert classify(1).tag is AutTag.NATURAL_INVOLUTION
        assert classify(13).tag is AutTag.NON_NATURAL_INVOLUTION
        assert classify(17).tag is AutTag.NON_NATURAL_INVOLUTION
        assert euler_characteristic(1).chi == 6
        assert time.perf_counter() - t0 < 1.0


def test_c2_equivalence_scan(capsys):
    with criterion(capsys, 2, "condition equivalence for t in [2,500]"):
        t0 = time.perf_counter()
        for t in range(2, 501):
            c1, c2 = square2_condition_equivalence(t)
            present = unique_ample_square2(t) is not None
            assert c1 == c2 == present, t
            assert (classify(t).tag is AutTag.NON_NATURAL_INVOLUTION) == c1, t
        assert time.perf_counter() - t0 < 30.0


def _oracle_minimal(D, N, y_max):
    """Smallest positive solution with y <= y_max, or None."""
    if y_max <= BRUTE_Y_LIMIT:
        return brute_minimal(D, N, y_max)
    sols = stern_brocot_pell(D, N, y_max)
    return min(sols, key=lambda s: s.x) if sols else None


def _pair(s):
    return None if s is None else (s.x, s.y)


def test_c3_oracle_equivalence(capsys):
    with criterion(capsys, 3, "continued-fraction minima equal oracle minima for non-square t <= 300"):
        for t in range(2, 301):
            if is_square(t):
                continue
            p1 = minimal_solution_p1(t)
            assert _pair(_oracle_minimal(t, 1, p1.y)) == _pair(p1), t
            m1 = minimal_solution_pm1(t)
            # a solution of the negative equation always has y below the unit's y
            cap = m1.y if m1 is not None else p1.y
            assert _pair(_oracle_minimal(t, -1, cap)) == _pair(m1), t


def test_c4_unit_from_negative_solution(capsys):
    with criterion(capsys, 4, "minimal P_t(1) equals (2a^2+1, 2ab) for non-square t <= 500"):
        checked = 0
        for t in range(2, 501):
            if is_square(t):
                continue
            m1 = minimal_solution_pm1(t)
            if m1 is None:
                continue
            a, b = m1.x, m1.y
            assert _pair(minimal_solution_p1(t)) == (2 * a * a + 1, 2 * a * b), t
            checked += 1
        assert checked > 0


def _gram_ok(m, t):
    (a, b), (c, d) = m.matrix
    # M^T diag(2t,-2) M, entrywise
    return (2 * t * a * a - 2 * c * c, 2 * t * a * b - 2 * c * d, 2 * t * b * b - 2 * d * d) == (2 * t, 0, -2)


def test_c5_reflection_algebra(capsys):
    with criterion(capsys, 5, "reflection algebra and 1000 interior rays per involution in [2,500]"):
        found = 0
        for t in range(2, 501):
            r = classify(t)
            if r.tag is not AutTag.NON_NATURAL_INVOLUTION:
                continue
            found += 1
            m, D = r.matrix, r.D
            assert m @ m == Isometry.identity(LatticeContext(t))
            assert _gram_ok(m, t)
            assert m.det == -1 and m(D) == D
            cone = compute_cone(t)[0]
            rng = random.Random(t)
            for _ in range(1000):
                lam, mu = rng.randint(1, 10**6), rng.randint(1, 10**6)
                c = NSClass(lam * cone.ray1.x + mu * cone.ray2.x, lam * cone.ray1.y + mu * cone.ray2.y)
                assert cone.contains(c) and cone.contains(m(c)), (t, c)
        assert found > 0


def test_c6_uniqueness(capsys):
    with criterion(capsys, 6, "brute_square2_ample(t, 10^4) finds one class iff non-natural involution, t <= 100"):
        for t in range(1, 101):
            found = brute_square2_ample(t, 10**4)
            r = classify(t)
            if r.tag is AutTag.NON_NATURAL_INVOLUTION:
                assert found == [r.D], t
            else:
                assert found == [], t


def test_c7_cone_consistency(capsys):
    with criterion(capsys, 7, "threshold classes (a,1) strictly interior for t <= 500"):
        for t in range(1, 501):
            a0 = two_very_ample_threshold(t)
            for a in range(a0, a0 + 21):
                assert is_ample(t, NSClass(a, 1)), (t, a)


def _scan(*extra):
    out = io.StringIO()
    assert main(["scan", "--from", "2", "--to", "500", *extra], out=out) == 0
    return out.getvalue()


def test_c8_scan_determinism(capsys):
    with criterion(capsys, 8, "scan 2..500 byte-identical across runs and --jobs"):
        base = _scan()
        assert base == _scan()
        assert base == _scan("--jobs", "4")
        proc = subprocess.run(
            [sys.executable, "-m", "k3hilb", "scan", "--from", "2", "--to", "500", "--jobs", "3"],
            capture_output=True, text=True, check=True,
        )
        assert proc.stdout == base
