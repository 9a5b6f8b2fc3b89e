import pytest

from k3hilb.errors import InvalidInput
from k3hilb.ns_lattice import NSClass
from k3hilb.oracle import brute_minimal, brute_pell, brute_square2_ample, stern_brocot_pell
from k3hilb.pell import is_square, minimal_solution_general, minimal_solution_p1


def pairs(sols):
    return [(s.x, s.y) for s in sols]


def test_brute_pell_examples():
    assert pairs(brute_pell(2, -1, 10)) == [(1, 1), (7, 5)]
    assert pairs(brute_pell(10, 1, 10)) == [(1, 0), (19, 6)]
    assert brute_pell(8, 5, 1000) == []


def test_brute_minimal():
    assert (brute_minimal(20, 5, 10).x, brute_minimal(20, 5, 10).y) == (5, 1)
    assert brute_minimal(3, -1, 1000) is None
    with pytest.raises(InvalidInput):
        brute_minimal(2, -5, 10)


def test_brute_square2_ample_examples():
    assert brute_square2_ample(2, 100) == [NSClass(1, 1)]
    assert brute_square2_ample(13, 100) == [NSClass(5, 18)]
    assert brute_square2_ample(7, 100) == []


@pytest.mark.parametrize("D", [D for D in range(2, 120) if not is_square(D)])
def test_stern_brocot_matches_brute(D):
    y_max = 3000
    for N in (1, -1):
        assert pairs(stern_brocot_pell(D, N, y_max)) == [p for p in pairs(brute_pell(D, N, y_max)) if p[1] > 0]
    if D > 25:
        assert pairs(stern_brocot_pell(D, 5, y_max)) == [p for p in pairs(brute_pell(D, 5, y_max)) if p[1] > 0]


def test_stern_brocot_refuses_incomplete_cases():
    with pytest.raises(InvalidInput):
        stern_brocot_pell(20, 5, 100)
    with pytest.raises(InvalidInput):
        stern_brocot_pell(16, 1, 100)


@pytest.mark.parametrize("t", [t for t in range(7, 300) if not is_square(t)])
def test_p4t5_minimum_matches_stern_brocot(t):
    D = 4 * t
    cap = 3 * (minimal_solution_p1(D).y + 1)
    oracle = stern_brocot_pell(D, 5, cap)
    fast = minimal_solution_general(D, 5)
    assert (pairs(oracle[:1]) or [None])[0] == (None if fast is None else (fast.x, fast.y))
