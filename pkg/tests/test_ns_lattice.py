from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from k3hilb.errors import NonPositiveSquare, NotAnIsometry, NotIntegral, NotPrimitive
from k3hilb.ns_lattice import (
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
    invariant_generator,
    pairing,
    reflection_in_class,
    reflection_s,
    rotation,
)
from k3hilb.pell import is_square


def ctx(t):
    return LatticeContext(t)


def gram_preserved(m: Isometry) -> bool:
    # M^T G M == G computed entrywise, independent of the constructor check
    t = m.ctx.t
    G = ((2 * t, 0), (0, -2))
    M = m.matrix
    MT_G_M = [
        [sum(M[k][i] * G[k][l] * M[l][j] for k in range(2) for l in range(2)) for j in range(2)]
        for i in range(2)
    ]
    return MT_G_M == [list(r) for r in G]


@pytest.mark.parametrize(
    "t, c, sq", [(2, (1, 1), 2), (10, (1, 3), 2), (7, (0, 1), -2), (3, (0, 1), -2), (5, (1, 0), 10)]
)
def test_bbf_square(t, c, sq):
    assert bbf_square(ctx(t), NSClass(*c)) == sq


def test_apply_examples():
    c2, c10 = ctx(2), ctx(10)
    assert apply(Isometry.identity(c2), NSClass(5, 7)) == NSClass(5, 7)
    assert apply(Isometry(3, -2, 4, -3, c2), NSClass(1, 1)) == NSClass(1, 1)
    assert apply(Isometry(19, -6, 60, -19, c10), NSClass(1, 0)) == NSClass(19, 60)


def test_classify_isometry_examples():
    c = ctx(2)
    assert classify_isometry(Isometry(1, 0, 0, 1, c)) is IsometryType.ROTATION
    assert classify_isometry(Isometry(1, 0, 0, -1, c)) is IsometryType.REFLECTION
    assert classify_isometry(Isometry(3, -2, 4, -3, c)) is IsometryType.REFLECTION
    assert classify_isometry(Isometry(-1, 0, 0, -1, c)) is IsometryType.ROTATION
    assert classify_isometry(Isometry(-1, 0, 0, 1, c)) is IsometryType.REFLECTION


@pytest.mark.parametrize("m", [(1, 1, 0, 1), (2, 0, 0, 1), (3, 2, 4, -3), (3, -2, -4, -3)])
def test_not_an_isometry(m):
    with pytest.raises(NotAnIsometry):
        Isometry(*m, ctx(2))


def test_group_structure():
    assert group_structure(ctx(1)).structure is GroupStructure.FINITE_DIHEDRAL_4
    assert group_structure(ctx(9)).structure is GroupStructure.FINITE_DIHEDRAL_4
    g = group_structure(ctx(2))
    assert g.structure is GroupStructure.INFINITE_GENERALIZED_DIHEDRAL
    assert g.generator == (3, 2) and not g.is_square_t


@pytest.mark.parametrize("t", [1, 4, 9, 25])
def test_square_t_group_has_four_elements(t):
    # brute force: every Gram-compatible matrix with entries in [-30, 30]
    c = ctx(t)
    found = set()
    rng = range(-30, 31)
    for a in rng:
        for cc in rng:
            if cc * cc != t * (a * a - 1):
                continue
            for b in rng:
                for d in rng:
                    try:
                        found.add(Isometry(a, b, cc, d, c).matrix)
                    except NotAnIsometry:
                        pass
    assert found == {((1, 0), (0, 1)), ((-1, 0), (0, -1)), ((1, 0), (0, -1)), ((-1, 0), (0, 1))}


@pytest.mark.parametrize(
    "t, v, m",
    [(2, (1, 1), ((3, -2), (4, -3))), (10, (1, 3), ((19, -6), (60, -19))), (5, (1, 2), ((9, -4), (20, -9)))],
)
def test_reflection_in_class_examples(t, v, m):
    r = reflection_in_class(ctx(t), NSClass(*v))
    assert r.matrix == m
    assert gram_preserved(r)
    assert r @ r == Isometry.identity(ctx(t))


def test_reflection_in_class_errors():
    with pytest.raises(NotPrimitive):
        reflection_in_class(ctx(2), NSClass(2, 2))
    with pytest.raises(NonPositiveSquare):
        reflection_in_class(ctx(2), NSClass(1, 2))
    with pytest.raises(NotIntegral):
        # tb^2 - a^2 = 3 does not divide tb^2 + a^2 = 5
        reflection_in_class(ctx(2), NSClass(2, 1))


@pytest.mark.parametrize("t, v, expected", [(2, (1, 1), True), (5, (1, 2), True), (3, (1, 1), False)])
def test_extends_to_full_lattice(t, v, expected):
    assert extends_to_full_lattice(ctx(t), NSClass(*v)) is expected


@pytest.mark.parametrize("t", [t for t in range(2, 201) if not is_square(t)])
def test_extension_iff_square_two(t):
    c = ctx(t)
    for b in range(1, 51):
        for a in range(-50, 51):
            v = NSClass(b, a)
            if gcd(a, b) != 1 or t * b * b <= a * a:
                continue
            try:
                ext = extends_to_full_lattice(c, v)
            except NotIntegral:
                assert bbf_square(c, v) != 2
                continue
            assert ext == (bbf_square(c, v) == 2)


roots = st.tuples(st.integers(2, 300), st.integers(1, 60), st.integers(-60, 60)).filter(
    lambda p: gcd(p[1], p[2]) == 1 and p[0] * p[1] ** 2 > p[2] ** 2
)


@settings(max_examples=300)
@given(roots)
def test_reflections_are_involutive_isometries(p):
    t, b, a = p
    c = ctx(t)
    v = NSClass(b, a)
    try:
        m = reflection_in_class(c, v)
    except NotIntegral:
        return
    assert gram_preserved(m)
    assert m @ m == Isometry.identity(c)
    assert m.det == -1
    assert m(v) == v
    assert classify_isometry(m) is IsometryType.REFLECTION
    # +1 eigenspace is exactly the line through v
    assert invariant_generator(m) == (v if b > 0 else NSClass(-b, -a))
    w = NSClass(a, t * b)
    assert pairing(c, w, v) == 0 and m(w) == NSClass(-w.x, -w.y)


nonsquare_t = st.integers(2, 150).filter(lambda t: not is_square(t))


def _element(draw, t):
    m = rotation(ctx(t), draw(st.integers(-3, 3)), draw(st.sampled_from([1, -1])))
    if draw(st.booleans()):
        m = m @ reflection_s(ctx(t))
    return m


@st.composite
def element_pairs(draw):
    t = draw(nonsquare_t)
    return _element(draw, t), _element(draw, t)


@settings(max_examples=150)
@given(element_pairs())
def test_group_closure_and_dihedral_law(pair):
    m1, m2 = pair
    prod = m1 @ m2
    assert gram_preserved(prod) and gram_preserved(m1.inverse())
    assert m1 @ m1.inverse() == Isometry.identity(m1.ctx)
    same_type = classify_isometry(m1) == classify_isometry(m2)
    assert (classify_isometry(prod) is IsometryType.ROTATION) == same_type


def test_invariant_generator_of_s():
    assert invariant_generator(reflection_s(ctx(3))) == NSClass(1, 0)
    assert invariant_generator(Isometry(3, -2, 4, -3, ctx(2))) == NSClass(1, 1)
