import itertools

import pytest
from hypothesis import given, strategies as st

from k3curves.lattice import (
    C,
    CurveQuery,
    DivisorClass,
    DomainError,
    GramLattice,
    H,
    Mode,
    discriminant,
    make_lattice,
    pair,
    reflect,
    self_int,
)

L253 = GramLattice(2, 5, 3)
GAMMA = DivisorClass(-1, 1)

lattices = st.builds(
    GramLattice,
    n=st.integers(2, 60),
    d=st.integers(1, 200),
    g=st.integers(0, 400),
)
classes = st.builds(DivisorClass, st.integers(-10**6, 10**6), st.integers(-10**6, 10**6))


@pytest.mark.parametrize(
    "triple, gram, lam",
    [
        ((2, 5, 3), ((4, 5), (5, 4)), 9),
        ((2, 1, 0), ((4, 1), (1, -2)), 9),
        ((9, 6, 2), ((18, 6), (6, 2)), 0),
    ],
)
def test_make_lattice(triple, gram, lam):
    L = make_lattice(CurveQuery(*triple))
    assert L.gram == gram
    assert L.lam == lam


@pytest.mark.parametrize("triple", [(1, 5, 3), (2, 0, 3), (2, 5, -1), (-3, -3, -3)])
def test_domain_violations_rejected(triple):
    with pytest.raises(DomainError):
        CurveQuery(*triple)
    with pytest.raises(DomainError):
        GramLattice(*triple)


def test_query_mode_from_string():
    assert CurveQuery(2, 5, 3, "birational").mode is Mode.BIRATIONAL
    with pytest.raises(ValueError):
        CurveQuery(2, 5, 3, "projective")


@pytest.mark.parametrize("D, expected", [(H, 4), (C, 4), (GAMMA, -2)])
def test_self_int_examples(D, expected):
    assert self_int(L253, D) == expected


@pytest.mark.parametrize("D1, D2, expected", [(H, C, 5), (GAMMA, C, -1), (GAMMA, H, 1)])
def test_pair_examples(D1, D2, expected):
    assert pair(L253, D1, D2) == expected
    assert pair(L253, D2, D1) == expected


def test_reflect_examples():
    assert reflect(L253, H, GAMMA) == C
    assert reflect(L253, GAMMA, GAMMA) == DivisorClass(1, -1)
    # H + C is orthogonal to Gamma
    D = DivisorClass(1, 1)
    assert pair(L253, D, GAMMA) == 0
    assert reflect(L253, D, GAMMA) == D


def test_reflect_rejects_non_roots():
    with pytest.raises(ValueError):
        reflect(L253, H, C)


def test_exact_on_huge_inputs():
    L = GramLattice(10**30, 10**40, 10**35)
    E = DivisorClass(10**20, -(10**25))
    assert 2 * L.n * self_int(L, E) == pair(L, E, H) ** 2 - L.lam * E.y**2


@given(lattices, classes)
def test_parity(L, E):
    assert self_int(L, E) % 2 == 0


@given(lattices)
def test_determinant_identity(L):
    (a, b), (c, d) = L.gram
    assert L.lam == pair(L, H, C) ** 2 - self_int(L, H) * self_int(L, C) == -(a * d - b * c)
    assert L.lam == discriminant(L.n, L.d, L.g)


@given(lattices, classes, classes, st.integers(-50, 50))
def test_pair_is_bilinear(L, D1, D2, t):
    lhs = pair(L, DivisorClass(D1.x + t * D2.x, D1.y + t * D2.y), C)
    assert lhs == pair(L, D1, C) + t * pair(L, D2, C)
    assert pair(L, D1, D1) == self_int(L, D1)


@given(lattices, classes)
def test_quadratic_identities(L, E):
    assert 2 * L.n * self_int(L, E) == pair(L, E, H) ** 2 - L.lam * E.y**2
    if L.g != 1:
        assert 2 * (L.g - 1) * self_int(L, E) == pair(L, E, C) ** 2 - L.lam * E.x**2
    else:
        assert pair(L, E, C) == L.d * E.x


@pytest.mark.parametrize("triple", [(2, 5, 3), (5, 5, 2), (3, 4, 2), (7, 1, 0), (4, 9, 1)])
def test_quadratic_identity_exhaustive_small_box(triple):
    L = GramLattice(*triple)
    for x, y in itertools.product(range(-10, 11), repeat=2):
        E = DivisorClass(x, y)
        assert 2 * L.n * self_int(L, E) == pair(L, E, H) ** 2 - L.lam * y * y


@given(st.integers(2, 30), st.integers(1, 60), st.booleans(), classes, classes)
def test_reflection_is_isometric_involution(n, extra, rational_curve, D1, D2):
    # C - H is a (-2)-class when g = d - n; C itself is one when g = 0
    if rational_curve:
        L, G = GramLattice(n, extra, 0), C
    else:
        L, G = GramLattice(n, n + extra, extra), DivisorClass(-1, 1)
    assert self_int(L, G) == -2
    r1, r2 = reflect(L, D1, G), reflect(L, D2, G)
    assert reflect(L, r1, G) == D1
    assert pair(L, r1, r2) == pair(L, D1, D2)
