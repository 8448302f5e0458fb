import pytest
from hypothesis import given, strategies as st

from k3curves.lattice import C, DivisorClass, GramLattice, H, pair, self_int
from k3curves.obstruction import (
    Criterion,
    ObstructionReport,
    c_obstructions,
    cubics_needed,
    exact_sqrt,
    h_birationally_very_ample,
    h_very_ample,
    satisfies,
    solve_vs_C,
    solve_vs_H,
)
from k3curves.oracle import brute_solve

DC = DivisorClass


def hyperbolic(n, d, g):
    return d * d - 4 * n * (g - 1) > 0


hyperbolic_lattices = (
    st.tuples(st.integers(2, 40), st.integers(1, 120), st.integers(0, 400))
    .filter(lambda t: hyperbolic(*t))
    .map(lambda t: GramLattice(*t))
)
targets = st.tuples(st.sampled_from([-4, -2, 0, 2, 4]), st.integers(-6, 6))


@pytest.mark.parametrize(
    "triple, e, m, expected",
    [
        ((3, 7, 5), 0, 1, {DC(-1, 1)}),
        ((3, 4, 2), 0, 2, {DC(1, -1)}),
        ((3, 7, 5), 0, 0, set()),
        ((5, 5, 2), -2, 0, {DC(1, -2), DC(-1, 2)}),
        ((5, 3, 1), 0, 3, {DC(0, 1)}),
        ((2, 3, 0), 0, 3, set()),
    ],
)
def test_solve_vs_H_examples(triple, e, m, expected):
    L = GramLattice(*triple)
    got = solve_vs_H(L, e, m)
    assert got == expected
    assert got == brute_solve(L, e, m, "H", 50, 50)


@pytest.mark.parametrize(
    "triple, e, c, expected",
    [
        ((6, 5, 2), 0, 1, {DC(1, -2), DC(-1, 3)}),
        ((5, 3, 1), 0, 1, set()),
        ((2, 5, 3), -2, -1, {DC(-1, 1)}),
    ],
)
def test_solve_vs_C_examples(triple, e, c, expected):
    L = GramLattice(*triple)
    got = solve_vs_C(L, e, c)
    assert got == expected
    assert got == brute_solve(L, e, c, "C", 50, 50)


def test_cubic_class_for_lambda_one():
    assert DC(-3, 3) in cubics_needed(GramLattice(3, 7, 5))


@pytest.mark.parametrize("triple", [(9, 6, 2), (2, 2, 5)])
def test_solver_rejects_non_hyperbolic(triple):
    with pytest.raises(ValueError):
        solve_vs_H(GramLattice(*triple), 0, 1)
    with pytest.raises(ValueError):
        solve_vs_C(GramLattice(*triple), 0, 1)


def test_solver_rejects_odd_self_intersection():
    with pytest.raises(ValueError):
        solve_vs_H(GramLattice(2, 5, 3), -1, 0)
    with pytest.raises(ValueError):
        solve_vs_C(GramLattice(2, 5, 3), 1, 0)


def test_isotropic_curve_class_has_infinitely_many_orthogonal_multiples():
    with pytest.raises(ValueError):
        solve_vs_C(GramLattice(5, 3, 1), 0, 0)


def test_exact_sqrt():
    assert [exact_sqrt(a) for a in (0, 1, 2, 4, 10**40, 10**40 + 1, -4)] == [0, 1, None, 2, 10**20, None, None]


def test_h_very_ample_examples():
    assert h_very_ample(GramLattice(5, 3, 1)).ok

    v = h_very_ample(GramLattice(3, 4, 2))
    assert v.obstructed
    assert ObstructionReport(Criterion.H_HYPERELLIPTIC, frozenset({DC(1, -1)})) in v.reports

    v = h_very_ample(GramLattice(5, 5, 2))
    assert v.criteria() == {Criterion.H_CONTRACTS}
    assert v.reports[0].witnesses == {DC(1, -2), DC(-1, 2)}


def test_h_birationally_very_ample_examples():
    assert h_birationally_very_ample(GramLattice(5, 5, 2)).ok
    assert h_birationally_very_ample(GramLattice(3, 4, 2)).obstructed
    assert h_birationally_very_ample(GramLattice(5, 3, 1)).ok


def test_c_obstruction_examples():
    assert c_obstructions(GramLattice(2, 5, 3)) == {
        ObstructionReport(Criterion.C_NOT_NEF, frozenset({DC(-1, 1)}))
    }
    assert c_obstructions(GramLattice(6, 5, 2)) == {
        ObstructionReport(Criterion.C_NOT_BPF, frozenset({DC(1, -2), DC(-1, 3)}))
    }
    assert c_obstructions(GramLattice(5, 3, 1)) == frozenset()


def test_c_obstructions_requires_positive_genus():
    with pytest.raises(ValueError):
        c_obstructions(GramLattice(2, 5, 0))


def test_empty_report_rejected():
    with pytest.raises(ValueError):
        ObstructionReport(Criterion.H_NOT_BPF, frozenset())


def test_reports_rechecked_through_form():
    for triple in [(3, 4, 2), (5, 5, 2), (3, 7, 5), (6, 5, 2), (2, 5, 3)]:
        L = GramLattice(*triple)
        for rep in h_very_ample(L).reports:
            e, m = {Criterion.H_NOT_BPF: (0, 1), Criterion.H_HYPERELLIPTIC: (0, 2),
                    Criterion.H_CONTRACTS: (-2, 0)}[rep.criterion]
            assert all(satisfies(L, E, e, m) for E in rep.witnesses)
        for rep in c_obstructions(L):
            if rep.criterion is Criterion.C_NOT_BPF:
                assert all(satisfies(L, E, 0, 1, against=C) for E in rep.witnesses)
            else:
                assert all(self_int(L, E) == -2 and pair(L, E, C) < 0 for E in rep.witnesses)


@given(hyperbolic_lattices, targets)
def test_solve_vs_H_sound_and_bounded(L, target):
    e, m = target
    got = solve_vs_H(L, e, m)
    assert len(got) <= 2
    assert all(satisfies(L, E, e, m) for E in got)


@given(hyperbolic_lattices, targets)
def test_solve_vs_C_sound_and_bounded(L, target):
    e, c = target
    if L.g == 1 and c == 0 and e == 0:
        return
    got = solve_vs_C(L, e, c)
    assert len(got) <= 2
    assert all(satisfies(L, E, e, c, against=C) for E in got)


@given(hyperbolic_lattices, st.sampled_from([-4, -2, 0, 2]))
def test_orthogonal_solutions_symmetric(L, e):
    got = solve_vs_H(L, e, 0)
    assert {DC(-x, -y) for x, y in got} == got


@given(
    st.tuples(st.integers(2, 8), st.integers(1, 16), st.integers(0, 40)).filter(lambda t: hyperbolic(*t)),
    targets,
)
def test_solve_vs_H_matches_wide_enumeration(triple, target):
    L = GramLattice(*triple)
    e, m = target
    assert solve_vs_H(L, e, m) == brute_solve(L, e, m, "H", 60, 60)
