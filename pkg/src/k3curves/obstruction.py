"""Closed-form search for divisor classes that obstruct ampleness properties.

Every search reduces to one of two identities valid for E = xH + yC:

    2n * E^2     = (E.H)^2 - lam * y^2
    2(g-1) * E^2 = (E.C)^2 - lam * x^2

so for a fixed self-intersection and a fixed pairing one coordinate is pinned
up to sign by an exact square root and the other follows by a linear
division. There are at most two solutions per target.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .lattice import DivisorClass, GramLattice, H, pair, self_int


class Criterion(str, Enum):
    H_NOT_BPF = "HNotBpf"
    H_HYPERELLIPTIC = "HHyperelliptic"
    H_CONTRACTS = "HContracts"
    C_NOT_NEF = "CNotNef"
    C_NOT_BPF = "CNotBpf"
    CUBICS_NEEDED = "CubicsNeeded"


# (E^2, E.H) targets defining each obstruction against H
H_TARGETS = {
    Criterion.H_NOT_BPF: (0, 1),
    Criterion.H_HYPERELLIPTIC: (0, 2),
    Criterion.H_CONTRACTS: (-2, 0),
    Criterion.CUBICS_NEEDED: (0, 3),
}


@dataclass(frozen=True)
class ObstructionReport:
    criterion: Criterion
    witnesses: frozenset

    def __post_init__(self):
        if not self.witnesses:
            raise ValueError("an obstruction report needs at least one witness")

    def sorted_witnesses(self) -> list[DivisorClass]:
        return sorted(self.witnesses)


@dataclass(frozen=True)
class Verdict:
    """Outcome of an ampleness test; ``ok`` exactly when no report was emitted."""

    reports: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.reports

    @property
    def obstructed(self) -> bool:
        return bool(self.reports)

    def criteria(self) -> set[Criterion]:
        return {r.criterion for r in self.reports}


def exact_sqrt(a: int) -> int | None:
    """Non-negative integer square root of a, or None when a is not a perfect square."""
    if a < 0:
        return None
    r = isqrt(a)
    return r if r * r == a else None


def _check(L: GramLattice, e: int) -> int:
    lam = L.lam
    if lam <= 0:
        raise ValueError(f"closed-form search needs a hyperbolic lattice, got lam={lam} for {tuple(L)}")
    if e % 2:
        raise ValueError(f"self-intersection target must be even in an even lattice, got {e}")
    return lam


def _signed(r: int):
    return (r, -r) if r else (0,)


def solve_vs_H(L: GramLattice, e: int, m: int) -> frozenset:
    """All nonzero classes E with E^2 = e and E.H = m."""
    lam = _check(L, e)
    n, d = L.n, L.d
    num = m * m - 2 * n * e
    if num % lam:
        return frozenset()
    r = exact_sqrt(num // lam)
    if r is None:
        return frozenset()
    out = set()
    for y in _signed(r):
        top = m - d * y
        if top % (2 * n) == 0:
            E = DivisorClass(top // (2 * n), y)
            if not E.is_zero():
                out.add(E)
    return frozenset(out)


def solve_vs_C(L: GramLattice, e: int, c: int) -> frozenset:
    """All nonzero classes E with E^2 = e and E.C = c."""
    lam = _check(L, e)
    n, d, g = L.n, L.d, L.g
    if g == 1:
        # C is isotropic: E.C = d*x and E^2 = 2x(n*x + d*y)
        if c % d:
            return frozenset()
        x = c // d
        if x == 0:
            if e == 0:
                raise ValueError("E^2 = 0, E.C = 0 has infinitely many solutions (all multiples of C) when g = 1")
            return frozenset()
        top = e - 2 * n * x * x
        if top % (2 * d * x):
            return frozenset()
        return frozenset({DivisorClass(x, top // (2 * d * x))})
    num = c * c - 2 * (g - 1) * e
    if num % lam:
        return frozenset()
    r = exact_sqrt(num // lam)
    if r is None:
        return frozenset()
    out = set()
    for x in _signed(r):
        top = c - d * x
        if top % (2 * (g - 1)) == 0:
            E = DivisorClass(x, top // (2 * (g - 1)))
            if not E.is_zero():
                out.add(E)
    return frozenset(out)


def _reports(L: GramLattice, criteria) -> tuple:
    out = []
    for crit in criteria:
        e, m = H_TARGETS[crit]
        found = solve_vs_H(L, e, m)
        if found:
            out.append(ObstructionReport(crit, found))
    return tuple(out)


def h_very_ample(L: GramLattice) -> Verdict:
    """Very ampleness of H by the three numerical conditions on E^2 and E.H.

    The condition excluding H ~ 2E with E^2 = 2 is vacuous here: H is a basis
    vector of the lattice and hence primitive.
    """
    if 2 * L.n < 4:
        raise ValueError("H^2 < 4 is never very ample")
    return Verdict(_reports(L, (Criterion.H_NOT_BPF, Criterion.H_HYPERELLIPTIC, Criterion.H_CONTRACTS)))


def h_birationally_very_ample(L: GramLattice) -> Verdict:
    """Like h_very_ample, but contracted (-2)-curves (E^2 = -2, E.H = 0) are allowed."""
    return Verdict(_reports(L, (Criterion.H_NOT_BPF, Criterion.H_HYPERELLIPTIC)))


def c_obstructions(L: GramLattice) -> frozenset:
    """Reports showing that |C| has no smooth member although H is nef.

    CNotNef fires for (d, g) = (2n+1, n+1), where C - H is a (-2)-class
    meeting C negatively; CNotBpf fires when some isotropic class meets C once.
    """
    _check(L, 0)
    if L.g < 1:
        raise ValueError("c_obstructions needs g >= 1")
    out = set()
    if (L.d, L.g) == (2 * L.n + 1, L.n + 1):
        out.add(ObstructionReport(Criterion.C_NOT_NEF, frozenset({DivisorClass(-1, 1)})))
    found = solve_vs_C(L, 0, 1)
    if found:
        out.add(ObstructionReport(Criterion.C_NOT_BPF, found))
    return frozenset(out)


def cubics_needed(L: GramLattice) -> frozenset:
    """Isotropic classes of degree 3, whose presence forces cubics into the ideal."""
    return solve_vs_H(L, 0, 3)


def satisfies(L: GramLattice, E: DivisorClass, e: int, m: int, against: DivisorClass = H) -> bool:
    """Re-check a witness directly through the intersection form."""
    return not E.is_zero() and self_int(L, E) == e and pair(L, E, against) == m

