"""Brute-force cross-checks of the closed-form solver and of the classifier.

Nothing in here uses the discriminant identities to find classes: candidates
are enumerated in a box and evaluated through the quadratic form directly.
Only the box *size* is derived from the identities, and a second, much
larger box on a thinner sample checks that nothing lives outside it.
"""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from math import isqrt

import numpy as np

from .classifier import Case, Exclusion, Quadrics, case_i_witnesses, classify_triple
from .lattice import C, DivisorClass, GramLattice, H, Mode, discriminant, pair, self_int
from .obstruction import (
    Criterion,
    c_obstructions,
    cubics_needed,
    h_birationally_very_ample,
    h_very_ample,
    solve_vs_C,
    solve_vs_H,
)
from .special import CiFamily

_INT64_SAFE = 2**62

# targets checked against H and against C as (e, m)
H_CHECKS = [(0, 1), (0, 2), (0, 3), (-2, 0)]
C_CHECKS = [(0, 1)]


def brute_solve(L: GramLattice, e: int, m: int, against: str, x_bound: int, y_bound: int) -> frozenset:
    """All nonzero (x, y) in the box |x| <= x_bound, |y| <= y_bound with E^2 = e and E.D = m,
    where D is H or C according to ``against``."""
    if x_bound < 0 or y_bound < 0:
        raise ValueError("bounds must be non-negative")
    if against not in ("H", "C"):
        raise ValueError(f"against must be 'H' or 'C', got {against!r}")
    n, d, g = L.n, L.d, L.g
    biggest = max(2 * n, d, abs(2 * (g - 1)), 1) * 4 * (max(x_bound, y_bound) + 1) ** 2
    if biggest >= _INT64_SAFE:
        raise OverflowError(f"box {x_bound}x{y_bound} too large for exact int64 evaluation on {tuple(L)}")
    x = np.arange(-x_bound, x_bound + 1, dtype=np.int64)[:, None]
    y = np.arange(-y_bound, y_bound + 1, dtype=np.int64)[None, :]
    sq = 2 * n * x * x + 2 * d * x * y + 2 * (g - 1) * y * y
    if against == "H":
        deg = 2 * n * x + d * y
    else:
        deg = d * x + 2 * (g - 1) * y
    hit = (sq == e) & (deg == m) & ~((x == 0) & (y == 0))
    ix, iy = np.nonzero(hit)
    return frozenset(DivisorClass(int(i) - x_bound, int(j) - y_bound) for i, j in zip(ix, iy))


def derived_bounds(L: GramLattice, e: int, m: int, against: str) -> tuple[int, int]:
    """A box guaranteed to contain every solution when lam >= 1."""
    n, d, g = L.n, L.d, L.g
    if against == "H":
        yb = isqrt(max(0, m * m - 2 * n * e))
        return (abs(m) + d * yb) // (2 * n) + 1, yb
    if g == 1:
        xb = abs(m) // d + 1
        return xb, (abs(e) + 2 * n * xb * xb) // (2 * d) + 1
    xb = isqrt(max(0, m * m - 2 * (g - 1) * e))
    return xb, (abs(m) + d * xb) // (2 * abs(g - 1)) + 1


@dataclass
class Mismatch:
    query: tuple
    check: str
    expected: str
    actual: str
    witness: str = ""


@dataclass
class SweepReport:
    name: str
    box: tuple
    triples_checked: int = 0
    checks: int = 0
    mismatches: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def expect(self, cond: bool, query, check: str, expected, actual, witness="") -> None:
        self.checks += 1
        if not cond:
            self.mismatches.append(Mismatch(tuple(query), check, str(expected), str(actual), str(witness)))

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (
            f"{self.name}: {status} box={self.box} triples={self.triples_checked} "
            f"checks={self.checks} mismatches={len(self.mismatches)}"
        )

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def g_range(n: int, d: int) -> range:
    """Genera swept for (n, d).

    The top genus floor(d^2/4n) + 1 still has lam = d^2 mod 4n >= 0, so one
    more is added to reach a Hodge-index violation.
    """
    return range(0, d * d // (4 * n) + 3)


def box_lattices(n_max: int, d_max: int):
    for n in range(2, n_max + 1):
        for d in range(1, d_max + 1):
            for g in g_range(n, d):
                yield n, d, g


def _fmt(s) -> str:
    return str(sorted(tuple(v) for v in s))


def sweep_solver(n_max: int = 12, d_max: int = 40, wide_n_max: int = 6, wide_d_max: int = 20) -> SweepReport:
    """Closed-form class sets against enumeration, target by target.

    Lattices with n <= wide_n_max and d <= wide_d_max are additionally searched
    in the box |x|, |y| <= 3d to catch solutions the derived bounds would miss.
    """
    rep = SweepReport("sweep_solver", (n_max, d_max, "0<=g<=d^2/4n+2, lam>0"))
    for n, d, g in box_lattices(n_max, d_max):
        if discriminant(n, d, g) <= 0:
            continue
        L = GramLattice(n, d, g)
        rep.triples_checked += 1
        wide = n <= wide_n_max and d <= wide_d_max
        for against, targets, solver in (("H", H_CHECKS, solve_vs_H), ("C", C_CHECKS, solve_vs_C)):
            for e, m in targets:
                got = solver(L, e, m)
                xb, yb = derived_bounds(L, e, m, against)
                want = brute_solve(L, e, m, against, xb, yb)
                rep.expect(got == want, (n, d, g), f"{against}{(e, m)}", _fmt(want), _fmt(got))
                rep.expect(len(got) <= 2, (n, d, g), f"{against}{(e, m)} cardinality", "<=2", len(got))
                if wide:
                    far = brute_solve(L, e, m, against, max(3 * d, xb), max(3 * d, yb))
                    rep.expect(far == want, (n, d, g), f"{against}{(e, m)} wide box", _fmt(far), _fmt(want))
    return rep


def _check_case_ii(rep: SweepReport, res, L: GramLattice) -> None:
    n, d, g = L
    key = (n, d, g)
    lam = res.lam
    va = h_very_ample(L)
    cobs = c_obstructions(L)
    obstructed = va.obstructed or bool(cobs)
    rep.expect(bool(res.exceptions) == obstructed, key, "exceptions vs obstructions",
               obstructed, sorted(e.value for e in res.exceptions),
               [(r.criterion.value, r.sorted_witnesses()) for r in va.reports + tuple(cobs)])

    only_contracts = obstructed and not cobs and va.criteria() == {Criterion.H_CONTRACTS} and lam == n
    rep.expect((bool(res.exceptions) and res.exceptions <= {Exclusion.C}) == only_contracts, key,
               "exceptions within {c} vs contraction-only", only_contracts, res.exception_labels())

    bva = h_birationally_very_ample(L)
    bir = classify_triple(n, d, g, Mode.BIRATIONAL)
    rep.expect(bir.exists == (bva.ok and not cobs), key, "birational existence",
               bva.ok and not cobs, bir.exists)

    r = d % (2 * n)
    if r in {1, 2 * n - 1}:
        rep.expect(lam == 1, key, "d = +-1 mod 2n forces lam = 1", 1, lam)
    if r in {2 % (2 * n), 2 * n - 2}:
        rep.expect(lam == 4, key, "d = +-2 mod 2n forces lam = 4", 4, lam)

    hyper = bool(solve_vs_H(L, 0, 2))
    cong = (lam == 1 and r in {1, 2 * n - 1, (n + 1) % (2 * n), n - 1}) or (lam == 4 and r in {2 % (2 * n), 2 * n - 2})
    rep.expect(hyper == cong, key, "hyperelliptic vs congruence", cong, hyper)

    if n >= 4 and res.exists:
        cub = cubics_needed(L)
        rep.expect(bool(cub) == (res.quadrics is Quadrics.AND_CUBICS), key, "cubics",
                   bool(cub), res.quadrics.value, _fmt(cub))


def _check_case_iii(rep: SweepReport, res, L: GramLattice) -> None:
    n, d, g = L
    key = (n, d, g)
    contracts = solve_vs_H(L, -2, 0)
    divisible = d % (2 * n) == 0
    rep.expect(divisible == bool(contracts), key, "2n | d vs contracted class", divisible, _fmt(contracts))
    if divisible:
        gamma = DivisorClass(d // (2 * n), -1)
        rep.expect(gamma in contracts and pair(L, gamma, C) == 2, key, "contracted class meets C twice",
                   2, pair(L, gamma, C), tuple(gamma))
    ok = h_very_ample(L).ok and not c_obstructions(L)
    rep.expect(res.exists == ok, key, "case III existence vs obstructions", ok, res.exists)


def _check_case_iv(rep: SweepReport, res, L: GramLattice) -> None:
    n, d, g = L
    key = (n, d, g)
    rep.expect(h_very_ample(L).ok, key, "H very ample for lam > 4n", True, False)
    special = (d, g) == (2 * n + 1, n + 1)
    if g >= 1:
        cobs = c_obstructions(L)
        rep.expect(bool(cobs) == special, key, "C obstructions iff (2n+1, n+1)", special, bool(cobs))
    if special:
        G = DivisorClass(-1, 1)
        nums = (self_int(L, G), pair(L, G, C), pair(L, G, H))
        rep.expect(nums == (-2, -1, 1), key, "C - H numerics", (-2, -1, 1), nums)
    rep.expect(res.exists == (not special), key, "case IV existence", not special, res.exists)


def _check_case_i(rep: SweepReport, res, n: int, d: int, g: int) -> None:
    key = (n, d, g)
    # the form is degenerate with kernel d*H - 2n*C
    gram = np.array([[2 * n, d], [d, 2 * (g - 1)]], dtype=object)
    kernel = gram.dot(np.array([d, -2 * n], dtype=object))
    rep.expect(list(kernel) == [0, 0], key, "dH ~ 2nC", [0, 0], list(kernel))
    # enumerate m | n with n/m a square, independently of case_i_witnesses
    found = []
    for m in range(1, n + 1):
        if n % m:
            continue
        k = isqrt(n // m)
        if k * k == n // m and (k, m) != (2, 1) and (k * d) % (2 * n) == 0:
            found.append((k, m))
    found.sort()
    got = [tuple(w) for w in case_i_witnesses(n, d)]
    rep.expect(found == got, key, "rank-one witnesses", found, got)
    rep.expect(res.exists == bool(found), key, "case I existence", bool(found), res.exists)


def sweep_theorem(n_max: int = 12, d_max: int = 40) -> SweepReport:
    """Confront the congruence-level classifier with lattice obstruction searches."""
    rep = SweepReport("sweep_theorem", (n_max, d_max, "0<=g<=d^2/4n+2"))
    for n, d, g in box_lattices(n_max, d_max):
        rep.triples_checked += 1
        res = classify_triple(n, d, g)
        lam = res.lam
        if lam < 0:
            rep.expect(res.case is Case.HODGE and not res.exists, (n, d, g), "Hodge index", "HodgeViolation",
                       res.case.value)
            continue
        if lam == 0:
            _check_case_i(rep, res, n, d, g)
            continue
        L = GramLattice(n, d, g)
        if res.case is Case.II:
            _check_case_ii(rep, res, L)
        elif res.case is Case.III:
            _check_case_iii(rep, res, L)
        else:
            _check_case_iv(rep, res, L)
        bir = classify_triple(n, d, g, Mode.BIRATIONAL)
        differs = bir.exists != res.exists
        expected_diff = res.case is Case.II and res.exceptions == {Exclusion.C}
        rep.expect(differs == expected_diff and (bir.exists or not res.exists), (n, d, g),
                   "birational relaxation", expected_diff, differs)
    return rep


def ci_closed_form(f: CiFamily, d: int, g: int) -> bool:
    """Existence on a smooth complete intersection, written out family by family."""
    if f is CiFamily.QUARTIC_P3:
        # g = d^2/8 + 1, or g < d^2/8 and (d, g) != (5, 3)
        return 8 * (g - 1) == d * d or (8 * g < d * d and (d, g) != (5, 3))
    if f is CiFamily.TYPE_23_P4:
        # g = d^2/12 + 1, g = d^2/12 + 1/4, or g < d^2/12 and (d, g) != (7, 4)
        return (
            12 * (g - 1) == d * d
            or 12 * (g - 1) == d * d - 9
            or (12 * g < d * d and (d, g) != (7, 4))
        )
    # g = d^2/16 + 1 with 8 | d, g = d^2/16 with d = 4 mod 8, or g < d^2/16 and (d, g) != (9, 5)
    return (
        (16 * (g - 1) == d * d and d % 8 == 0)
        or (16 * g == d * d and d % 8 == 4)
        or (16 * g < d * d and (d, g) != (9, 5))
    )


def run_selftest(n_max: int = 12, d_max: int = 40) -> list[SweepReport]:
    return [sweep_solver(n_max, d_max), sweep_theorem(n_max, d_max)]

