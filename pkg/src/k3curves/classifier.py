"""Existence of smooth curves of degree d and genus g on K3 surfaces of degree 2n.

The verdict depends only on lam = d^2 - 4n(g-1) and a handful of
congruences, so `classify` never searches for classes; the obstruction
module and the oracle check it from the lattice side.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .lattice import CurveQuery, H, C, Mode, RankOneWitness, check_triple, discriminant


class Case(str, Enum):
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"
    HODGE = "HodgeViolation"


class Exclusion(str, Enum):
    A = "a"
    B = "b"
    C = "c"
    D = "d"
    RANK_ONE_FAIL = "rank_one_fail"
    D_DIVISIBLE = "d_divisible"
    EXCEPTIONAL_2N1 = "exceptional_2n1"


class Quadrics(str, Enum):
    ONLY = "QuadricsOnly"
    AND_CUBICS = "QuadricsAndCubics"
    NA = "NotApplicable"


@dataclass(frozen=True)
class PicardDescription:
    rank: int
    witnesses: tuple

    def canonical(self):
        return self.witnesses[0] if self.witnesses else None


RANK_TWO = PicardDescription(2, (H, C))


class ClassificationResult(NamedTuple):
    n: int
    d: int
    g: int
    mode: Mode
    exists: bool
    case: Case
    lam: int
    exceptions: frozenset
    picard: PicardDescription | None
    quadrics: Quadrics
    birational_only: bool

    def exception_labels(self) -> list[str]:
        return sorted(e.value for e in self.exceptions)


def case_of(lam: int, n: int) -> Case:
    if lam < 0:
        return Case.HODGE
    if lam == 0:
        return Case.I
    if lam < 4 * n:
        return Case.II
    if lam == 4 * n:
        return Case.III
    return Case.IV


def case_i_witnesses(n: int, d: int) -> tuple:
    """All (k, m) with n = k^2 m, (k, m) != (2, 1) and 2n | kd, by ascending k."""
    check_triple(n, d, 0)
    out = []
    k = 1
    while k * k <= n:
        if n % (k * k) == 0:
            m = n // (k * k)
            if (k, m) != (2, 1) and (k * d) % (2 * n) == 0:
                out.append(RankOneWitness(k, m))
        k += 1
    return tuple(out)


def _divides(a: int, b: int) -> bool:
    # 0 divides only 0
    return b == 0 if a == 0 else b % a == 0


def exceptions_ii(n: int, d: int, g: int) -> frozenset:
    """The exceptional clauses (a)-(d) that hold for a triple with 0 < lam < 4n.

    Each clause is evaluated literally and all hits are returned; several can
    hold at once.
    """
    lam = discriminant(n, d, g)
    if not 0 < lam < 4 * n:
        raise ValueError(f"exceptions_ii needs 0 < lam < 4n, got lam={lam} for n={n}")
    r = d % (2 * n)
    out = set()
    if r in {1 % (2 * n), 2 * n - 1, 2 % (2 * n), 2 * n - 2}:
        out.add(Exclusion.A)
    if lam == 1 and r in {(n + 1) % (2 * n), n - 1}:
        out.add(Exclusion.B)
    if lam == n and r == n:
        out.add(Exclusion.C)
    if lam == 1 and (_divides(d - 1, 2 * n) or _divides(d + 1, 2 * n)):
        out.add(Exclusion.D)
    return frozenset(out)


def needs_cubics(n: int, d: int, lam: int) -> bool:
    """Whether an isotropic class of degree 3 exists in case II."""
    r = d % (2 * n)
    plus_minus_3 = {3 % (2 * n), (-3) % (2 * n)}
    if lam == 1:
        return (3 * d) % (2 * n) in plus_minus_3
    if lam == 9:
        return r in plus_minus_3
    return False


def classify(q: CurveQuery) -> ClassificationResult:
    n, d, g, mode = q.n, q.d, q.g, q.mode
    lam = discriminant(n, d, g)
    case = case_of(lam, n)
    birational_only = False
    picard = RANK_TWO

    if case is Case.HODGE:
        return ClassificationResult(n, d, g, mode, False, case, lam, frozenset(), None, Quadrics.NA, False)

    if case is Case.I:
        ws = case_i_witnesses(n, d)
        picard = PicardDescription(1, ws)
        exc = frozenset() if ws else frozenset({Exclusion.RANK_ONE_FAIL})
        exists = bool(ws)
    elif case is Case.II:
        exc = exceptions_ii(n, d, g)
        if mode is Mode.BIRATIONAL:
            exists = exc <= {Exclusion.C}
            birational_only = exc == {Exclusion.C}
        else:
            exists = not exc
    elif case is Case.III:
        # a contracted curve meeting C twice makes the image of C singular,
        # so 2n | d fails in both modes
        exc = frozenset({Exclusion.D_DIVISIBLE}) if d % (2 * n) == 0 else frozenset()
        exists = not exc
    else:
        exc = frozenset({Exclusion.EXCEPTIONAL_2N1}) if (d, g) == (2 * n + 1, n + 1) else frozenset()
        exists = not exc

    if n < 4 or not exists:
        quadrics = Quadrics.NA
    elif case is Case.II and needs_cubics(n, d, lam):
        quadrics = Quadrics.AND_CUBICS
    else:
        quadrics = Quadrics.ONLY

    return ClassificationResult(n, d, g, mode, exists, case, lam, exc, picard, quadrics, birational_only)


def classify_triple(n: int, d: int, g: int, mode: Mode | str = Mode.EMBEDDED) -> ClassificationResult:
    return classify(CurveQuery(n, d, g, mode if isinstance(mode, Mode) else Mode(mode)))

