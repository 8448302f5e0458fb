"""Rank-2 intersection lattices spanned by a hyperplane class H and a curve class C.

Everything here is exact integer arithmetic on Python ints, so there is no
overflow to guard against: the supported input box is unbounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple


class DomainError(ValueError):
    """Raised when an input lies outside the standing hypotheses n >= 2, d >= 1, g >= 0."""


class Mode(str, Enum):
    EMBEDDED = "embedded"
    BIRATIONAL = "birational"


def check_triple(n: int, d: int, g: int) -> None:
    if n < 2:
        raise DomainError(f"n must be >= 2, got {n}")
    if d < 1:
        raise DomainError(f"d must be >= 1, got {d}")
    if g < 0:
        raise DomainError(f"g must be >= 0, got {g}")


@dataclass(frozen=True)
class CurveQuery:
    """A surface of degree 2n and a curve of degree d and genus g on it."""

    n: int
    d: int
    g: int
    mode: Mode = Mode.EMBEDDED

    def __post_init__(self):
        check_triple(self.n, self.d, self.g)
        if not isinstance(self.mode, Mode):
            object.__setattr__(self, "mode", Mode(self.mode))


class DivisorClass(NamedTuple):
    """The class x*H + y*C."""

    x: int
    y: int

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0


H = DivisorClass(1, 0)
C = DivisorClass(0, 1)


class RankOneWitness(NamedTuple):
    """Picard group Z*D with D^2 = 2m and H = k*D."""

    k: int
    m: int


def discriminant(n: int, d: int, g: int) -> int:
    """d^2 - 4n(g-1), the absolute discriminant of the pair (H, C)."""
    return d * d - 4 * n * (g - 1)


@dataclass(frozen=True)
class GramLattice:
    """The even lattice Z*H + Z*C with H^2 = 2n, H.C = d, C^2 = 2(g-1)."""

    n: int
    d: int
    g: int

    def __post_init__(self):
        check_triple(self.n, self.d, self.g)

    @property
    def gram(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((2 * self.n, self.d), (self.d, 2 * (self.g - 1)))

    @property
    def lam(self) -> int:
        return discriminant(self.n, self.d, self.g)

    def __iter__(self):
        return iter((self.n, self.d, self.g))


def make_lattice(q: CurveQuery) -> GramLattice:
    return GramLattice(q.n, q.d, q.g)


def pair(L: GramLattice, D1: DivisorClass, D2: DivisorClass) -> int:
    """Intersection number D1.D2."""
    x1, y1 = D1
    x2, y2 = D2
    return 2 * L.n * x1 * x2 + L.d * (x1 * y2 + y1 * x2) + 2 * (L.g - 1) * y1 * y2


def self_int(L: GramLattice, D: DivisorClass) -> int:
    x, y = D
    return 2 * L.n * x * x + 2 * L.d * x * y + 2 * (L.g - 1) * y * y


def reflect(L: GramLattice, D: DivisorClass, G: DivisorClass) -> DivisorClass:
    """Picard-Lefschetz reflection of D in the (-2)-class G: D + (D.G) G."""
    if self_int(L, G) != -2:
        raise ValueError(f"reflection needs a (-2)-class, got G={tuple(G)} with G^2={self_int(L, G)}")
    t = pair(L, D, G)
    return DivisorClass(D.x + t * G.x, D.y + t * G.y)
