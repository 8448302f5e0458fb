"""Non-specialty of O_C(k) and the complete-intersection K3 surfaces (n = 2, 3, 4)."""
from __future__ import annotations

import warnings
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .classifier import Case, ClassificationResult, Quadrics, classify_triple
from .lattice import DomainError


def _validate_k(k) -> None:
    if np.any(np.asarray(k) < 1):
        raise ValueError("k must be >= 1")


def _warn_if_missing(n, d, g, k) -> None:
    if any(isinstance(v, np.ndarray) for v in (n, d, g, k)):
        return
    try:
        exists = classify_triple(n, d, g).exists
    except DomainError:
        exists = False
    if not exists:
        warnings.warn(
            f"no smooth curve of degree {d} and genus {g} on a K3 of degree {2 * n}; "
            "the non-specialty criterion is evaluated anyway",
            stacklevel=3,
        )


def nonspecial(n, d, g, k, *, warn: bool = True):
    """h^1(O_C'(k)) = 0 for all C' in |C|, i.e. d <= 2nk or dk > nk^2 + g.

    Works elementwise on numpy arrays (no existence warning is issued then).
    """
    _validate_k(k)
    if warn:
        _warn_if_missing(n, d, g, k)
    return (d <= 2 * n * k) | (d * k > n * k * k + g)


def nonspecial_lattice_equiv(n, d, g, k, *, warn: bool = True):
    """The same condition read off the class C - kH: it is not effective.

    C - kH is effective exactly when it has positive degree and
    self-intersection at least -2.
    """
    _validate_k(k)
    if warn:
        _warn_if_missing(n, d, g, k)
    degree = d - 2 * n * k
    square = 2 * (g - 1) - 2 * d * k + 2 * n * k * k
    return (degree <= 0) | (square < -2)


class CiFamily(Enum):
    QUARTIC_P3 = ("quartic", 2)
    TYPE_23_P4 = ("23", 3)
    TYPE_222_P5 = ("222", 4)

    def __init__(self, label, n):
        self.label = label
        self.n = n

    @classmethod
    def from_label(cls, label: str) -> "CiFamily":
        for f in cls:
            if f.label == label:
                return f
        raise ValueError(f"unknown family {label!r}; expected one of quartic, 23, 222")


@dataclass(frozen=True)
class CiClassification:
    """Classification on the general surface of degree 2n plus the complete-intersection verdict.

    ``exists`` refers to the complete intersection itself. It differs from
    ``classification.exists`` only for (2,2,2): a degree-8 surface whose ideal
    needs cubics is not cut out by three quadrics.
    """

    family: CiFamily
    classification: ClassificationResult
    exists: bool
    hypersurface_degree: int | None


def ci_classify(f: CiFamily, d: int, g: int) -> CiClassification:
    res = classify_triple(f.n, d, g)
    exists = res.exists
    if f is CiFamily.TYPE_222_P5 and res.quadrics is Quadrics.AND_CUBICS:
        exists = False
    hyp = d // (2 * f.n) if res.case is Case.I and res.exists else None
    return CiClassification(f, res, exists, hyp)
