"""Smooth curves of given degree and genus on projective K3 surfaces.

Decides, for integers n >= 2, d >= 1, g >= 0, whether some K3 surface of
degree 2n in P^(n+1) carries a smooth curve of degree d and genus g, and
cross-checks every verdict against explicit divisor-class searches in the
Picard lattice.
"""
from .classifier import (
    Case,
    ClassificationResult,
    Exclusion,
    PicardDescription,
    Quadrics,
    case_i_witnesses,
    classify,
    classify_triple,
    exceptions_ii,
)
from .lattice import (
    C,
    CurveQuery,
    DivisorClass,
    DomainError,
    GramLattice,
    H,
    Mode,
    RankOneWitness,
    make_lattice,
    pair,
    reflect,
    self_int,
)
from .obstruction import (
    Criterion,
    ObstructionReport,
    Verdict,
    c_obstructions,
    cubics_needed,
    h_birationally_very_ample,
    h_very_ample,
    solve_vs_C,
    solve_vs_H,
)
from .oracle import SweepReport, brute_solve, ci_closed_form, sweep_solver, sweep_theorem
from .special import CiClassification, CiFamily, ci_classify, nonspecial, nonspecial_lattice_equiv

__version__ = "0.1.0"
