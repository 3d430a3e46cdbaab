"""Build truncated Fock representations and verify the defining relations.

The recursion starts from a vacuum (alpha0, beta0) and produces the
eigenvalue ladders together with the squared ladder norms; the matrices
are then assembled level by level.  Relation residuals are measured on
the leading (d-1) x (d-1) block because a finite cutoff can only corrupt
the final row and column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import (
    CharacteristicFunctions,
    LadderSequence,
    NonPhysicalSequenceError,
    TruncatedRep,
    TruncationError,
    VacuumState,
)

__all__ = [
    "PhysicalityReport",
    "RelationReport",
    "Casimir1Report",
    "iterate_eigenvalues",
    "check_physical",
    "build_matrices",
    "verify_relations",
    "casimir1",
]

# Relation names, in the order the residuals are reported.
REL_H_RAISING = "H_raising"            # H a+ = a+ (f(H) + J3)
REL_H_LOWERING = "H_lowering"          # a H = (f(H) + J3) a
REL_J3_RAISING = "J3_raising"          # J3 a+ = a+ g(H)
REL_J3_LOWERING = "J3_lowering"        # a J3 = g(H) a
REL_LADDER_COMM = "ladder_commutator"  # [a, a+] = f(H) - H + J3
REL_HJ3_COMM = "H_J3_commutator"       # [H, J3] = 0
REL_CASIMIR_FORMS = "casimir_forms"    # a a+ - f(H) - J3 = a+ a - H

RELATION_NAMES = (
    REL_H_RAISING,
    REL_H_LOWERING,
    REL_J3_RAISING,
    REL_J3_LOWERING,
    REL_LADDER_COMM,
    REL_HJ3_COMM,
    REL_CASIMIR_FORMS,
)


def iterate_eigenvalues(funcs: CharacteristicFunctions, vacuum: VacuumState,
                        levels: int) -> LadderSequence:
    """Run the two-step recursion for ``levels`` steps.

    Returns alphas and betas of length levels + 1 and squared norms of
    length levels.  The first squared norm is f(alpha0) - alpha0 + beta0
    and each successive one adds f(alpha) - alpha + beta at the next
    level, which telescopes to norms_sq[n] = alphas[n+1] - alphas[0].
    """
    if levels < 1:
        raise ValueError("levels must be >= 1")
    alphas = [vacuum.alpha0]
    betas = [vacuum.beta0]
    for n in range(levels):
        a_next = funcs.f(alphas[n]) + betas[n]
        b_next = funcs.g(alphas[n])
        if not (math.isfinite(a_next) and math.isfinite(b_next)):
            raise TruncationError(
                f"eigenvalue iteration left the finite range at level {n + 1}",
                index=n + 1,
            )
        alphas.append(a_next)
        betas.append(b_next)
    norms_sq = [funcs.f(alphas[0]) - alphas[0] + betas[0]]
    for n in range(1, levels):
        norms_sq.append(norms_sq[n - 1] + funcs.f(alphas[n]) - alphas[n] + betas[n])
    return LadderSequence(vacuum, alphas, betas, norms_sq)


@dataclass(frozen=True)
class PhysicalityReport:
    """Outcome of the squared-norm check N[n]^2 >= 0."""

    physical: bool
    first_violation: int | None = None
    first_zero_norm: int | None = None

    def to_dict(self) -> dict:
        return {
            "physical": self.physical,
            "first_violation": self.first_violation,
            "first_zero_norm": self.first_zero_norm,
        }


def check_physical(seq: LadderSequence, tol: float = 0.0) -> PhysicalityReport:
    """A sequence is physical when every squared norm is nonnegative,
    equivalently alphas[n+1] >= alphas[0] for every stored level.

    A zero norm is legal (the representation block-decomposes there) and
    is only flagged.
    """
    first_zero = None
    for n, n2 in enumerate(seq.norms_sq):
        if n2 < -tol:
            return PhysicalityReport(False, first_violation=n,
                                     first_zero_norm=first_zero)
        if first_zero is None and abs(n2) <= tol:
            first_zero = n
    return PhysicalityReport(True, first_zero_norm=first_zero)


def build_matrices(seq: LadderSequence, dim: int | None = None,
                   tol: float = 0.0) -> TruncatedRep:
    """Assemble the d x d matrices from a physical sequence.

    H = diag(alphas[:d]), J3 = diag(betas[:d]) and a+ carries
    sqrt(norms_sq[:d-1]) on the first subdiagonal, with the nonnegative
    square root fixing the phase freedom.
    """
    d = len(seq.alphas) if dim is None else int(dim)
    if d < 1 or d > len(seq.alphas):
        raise ValueError(f"dim must be in [1, {len(seq.alphas)}]")
    report = check_physical(
        LadderSequence(seq.vacuum, seq.alphas[:d], seq.betas[:d], seq.norms_sq[:d - 1]),
        tol=tol,
    )
    if not report.physical:
        raise NonPhysicalSequenceError(
            f"negative squared norm at level {report.first_violation}; "
            "no real representation exists for this vacuum",
            index=report.first_violation,
        )
    H = np.diag(seq.alphas[:d])
    J3 = np.diag(seq.betas[:d])
    subdiag = np.sqrt(np.clip(seq.norms_sq[:d - 1], 0.0, None))
    a_dag = np.zeros((d, d))
    if d > 1:
        a_dag[np.arange(1, d), np.arange(d - 1)] = subdiag
    return TruncatedRep(d, H, J3, a_dag, a_dag.T)


@dataclass(frozen=True)
class RelationReport:
    """Max-abs residuals of the defining relations on the interior block."""

    residuals: dict[str, float]
    dim: int
    interior_dim: int
    tol: float
    passed: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "passed",
                           all(v <= self.tol for v in self.residuals.values()))

    def to_dict(self) -> dict:
        return {
            "residuals": dict(self.residuals),
            "dim": self.dim,
            "interior_dim": self.interior_dim,
            "tol": self.tol,
            "passed": self.passed,
        }


def _interior_max(mat: np.ndarray) -> float:
    d = mat.shape[0]
    return float(np.max(np.abs(mat[: d - 1, : d - 1]))) if d > 1 else 0.0


def _poly_of_diag(coeffs, diag: np.ndarray) -> np.ndarray:
    acc = np.zeros_like(diag)
    for c in reversed(coeffs):
        acc = acc * diag + c
    return np.diag(acc)


def verify_relations(rep: TruncatedRep, funcs: CharacteristicFunctions,
                     tol: float = 1e-9) -> RelationReport:
    """Residuals of all defining relations plus the two-Casimir-forms check.

    Each residual is the left-minus-right matrix, measured max-abs over
    the leading (d-1) x (d-1) block; [H, J3] is measured on the full
    matrix since both factors are diagonal and untouched by truncation.
    """
    if rep.dim < 3:
        raise ValueError("relation verification needs dim >= 3")
    H, J3, ad, a = rep.H, rep.J3, rep.a_dag, rep.a
    fH = _poly_of_diag(funcs.f_coeffs, np.diag(H).copy())
    gH = _poly_of_diag(funcs.g_coeffs, np.diag(H).copy())
    raise_op = fH + J3

    residuals = {
        REL_H_RAISING: _interior_max(H @ ad - ad @ raise_op),
        REL_H_LOWERING: _interior_max(a @ H - raise_op @ a),
        REL_J3_RAISING: _interior_max(J3 @ ad - ad @ gH),
        REL_J3_LOWERING: _interior_max(a @ J3 - gH @ a),
        REL_LADDER_COMM: _interior_max((a @ ad - ad @ a) - (fH - H + J3)),
        REL_HJ3_COMM: float(np.max(np.abs(H @ J3 - J3 @ H))),
        REL_CASIMIR_FORMS: _interior_max((a @ ad - fH - J3) - (ad @ a - H)),
    }
    return RelationReport(residuals, rep.dim, rep.dim - 1, tol)


@dataclass(frozen=True)
class Casimir1Report:
    """Constancy evidence for the first Casimir invariant."""

    forms_interior_diff: float
    commutator_residuals: dict[str, float]
    diag_expected: float
    diag_interior_max_dev: float
    tol: float
    constant_on_interior: bool = field(init=False)

    def __post_init__(self):
        ok = (self.forms_interior_diff <= self.tol
              and self.diag_interior_max_dev <= self.tol
              and all(v <= self.tol for v in self.commutator_residuals.values()))
        object.__setattr__(self, "constant_on_interior", ok)

    def to_dict(self) -> dict:
        return {
            "forms_interior_diff": self.forms_interior_diff,
            "commutator_residuals": dict(self.commutator_residuals),
            "diag_expected": self.diag_expected,
            "diag_interior_max_dev": self.diag_interior_max_dev,
            "tol": self.tol,
            "constant_on_interior": self.constant_on_interior,
        }


def casimir1(rep: TruncatedRep, funcs: CharacteristicFunctions,
             tol: float = 1e-9) -> tuple[np.ndarray, Casimir1Report]:
    """First Casimir C = a a+ - f(H) - J3, equal to a+ a - H.

    Returns the first form (whose final diagonal entry is corrupted by
    the cutoff) and a report: the interior difference of the two forms,
    the interior commutators with all four generators, and the deviation
    of the interior diagonal from the constant -alpha0.
    """
    H, J3, ad, a = rep.H, rep.J3, rep.a_dag, rep.a
    fH = _poly_of_diag(funcs.f_coeffs, np.diag(H).copy())
    c1 = a @ ad - fH - J3
    c1_alt = ad @ a - H
    alpha0 = float(rep.H[0, 0])

    d = rep.dim
    diag_dev = float(np.max(np.abs(np.diag(c1)[: d - 1] + alpha0))) if d > 1 else 0.0
    report = Casimir1Report(
        forms_interior_diff=_interior_max(c1 - c1_alt),
        commutator_residuals={
            "a_dag": _interior_max(c1 @ ad - ad @ c1),
            "a": _interior_max(c1 @ a - a @ c1),
            "H": _interior_max(c1 @ H - H @ c1),
            "J3": _interior_max(c1 @ J3 - J3 @ c1),
        },
        diag_expected=-alpha0,
        diag_interior_max_dev=diag_dev,
        tol=tol,
    )
    return c1, report
