"""Energy-level datasets for the linear case.

``levels`` iterates an admissible vacuum and annotates the gap behaviour
(evenly spaced, widening, shrinking, periodic) plus the limit value when
the spectrum is superiorly limited; ``gap_statistics`` summarizes any
level list.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .admissibility import INADMISSIBLE, admissible_numeric, decide
from .core import InadmissibleVacuumError, LinearParams, VacuumState
from .linear_dynamics import eigenvalues
from .rep_builder import iterate_eigenvalues

__all__ = [
    "LevelData",
    "GapStatistics",
    "FIGURE4_PRESETS",
    "levels",
    "gap_statistics",
]

# The five level-pattern morphologies, each with a canonical admissible
# vacuum: evenly spaced, widening, periodic (k = 3), dense quasi-periodic
# and shrinking toward a finite supremum.
FIGURE4_PRESETS = (
    ("evenly_spaced", LinearParams(2.0, -1.0), VacuumState(0.0, 1.0)),
    ("increasing", LinearParams(3.0, -2.0), VacuumState(1.0, 0.0)),
    ("periodic", LinearParams(2.0 * math.cos(2.0 * math.pi / 3.0), -1.0),
     VacuumState(-1.0, 0.0)),
    ("dense", LinearParams(2.0 * math.cos(2.0 * math.pi / math.sqrt(2.0)), -1.0),
     VacuumState(-1.0, math.cos(2.0 * math.pi / math.sqrt(2.0)))),
    ("decreasing", LinearParams(1.5, -0.5), VacuumState(0.0, 1.0)),
)

MONO_FLAT = "flat"
MONO_INCREASING = "increasing"
MONO_DECREASING = "decreasing"
MONO_MIXED = "mixed"


def _monotonicity(gaps, tol: float) -> str:
    if len(gaps) < 2:
        return MONO_FLAT
    scale = max(1.0, max(abs(g) for g in gaps))
    up = any(b - a > tol * scale for a, b in zip(gaps, gaps[1:]))
    down = any(a - b > tol * scale for a, b in zip(gaps, gaps[1:]))
    if up and down:
        return MONO_MIXED
    if up:
        return MONO_INCREASING
    if down:
        return MONO_DECREASING
    return MONO_FLAT


@dataclass(frozen=True)
class LevelData:
    alphas: tuple[float, ...]
    betas: tuple[float, ...]
    gaps: tuple[float, ...]
    gap_monotonicity: str
    limit: float | None
    admissibility_status: str

    def to_dict(self) -> dict:
        return {
            "alphas": list(self.alphas),
            "betas": list(self.betas),
            "gaps": list(self.gaps),
            "gap_monotonicity": self.gap_monotonicity,
            "limit": self.limit,
            "admissibility_status": self.admissibility_status,
        }


def _limit_value(params: LinearParams, vacuum: VacuumState,
                 tol: float = 1e-12) -> float | None:
    """Limit of the level sequence when the spectrum is superiorly limited:
    0 inside the stability triangle, the fixed-line value c_plus when
    lambda_plus = 1, nothing otherwise."""
    pair = eigenvalues(params)
    if pair.discriminant < 0.0:
        return 0.0 if abs(pair.lambda_plus) < 1.0 - tol else None
    p, q = pair.lambda_plus.real, pair.lambda_minus.real
    if max(abs(p), abs(q)) < 1.0 - tol:
        return 0.0
    if abs(p - 1.0) <= tol and abs(q) < 1.0 - tol:
        alpha1 = params.r * vacuum.alpha0 + vacuum.beta0
        return (alpha1 - q * vacuum.alpha0) / (p - q)
    return None


def levels(params: LinearParams, vacuum: VacuumState, n_levels: int,
           tol: float = 1e-9, n_max: int = 200,
           require_admissible: bool = True) -> LevelData:
    """Levels alpha[0..n_levels] with gaps and annotations.

    A vacuum the oracle rejects raises InadmissibleVacuumError carrying
    the violated analytic bound when one exists; an inconclusive oracle
    verdict is reported in the output rather than fatal.
    """
    if n_levels < 1:
        raise ValueError("n_levels must be >= 1")
    verdict = admissible_numeric(params, vacuum, n_max=max(n_max, n_levels + 16),
                                 tol=tol)
    if require_admissible and verdict.status == INADMISSIBLE:
        combined = decide(params, vacuum.alpha0, n_max=n_max, tol=tol)
        bound = combined.beta0_lower_bound
        detail = (f"; beta0 must be >= {bound}" if isinstance(bound, float)
                  else "")
        raise InadmissibleVacuumError(
            f"vacuum (alpha0={vacuum.alpha0}, beta0={vacuum.beta0}) is "
            f"inadmissible ({verdict.certificate}){detail}",
            first_violation=verdict.first_violation,
            bound=bound if isinstance(bound, float) else None,
        )
    seq = iterate_eigenvalues(params.functions(), vacuum, n_levels)
    gaps = tuple(b - a for a, b in zip(seq.alphas, seq.alphas[1:]))
    return LevelData(
        alphas=seq.alphas,
        betas=seq.betas,
        gaps=gaps,
        gap_monotonicity=_monotonicity(gaps, tol),
        limit=_limit_value(params, vacuum),
        admissibility_status=verdict.status,
    )


@dataclass(frozen=True)
class GapStatistics:
    min_gap: float
    max_gap: float
    monotonicity: str
    period_estimate: int | None

    def to_dict(self) -> dict:
        return {
            "min_gap": self.min_gap,
            "max_gap": self.max_gap,
            "monotonicity": self.monotonicity,
            "period_estimate": self.period_estimate,
        }


def gap_statistics(level_values, tol: float = 1e-9,
                   period_cap: int = 64) -> GapStatistics:
    """Summary of the gap sequence of a level list (needs >= 3 levels).

    The period estimate is the smallest shift k >= 2 under which the gap
    sequence repeats within tolerance; flat spectra report none.
    """
    vals = [float(v) for v in level_values]
    if len(vals) < 3:
        raise ValueError("need at least 3 levels")
    gaps = [b - a for a, b in zip(vals, vals[1:])]
    scale = max(1.0, max(abs(g) for g in gaps))
    mono = _monotonicity(gaps, tol)

    period = None
    if mono != MONO_FLAT:
        for k in range(2, min(period_cap, len(gaps) - 1) + 1):
            if len(gaps) < 2 * k:
                break
            if all(abs(gaps[i + k] - gaps[i]) <= tol * scale
                   for i in range(len(gaps) - k)):
                period = k
                break
    return GapStatistics(min(gaps), max(gaps), mono, period)
