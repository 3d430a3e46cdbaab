"""Dynamics of the linear case f(x) = r*x, g(x) = s*x.

The level recursion is the 2-D linear map (alpha, beta) -> M (alpha, beta)
with M = [[r, 1], [s, 0]], so everything reduces to the roots of
lambda^2 - r*lambda - s = 0.  The asymptotically stable parameter region
is the open triangle with vertices A = (0, 1), B = (-2, -1), C = (2, -1);
its edges carry the marginal cases and the line r + s = 1 carries a line
of fixed points (alpha*, s*alpha*).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .core import EigenPair, LinearParams, TruncationError, VacuumState

__all__ = [
    "StabilityClass",
    "SpectrumType",
    "FixedPoints",
    "eigenvalues",
    "fixed_points",
    "classify_stability",
    "triangle_region",
    "classify_spectrum",
    "iterate_map",
    "map_matrix",
    "region_map_rows",
]

# Stability kinds
ASYMPTOTICALLY_STABLE = "AsymptoticallyStable"
UNSTABLE = "Unstable"
MARGINALLY_STABLE_ORIGIN = "MarginallyStableOrigin"
PERIOD_TWO_EDGE = "PeriodTwoEdge"
FIXED_LINE_MARGINAL = "FixedLineMarginal"
FIXED_LINE_UNSTABLE = "FixedLineUnstable"

# Spectrum kinds
EVENLY_SPACED = "EvenlySpaced"
INCREASING_SPACING = "IncreasingSpacing"
DECREASING_SPACING = "DecreasingSpacing"
PERIODIC = "Periodic"
DENSE_QUASIPERIODIC = "DenseQuasiperiodic"
CONSTANT = "Constant"
UNCLASSIFIED = "Unclassified"

# Triangle tags
INSIDE = "inside"
EDGE_AB = "edgeAB"
EDGE_BC = "edgeBC"
EDGE_AC = "edgeAC"
VERTEX_A = "vertexA"
VERTEX_B = "vertexB"
VERTEX_C = "vertexC"
OUTSIDE = "outside"


def map_matrix(params: LinearParams) -> np.ndarray:
    return np.array([[params.r, 1.0], [params.s, 0.0]])


def eigenvalues(params: LinearParams) -> EigenPair:
    """Roots (r +/- sqrt(r^2 + 4s)) / 2.

    Real roots are ordered lambda_plus >= lambda_minus; a complex pair is
    returned as conjugates with lambda_plus the positive-imaginary root.
    """
    r, s = params.r, params.s
    disc = r * r + 4.0 * s
    if disc >= 0.0:
        root = math.sqrt(disc)
        return EigenPair((r + root) / 2.0, (r - root) / 2.0, disc)
    root = cmath.sqrt(disc)  # positive imaginary part
    return EigenPair((r + root) / 2.0, (r - root) / 2.0, disc)


@dataclass(frozen=True)
class FixedPoints:
    """Fixed points of the 2-D map: the origin always, plus the whole line
    (alpha*, s*alpha*) exactly when r + s = 1."""

    origin: bool
    line: bool
    line_slope: float | None = None

    def describe(self) -> str:
        return "origin+line" if self.line else "origin"


def fixed_points(params: LinearParams, tol: float = 1e-10) -> FixedPoints:
    on_line = abs(params.r + params.s - 1.0) <= tol
    return FixedPoints(True, on_line, params.s if on_line else None)


@dataclass(frozen=True)
class StabilityClass:
    kind: str
    eigenpair: EigenPair
    fixed_points: FixedPoints

    def to_dict(self) -> dict:
        return {"kind": self.kind, "fixed_points": self.fixed_points.describe()}


def classify_stability(params: LinearParams, tol: float = 1e-10) -> StabilityClass:
    """Stability of the fixed points, with tolerance bands on the defining
    equalities so that near-edge parameters classify as the edge.

    On r + s = 1: marginal for r in [0, 2] (transverse eigenvalue r - 1),
    unstable outside.  Off that line: stable inside the triangle, edge BC
    (s = -1, |r| < 2) is a marginal unit-modulus complex pair, edge AB
    (s = 1 + r, r in [-2, 0]) has lambda_minus = -1 and trajectories
    approach a two-cycle, and everything else is decided by the moduli.
    """
    r, s = params.r, params.s
    pair = eigenvalues(params)
    fps = fixed_points(params, tol)

    if fps.line:  # r + s = 1
        kind = FIXED_LINE_MARGINAL if -tol <= r <= 2.0 + tol else FIXED_LINE_UNSTABLE
        return StabilityClass(kind, pair, fps)
    if abs(s + 1.0) <= tol and abs(r) < 2.0 - tol:
        return StabilityClass(MARGINALLY_STABLE_ORIGIN, pair, fps)
    if abs(s - (1.0 + r)) <= tol and -2.0 - tol <= r <= tol:
        return StabilityClass(PERIOD_TWO_EDGE, pair, fps)
    if max(pair.moduli) < 1.0:
        return StabilityClass(ASYMPTOTICALLY_STABLE, pair, fps)
    return StabilityClass(UNSTABLE, pair, fps)


def triangle_region(params: LinearParams, tol: float = 1e-10) -> str:
    """Position of (r, s) relative to the stability triangle ABC.

    Vertices classify as themselves; points within ``tol`` of an edge
    segment classify as that edge.
    """
    r, s = params.r, params.s
    for tag, (vr, vs) in ((VERTEX_A, (0.0, 1.0)), (VERTEX_B, (-2.0, -1.0)),
                          (VERTEX_C, (2.0, -1.0))):
        if abs(r - vr) <= tol and abs(s - vs) <= tol:
            return tag
    if abs(s - (1.0 + r)) <= tol and -2.0 < r < 0.0:
        return EDGE_AB
    if abs(s + 1.0) <= tol and -2.0 < r < 2.0:
        return EDGE_BC
    if abs(r + s - 1.0) <= tol and 0.0 < r < 2.0:
        return EDGE_AC
    # Jury conditions for both moduli below one.
    if (1.0 - r - s > tol) and (1.0 + r - s > tol) and (s + 1.0 > tol):
        return INSIDE
    return OUTSIDE


@dataclass(frozen=True)
class SpectrumType:
    kind: str
    period: int | None = None

    def __post_init__(self):
        if self.kind == PERIODIC and (self.period is None or self.period < 2):
            raise ValueError("periodic spectra carry a period >= 2")

    def to_dict(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.period is not None:
            out["period"] = self.period
        return out


def _smallest_period(params: LinearParams, probe_depth: int,
                     periodic_tol: float) -> int | None:
    m = map_matrix(params)
    eye = np.eye(2)
    power = m.copy()
    for k in range(2, probe_depth + 1):
        power = power @ m
        if float(np.max(np.abs(power - eye))) <= periodic_tol:
            return k
    return None


def classify_spectrum(params: LinearParams, vacuum: VacuumState | None = None,
                      probe_depth: int = 64, tol: float = 1e-9,
                      periodic_tol: float = 1e-9) -> SpectrumType:
    """Morphology of the level sequence generated by (r, s).

    Double root at 1 gives evenly spaced levels; a real dominant root
    above 1 gives growing gaps; spectra with both moduli at most 1 (the
    triangle interior together with the marginal edge AC) have shrinking
    gaps; a unit-modulus complex pair is periodic when some power of the
    map is the identity within ``periodic_tol`` and otherwise fills its
    envelope densely.  The eigenpair (1, -1) cycles with period two.
    When a vacuum is supplied and is itself a fixed point the spectrum is
    constant.  Detection of periods is capped at ``probe_depth``.
    """
    if probe_depth < 8:
        raise ValueError("probe_depth must be >= 8")
    r, s = params.r, params.s
    if vacuum is not None:
        scale = max(1.0, abs(vacuum.alpha0), abs(vacuum.beta0))
        if (abs(r * vacuum.alpha0 + vacuum.beta0 - vacuum.alpha0) <= tol * scale
                and abs(s * vacuum.alpha0 - vacuum.beta0) <= tol * scale):
            return SpectrumType(CONSTANT)

    disc = r * r + 4.0 * s
    if abs(disc) <= tol:
        lam = r / 2.0
        if abs(lam - 1.0) <= tol:
            return SpectrumType(EVENLY_SPACED)
        if lam > 1.0 + tol:
            return SpectrumType(INCREASING_SPACING)
        if abs(lam) < 1.0 - tol:
            return SpectrumType(DECREASING_SPACING)
        return SpectrumType(UNCLASSIFIED)
    if disc < 0.0:
        rho = math.sqrt(-s)
        if abs(rho - 1.0) <= tol:
            k = _smallest_period(params, probe_depth, periodic_tol)
            if k is not None:
                return SpectrumType(PERIODIC, period=k)
            return SpectrumType(DENSE_QUASIPERIODIC)
        if rho < 1.0 - tol:
            return SpectrumType(DECREASING_SPACING)
        return SpectrumType(UNCLASSIFIED)

    pair = eigenvalues(params)
    lp, lm = pair.lambda_plus.real, pair.lambda_minus.real
    if abs(lp - 1.0) <= tol and abs(lm - 1.0) <= tol:
        return SpectrumType(EVENLY_SPACED)
    if lp > 1.0 + tol:
        return SpectrumType(INCREASING_SPACING)
    if abs(lp - 1.0) <= tol and abs(lm + 1.0) <= tol:
        return SpectrumType(PERIODIC, period=2)
    if lp <= 1.0 + tol and lm >= -1.0 + tol:
        return SpectrumType(DECREASING_SPACING)
    return SpectrumType(UNCLASSIFIED)


def iterate_map(params: LinearParams, point: tuple[float, float],
                steps: int) -> np.ndarray:
    """Trajectory of the 2-D map from ``point``; shape (steps + 1, 2)."""
    if steps < 0:
        raise ValueError("steps must be >= 0")
    out = np.empty((steps + 1, 2))
    alpha, beta = float(point[0]), float(point[1])
    out[0] = (alpha, beta)
    for n in range(1, steps + 1):
        alpha, beta = params.r * alpha + beta, params.s * alpha
        if not (math.isfinite(alpha) and math.isfinite(beta)):
            raise TruncationError(
                f"trajectory left the finite range at step {n}", index=n)
        out[n] = (alpha, beta)
    return out


def region_map_rows(r_values, s_values, tol: float = 1e-10,
                    probe_depth: int = 64):
    """Rows (r, s, stability, spectrum, |lambda+|, |lambda-|) for a grid
    scan of the parameter plane, suitable for CSV export."""
    rows = []
    for r in r_values:
        for s in s_values:
            params = LinearParams(float(r), float(s))
            pair = eigenvalues(params)
            stab = classify_stability(params, tol)
            spec = classify_spectrum(params, probe_depth=probe_depth)
            kind = spec.kind if spec.period is None else f"{spec.kind}({spec.period})"
            rows.append((params.r, params.s, stab.kind, kind,
                         abs(pair.lambda_plus), abs(pair.lambda_minus)))
    return rows
