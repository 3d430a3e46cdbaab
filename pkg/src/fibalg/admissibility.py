"""Vacuum admissibility for the linear case.

A vacuum (alpha0, beta0) is admissible when every level satisfies
alpha[n] >= alpha[0], i.e. the ground state stays lowest and all ladder
norms stay real.  Two independent routes decide this:

* ``classify_lambda_region`` + ``beta0_bound_analytic``: a closed-form
  lower bound on beta0 by region of the real (lambda_minus, lambda_plus)
  half-plane.  Bounds are only reported where a half-line
  characterization actually exists; regions whose admissible set
  degenerates to a ray or a bounded interval (the dominant eigenvalue is
  negative, or both roots contract with sign flips) report
  ``numerical-only`` and are decided by the oracle.

* ``admissible_numeric``: iterates the exact recurrence, then certifies
  the infinite tail from the mode decomposition
  alpha[n] = c_plus * p**n + c_minus * q**n (Vandermonde in the first
  two levels).  Marginal oscillatory cases that cannot be certified
  within the iteration budget come back inconclusive rather than guessed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .core import LinearParams, NoAdmissibleVacuumError, VacuumState
from .linear_dynamics import eigenvalues, map_matrix

__all__ = [
    "RegionLabel",
    "AnalyticBound",
    "NumericVerdict",
    "AdmissibilityVerdict",
    "ScanReport",
    "classify_lambda_region",
    "beta0_bound_analytic",
    "admissible_numeric",
    "decide",
    "scan_agreement",
    "region_map_rows",
]

# Region labels of the (lambda_minus, lambda_plus) half-plane.
REGION_I = "I"
REGION_II = "II"
REGION_III = "III"
REGION_IV = "IV"
REGION_V = "V"
REGION_VI = "VI"
REGION_VII = "VII"
B_I_II = "B_I_II"
B_I_IV = "B_I_IV"
B_II_III = "B_II_III"
B_IV_V = "B_IV_V"
B_V_VI = "B_V_VI"
B_III_V = "B_III_V"
B_III_VI = "B_III_VI"
B_VI_VII = "B_VI_VII"
UNDEFINED = "Undefined"

RegionLabel = str

REGION_LABELS = (
    REGION_I, REGION_II, REGION_III, REGION_IV, REGION_V, REGION_VI,
    REGION_VII, B_I_II, B_I_IV, B_II_III, B_IV_V, B_V_VI, B_III_V,
    B_III_VI, B_VI_VII, UNDEFINED,
)

NUMERICAL_ONLY = "numerical-only"

ADMISSIBLE = "admissible"
INADMISSIBLE = "inadmissible"
INCONCLUSIVE = "inconclusive"


def classify_lambda_region(lam_minus: float, lam_plus: float,
                           tol: float = 1e-10) -> RegionLabel:
    """Label of a real root pair in the half-plane lambda_plus >= lambda_minus.

    Shared boundaries are their own labels; a point within ``tol`` of a
    boundary line (and inside both neighbours' closures) takes the
    boundary label.  Root pairs matching no listed region (the corner
    points and the contracting part of the diagonal) come back Undefined.
    """
    x, y = float(lam_minus), float(lam_plus)
    if y < x - tol:
        raise ValueError("needs lambda_plus >= lambda_minus")

    # Boundary bands first, so near-boundary points resolve to the boundary.
    if abs(y - 1.0) <= tol and -1.0 + tol < x < 1.0 - tol:
        return B_I_II
    if y > 1.0 + tol and abs(x + 1.0) <= tol:
        return B_I_IV
    if y > 1.0 + tol and abs(x + y) <= tol:
        return B_IV_V
    if tol < y < 1.0 - tol and abs(x + y) <= tol:
        return B_II_III
    if tol < y < 1.0 - tol and abs(x + 1.0) <= tol:
        return B_III_V
    if -1.0 + tol < y < -tol and abs(x + 1.0) <= tol:
        return B_III_VI
    if abs(y) <= tol and x < -1.0 - tol:
        return B_V_VI
    if abs(y + 1.0) <= tol and x < -1.0 - tol:
        return B_VI_VII

    if y > 1.0 and -1.0 <= x <= y:
        return REGION_I
    if 0.0 < y < 1.0 and -y < x < y:
        return REGION_II
    if -1.0 < y < 1.0 and -1.0 < x < min(-y, y):
        return REGION_III
    if y > 1.0 and -y < x < -1.0:
        return REGION_IV
    if y > 0.0 and x < -1.0 and x < -y:
        return REGION_V
    if -1.0 < y < 0.0 and x < -1.0:
        return REGION_VI
    if y < -1.0 and x < y:
        return REGION_VII
    return UNDEFINED


@dataclass(frozen=True)
class AnalyticBound:
    """Either a tight lower bound for beta0 or a numerical-only marker."""

    kind: str  # "bound" | "numerical-only"
    value: float | None = None

    @property
    def is_bound(self) -> bool:
        return self.kind == "bound"


def _bound(value: float) -> AnalyticBound:
    return AnalyticBound("bound", float(value))


_NUMERIC = AnalyticBound(NUMERICAL_ONLY)


def beta0_bound_analytic(region: RegionLabel, lam_minus: float,
                         lam_plus: float, alpha0: float) -> AnalyticBound:
    """Closed-form admissibility bound for beta0, where one exists.

    Regions I (including its lambda_minus > 1 part, where the n = 1
    constraint overtakes the asymptotic one), II, IV and the boundaries
    with unmixed norm signs carry half-line bounds.  Regions whose
    dominant root is negative and expanding (V, VI, VII and their
    boundaries) admit at most a ray or a bounded interval of beta0, so
    they report numerical-only; likewise region III, whose level signs
    alternate.  Raises when no beta0 is admissible at all for the given
    alpha0 sign.
    """
    x, y = float(lam_minus), float(lam_plus)
    a0 = float(alpha0)

    if region in (REGION_I, B_I_IV):
        # sup_n of the per-level constraint: the asymptotic mode for
        # |lambda_minus| <= 1, the first level once lambda_minus > 1.
        if a0 >= 0.0:
            return _bound(max(1.0 - y - x, -y) * a0)
        return _bound(max(y, y + x - 1.0) * abs(a0))
    if region == B_I_II:
        return _bound(-x * a0)
    if region == REGION_II:
        if a0 > 0.0:
            raise NoAdmissibleVacuumError(
                "both roots contract, levels tend to 0 below alpha0 > 0")
        return _bound((y + x - 1.0) * abs(a0))
    if region == REGION_IV:
        if a0 >= 0.0:
            return _bound((1.0 - y - x) * a0)
        return _bound((y * y + x * x - y * abs(x) - 1.0) / (y - abs(x)) * abs(a0))
    if region == B_II_III:
        # lambda_minus = -lambda_plus: even levels are alpha0 * p**n,
        # odd levels beta0 * p**(n-1); both demands are one-sided.
        if a0 > 0.0:
            raise NoAdmissibleVacuumError(
                "even levels contract below a positive alpha0")
        return _bound(a0)
    if region == B_IV_V:
        # Same level splitting with p > 1.
        if a0 < 0.0:
            raise NoAdmissibleVacuumError(
                "even levels grow downward from a negative alpha0")
        return _bound(a0)
    if region == REGION_III and a0 > 0.0:
        raise NoAdmissibleVacuumError(
            "both roots contract, levels tend to 0 below alpha0 > 0")
    return _NUMERIC


@dataclass(frozen=True)
class NumericVerdict:
    """Oracle outcome; ``status`` is admissible, inadmissible or inconclusive."""

    status: str
    first_violation: int | None
    certificate: str
    n_checked: int

    @property
    def admissible(self) -> bool | None:
        if self.status == INCONCLUSIVE:
            return None
        return self.status == ADMISSIBLE

    def to_dict(self) -> dict:
        return {
            "status": self.status,
            "first_violation": self.first_violation,
            "certificate": self.certificate,
            "n_checked": self.n_checked,
        }


_OVERFLOW_LIMIT = 1e280


def _iterate_checking(r, s, a0, b0, floor, n_max):
    """Iterate the recurrence checking the floor; detects exact cycles.

    Returns (first_violation | None, n_checked, cycled).
    """
    alpha, beta = a0, b0
    for n in range(1, n_max + 1):
        alpha, beta = r * alpha + beta, s * alpha
        if not (math.isfinite(alpha) and math.isfinite(beta)):
            return None, n - 1, False
        if alpha < floor:
            return n, n, False
        if alpha == a0 and beta == b0:
            return None, n, True
        if abs(alpha) > _OVERFLOW_LIMIT or abs(beta) > _OVERFLOW_LIMIT:
            return None, n, False
    return None, n_max, False


def _growth_certificate(c_pos, c_neg_abs, p, q_abs, need, n_cap):
    """Smallest n with c_pos * p**n - c_neg_abs * q_abs**n >= need, or None.

    Once reached the margin persists for all later n because p >= q_abs
    and p >= 1.
    """
    if c_pos <= 0.0:
        return None
    t_pos, t_neg = c_pos, c_neg_abs
    for n in range(1, n_cap + 1):
        t_pos *= p
        t_neg *= q_abs
        if t_pos - t_neg >= need:
            return n
        if t_pos > 1e200:
            return None
    return None


def admissible_numeric(params: LinearParams, vacuum: VacuumState,
                       n_max: int = 200, tol: float = 1e-9,
                       probe_depth: int = 64) -> NumericVerdict:
    """Decide alpha[n] >= alpha0 for all n > 0 by iteration plus tail
    certificates.

    The first ``n_max`` levels are checked directly against
    alpha0 - ``tol``.  The infinite tail is then certified from the mode
    decomposition: contracting spectra by an envelope bound, a dominant
    growing mode by its coefficient sign (the Vandermonde solve in the
    first two levels), unit-modulus pairs by exact cycles, the map-power
    period probe or the oscillation amplitude.  Marginal cases that no
    certificate covers come back inconclusive.
    """
    if n_max < 16:
        raise ValueError("n_max must be >= 16")
    r, s = params.r, params.s
    a0, b0 = vacuum.alpha0, vacuum.beta0
    a1 = r * a0 + b0
    floor = a0 - tol
    scale = max(1.0, abs(a0), abs(b0), abs(a1))
    czero = 1e-12 * scale
    band = 1e-12

    violation, n_checked, cycled = _iterate_checking(r, s, a0, b0, floor, n_max)
    if violation is not None:
        return NumericVerdict(INADMISSIBLE, violation, "violation", n_checked)
    if cycled:
        return NumericVerdict(ADMISSIBLE, None, "exact-cycle", n_checked)

    pair = eigenvalues(params)

    if pair.discriminant < 0.0:
        return _complex_tail(params, pair, a0, a1, floor, tol, czero,
                             n_checked, n_max, probe_depth)

    p = pair.lambda_plus.real
    q = pair.lambda_minus.real

    if abs(p - q) <= band * max(1.0, abs(p)):
        return _degenerate_tail(p, a0, a1, floor, czero, n_checked, n_max)
    return _real_tail(p, q, a0, a1, floor, czero, band, n_checked, n_max)


def _mode_coefficients(p, q, a0, a1):
    c_pos = (a1 - q * a0) / (p - q)
    c_neg = (p * a0 - a1) / (p - q)
    return c_pos, c_neg


def _real_tail(p, q, a0, a1, floor, czero, band, n_checked, n_max):
    c_pos, c_neg = _mode_coefficients(p, q, a0, a1)
    mmax = max(abs(p), abs(q))

    if mmax < 1.0 - band:
        envelope = (abs(c_pos) + abs(c_neg)) * mmax ** (n_checked + 1)
        if -envelope >= floor:
            return NumericVerdict(ADMISSIBLE, None, "contracting-envelope", n_checked)
        if envelope < floor:
            return NumericVerdict(INADMISSIBLE, None, "limit-below-vacuum", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "contracting-near-floor", n_checked)

    if p >= abs(q) and p > 1.0 + band:
        if c_pos > czero:
            n0 = _growth_certificate(c_pos, abs(c_neg), p, abs(q),
                                     max(floor, 0.0), n_max)
            if n0 is not None and n0 <= n_checked:
                return NumericVerdict(ADMISSIBLE, None, "dominant-growth", n_checked)
            return NumericVerdict(INCONCLUSIVE, None,
                                  "growth-uncertified", n_checked)
        if c_pos < -czero:
            return NumericVerdict(INADMISSIBLE, None, "dominant-negative", n_checked)
        # Dominant mode cancelled; the subdominant root decides.
        if abs(q) < 1.0 - band:
            envelope = (czero + abs(c_neg)) * max(abs(q), 0.5) ** (n_checked + 1)
            if -envelope - czero >= floor:
                return NumericVerdict(ADMISSIBLE, None,
                                      "cancelled-dominant-contracting", n_checked)
            return NumericVerdict(INCONCLUSIVE, None, "cancelled-dominant", n_checked)
        if q < -1.0 - band and abs(c_neg) > czero:
            return NumericVerdict(INADMISSIBLE, None,
                                  "alternating-divergence", n_checked)
        if abs(q + 1.0) <= band:
            # Bounded oscillation of amplitude |c_neg|.
            if -abs(c_neg) - czero >= floor:
                return NumericVerdict(ADMISSIBLE, None,
                                      "cancelled-dominant-oscillation", n_checked)
            return NumericVerdict(INCONCLUSIVE, None,
                                  "marginal-oscillation-near-floor", n_checked)
        if abs(q - 1.0) <= band:
            # Constant limit c_neg.
            if c_neg - czero >= floor:
                return NumericVerdict(ADMISSIBLE, None,
                                      "cancelled-dominant-limit", n_checked)
            if c_neg + czero < floor:
                return NumericVerdict(INADMISSIBLE, None,
                                      "limit-below-vacuum", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "cancelled-dominant", n_checked)

    if abs(q) > max(abs(p), 1.0 + band):
        # q < -1 dominates with alternating sign.
        if abs(c_neg) > czero:
            return NumericVerdict(INADMISSIBLE, None,
                                  "alternating-divergence", n_checked)
        if abs(p) < 1.0 - band:
            envelope = abs(c_pos) * abs(p) ** (n_checked + 1)
            if -envelope - czero >= floor:
                return NumericVerdict(ADMISSIBLE, None,
                                      "cancelled-dominant-contracting", n_checked)
        if p > 1.0 + band:
            if c_pos > czero:
                return NumericVerdict(INCONCLUSIVE, None,
                                      "cancelled-dominant", n_checked)
            if c_pos < -czero:
                return NumericVerdict(INADMISSIBLE, None,
                                      "dominant-negative", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "cancelled-dominant", n_checked)

    if abs(p - 1.0) <= band and abs(q) < 1.0 - band:
        # Limit c_pos along a decaying transient.
        residue = abs(c_neg) * abs(q) ** (n_checked + 1)
        if c_pos - residue >= floor:
            return NumericVerdict(ADMISSIBLE, None, "marginal-limit", n_checked)
        if c_pos + residue < floor:
            return NumericVerdict(INADMISSIBLE, None, "limit-below-vacuum", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "marginal-limit-near-floor",
                              n_checked)

    if abs(q + 1.0) <= band and abs(p) < 1.0 - band:
        # Oscillation of amplitude |c_neg| around a decaying transient.
        residue = abs(c_pos) * abs(p) ** (n_checked + 1)
        if -abs(c_neg) - residue >= floor:
            return NumericVerdict(ADMISSIBLE, None, "marginal-oscillation", n_checked)
        return NumericVerdict(INCONCLUSIVE, None,
                              "marginal-oscillation-near-floor", n_checked)

    return NumericVerdict(INCONCLUSIVE, None, "marginal-uncertified", n_checked)


def _degenerate_tail(p, a0, a1, floor, czero, n_checked, n_max):
    # alpha[n] = (c1 + c2*n) * p**n
    if abs(p) <= czero:
        # Sequence is 0 from level 2 on; level 1 was already checked.
        return NumericVerdict(ADMISSIBLE if floor <= 0.0 else INADMISSIBLE,
                              None, "null-tail", n_checked)
    c1 = a0
    c2 = a1 / p - a0

    if abs(p) < 1.0 - 1e-12:
        n_turn = int(abs(p) / (1.0 - abs(p))) + 1
        n_ref = max(n_checked, n_turn)
        envelope = (abs(c1) + abs(c2) * (n_ref + 1)) * abs(p) ** (n_ref + 1)
        if n_ref <= n_checked and -envelope >= floor:
            return NumericVerdict(ADMISSIBLE, None, "contracting-envelope", n_checked)
        if n_ref <= n_checked and envelope < floor:
            return NumericVerdict(INADMISSIBLE, None, "limit-below-vacuum", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "contracting-near-floor", n_checked)

    if abs(p - 1.0) <= 1e-12:
        if c2 > czero:
            return NumericVerdict(ADMISSIBLE, None, "linear-growth", n_checked)
        if c2 < -czero:
            return NumericVerdict(INADMISSIBLE, None, "linear-decay", n_checked)
        margin = czero * (n_max + 1)
        if c1 - margin >= floor:
            return NumericVerdict(ADMISSIBLE, None, "constant-level", n_checked)
        if c1 + margin < floor:
            return NumericVerdict(INADMISSIBLE, None, "limit-below-vacuum", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "constant-near-floor", n_checked)

    if p > 1.0:
        if c2 > czero:
            need = max(floor, 0.0)
            for n in range(1, n_max + 1):
                if c1 + c2 * n >= need:
                    if n <= n_checked:
                        return NumericVerdict(ADMISSIBLE, None,
                                              "dominant-growth", n_checked)
                    break
            return NumericVerdict(INCONCLUSIVE, None, "growth-uncertified", n_checked)
        if c2 < -czero:
            return NumericVerdict(INADMISSIBLE, None, "dominant-negative", n_checked)
        if c1 > czero:
            n0 = _growth_certificate(c1, 0.0, p, 0.0, max(floor, 0.0), n_max)
            if n0 is not None and n0 <= n_checked:
                return NumericVerdict(ADMISSIBLE, None, "dominant-growth", n_checked)
            return NumericVerdict(INCONCLUSIVE, None, "growth-uncertified", n_checked)
        if c1 < -czero:
            return NumericVerdict(INADMISSIBLE, None, "dominant-negative", n_checked)
        return NumericVerdict(ADMISSIBLE if floor <= 0.0 else INADMISSIBLE,
                              None, "null-modes", n_checked)

    # p <= -1: alternating, possibly polynomially growing.
    if abs(c1) <= czero and abs(c2) <= czero:
        return NumericVerdict(ADMISSIBLE if floor <= 0.0 else INADMISSIBLE,
                              None, "null-modes", n_checked)
    if abs(p + 1.0) <= 1e-12 and abs(c2) <= czero:
        if -abs(c1) >= floor:
            return NumericVerdict(ADMISSIBLE, None, "marginal-oscillation", n_checked)
        return NumericVerdict(INCONCLUSIVE, None,
                              "marginal-oscillation-near-floor", n_checked)
    return NumericVerdict(INADMISSIBLE, None, "alternating-divergence", n_checked)


def _complex_tail(params, pair, a0, a1, floor, tol, czero, n_checked, n_max,
                  probe_depth):
    p = pair.lambda_plus
    q = pair.lambda_minus
    rho = abs(p)
    c = (a1 - q * a0) / (p - q)  # alpha[n] = 2 * Re(c * p**n)
    amp = 2.0 * abs(c)

    if rho < 1.0 - 1e-12:
        envelope = amp * rho ** (n_checked + 1)
        if -envelope >= floor:
            return NumericVerdict(ADMISSIBLE, None, "contracting-envelope", n_checked)
        if envelope < floor:
            return NumericVerdict(INADMISSIBLE, None, "limit-below-vacuum", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "contracting-near-floor", n_checked)

    if abs(rho - 1.0) <= 1e-12:
        m = map_matrix(params)
        power = m.copy()
        eye = np.eye(2)
        for k in range(2, probe_depth + 1):
            power = power @ m
            if float(np.max(np.abs(power - eye))) <= 1e-9:
                if n_checked >= k:
                    return NumericVerdict(ADMISSIBLE, None, "periodic-orbit",
                                          n_checked)
        if a0 <= -amp:
            return NumericVerdict(ADMISSIBLE, None, "amplitude-envelope", n_checked)
        return NumericVerdict(INCONCLUSIVE, None, "quasiperiodic-near-floor",
                              n_checked)

    # Growing spiral: it dips below any floor unless the mode vanishes.
    if abs(c) > czero:
        return NumericVerdict(INADMISSIBLE, None, "spiral-divergence", n_checked)
    return NumericVerdict(ADMISSIBLE if floor <= 0.0 else INADMISSIBLE,
                          None, "null-modes", n_checked)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Combined analytic + numeric answer for one (params, vacuum) query."""

    admissible: bool | None
    status: str
    region: RegionLabel | None
    beta0_lower_bound: float | str | None
    source: str  # "analytic" | "numeric" | "both"
    numeric: NumericVerdict | None = None

    def to_dict(self) -> dict:
        out = {
            "admissible": self.admissible,
            "status": self.status,
            "region": self.region,
            "beta0_lower_bound": self.beta0_lower_bound,
            "source": self.source,
        }
        if self.numeric is not None:
            out["numeric"] = self.numeric.to_dict()
        return out


def decide(params: LinearParams, alpha0: float, beta0: float | None = None,
           n_max: int = 200, tol: float = 1e-9) -> AdmissibilityVerdict:
    """CLI-facing decision: region + analytic bound where they exist, the
    oracle verdict when a beta0 is supplied, and the agreement of both
    routes when both speak."""
    pair = eigenvalues(params)
    region = None
    bound: AnalyticBound | None = None
    no_admissible = False
    if pair.discriminant >= 0.0:
        region = classify_lambda_region(pair.lambda_minus.real,
                                        pair.lambda_plus.real)
        try:
            bound = beta0_bound_analytic(region, pair.lambda_minus.real,
                                         pair.lambda_plus.real, alpha0)
        except NoAdmissibleVacuumError:
            no_admissible = True

    bound_repr: float | str | None
    if no_admissible:
        bound_repr = "none"
    elif bound is None:
        bound_repr = NUMERICAL_ONLY
    elif bound.is_bound:
        bound_repr = bound.value
    else:
        bound_repr = NUMERICAL_ONLY

    if beta0 is None:
        status = "bound" if isinstance(bound_repr, float) else bound_repr
        return AdmissibilityVerdict(None, status, region, bound_repr, "analytic")

    vacuum = VacuumState(alpha0, beta0)
    numeric = admissible_numeric(params, vacuum, n_max=n_max, tol=tol)
    if no_admissible:
        source = "both" if numeric.status == INADMISSIBLE else "numeric"
        return AdmissibilityVerdict(numeric.admissible, numeric.status,
                                    region, bound_repr, source, numeric)
    if bound is not None and bound.is_bound and numeric.status != INCONCLUSIVE:
        eps = 1e-9 * max(1.0, abs(bound.value))
        analytic_says = vacuum.beta0 >= bound.value - eps
        source = "both" if analytic_says == (numeric.status == ADMISSIBLE) else "numeric"
        return AdmissibilityVerdict(numeric.admissible, numeric.status,
                                    region, bound_repr, source, numeric)
    return AdmissibilityVerdict(numeric.admissible, numeric.status,
                                region, bound_repr, "numeric", numeric)


@dataclass(frozen=True)
class ScanReport:
    """Agreement statistics of the analytic bounds against the oracle."""

    total: int
    tested: int
    agreements: int
    inconclusive: int
    skipped_numerical_only: int
    skipped_no_bound: int
    disagreements: list = field(default_factory=list)

    @property
    def agreement_fraction(self) -> float:
        return 1.0 if self.tested == 0 else self.agreements / self.tested

    def to_dict(self) -> dict:
        return {
            "total": self.total,
            "tested": self.tested,
            "agreements": self.agreements,
            "inconclusive": self.inconclusive,
            "skipped_numerical_only": self.skipped_numerical_only,
            "skipped_no_bound": self.skipped_no_bound,
            "agreement_fraction": self.agreement_fraction,
            "disagreements": list(self.disagreements),
        }


def scan_agreement(lambda_points, alpha0_samples, n_max: int = 400,
                   eps_scale: float = 1e-6, tol: float = 1e-9) -> ScanReport:
    """Probe every analytic bound against the oracle at bound +/- epsilon.

    For each sampled (lambda_minus, lambda_plus, alpha0) with a half-line
    bound b, the oracle must accept beta0 = b + eps and reject
    beta0 = b - eps, eps = eps_scale * max(1, |b|).  Points the oracle
    cannot decide count as inconclusive; numerical-only and
    no-admissible-beta0 combinations are skipped and tallied.
    """
    total = tested = agreements = inconclusive = 0
    skipped_numeric = skipped_none = 0
    disagreements = []
    for lam_minus, lam_plus in lambda_points:
        region = classify_lambda_region(lam_minus, lam_plus)
        params = LinearParams(lam_minus + lam_plus, -lam_minus * lam_plus)
        for alpha0 in alpha0_samples:
            total += 1
            try:
                bound = beta0_bound_analytic(region, lam_minus, lam_plus, alpha0)
            except NoAdmissibleVacuumError:
                skipped_none += 1
                continue
            if not bound.is_bound:
                skipped_numeric += 1
                continue
            eps = eps_scale * max(1.0, abs(bound.value))
            above = admissible_numeric(params, VacuumState(alpha0, bound.value + eps),
                                       n_max=n_max, tol=tol)
            below = admissible_numeric(params, VacuumState(alpha0, bound.value - eps),
                                       n_max=n_max, tol=tol)
            if INCONCLUSIVE in (above.status, below.status):
                inconclusive += 1
                continue
            tested += 1
            if above.status == ADMISSIBLE and below.status == INADMISSIBLE:
                agreements += 1
            else:
                disagreements.append({
                    "lambda_minus": lam_minus,
                    "lambda_plus": lam_plus,
                    "alpha0": alpha0,
                    "region": region,
                    "bound": bound.value,
                    "above": above.status,
                    "above_certificate": above.certificate,
                    "below": below.status,
                    "below_certificate": below.certificate,
                })
    return ScanReport(total, tested, agreements, inconclusive,
                      skipped_numeric, skipped_none, disagreements)


def region_map_rows(lam_minus_values, lam_plus_values):
    """Rows (lambda_minus, lambda_plus, region, bound at alpha0 = +1,
    bound at alpha0 = -1) over the half-plane, for CSV export.

    Bounds render as a number, 'numerical-only', or 'none' when no beta0
    is admissible for that alpha0 sign.
    """
    rows = []
    for x in lam_minus_values:
        for y in lam_plus_values:
            if y < x:
                continue
            region = classify_lambda_region(float(x), float(y))
            cells = []
            for a0 in (1.0, -1.0):
                try:
                    b = beta0_bound_analytic(region, float(x), float(y), a0)
                except NoAdmissibleVacuumError:
                    cells.append("none")
                    continue
                cells.append(b.value if b.is_bound else NUMERICAL_ONLY)
            rows.append((float(x), float(y), region, cells[0], cells[1]))
    return rows
