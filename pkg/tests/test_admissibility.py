import math

import numpy as np
import pytest

from fibalg.core import LinearParams, NoAdmissibleVacuumError, VacuumState
from fibalg import admissibility as adm
from fibalg import pq_numbers as pq

GOLDEN = (1 + math.sqrt(5)) / 2
PSI = (1 - math.sqrt(5)) / 2


def params_from_roots(lam_minus, lam_plus):
    return LinearParams(lam_minus + lam_plus, -lam_minus * lam_plus)


class TestRegionClassification:
    @pytest.mark.parametrize("lm,lp,label", [
        (PSI, GOLDEN, adm.REGION_I),
        (2.0, 3.0, adm.REGION_I),          # lambda_minus > 1 part
        (0.0, 0.5, adm.REGION_II),
        (-0.5, 0.2, adm.REGION_III),
        (-0.6, -0.2, adm.REGION_III),
        (-1.5, 2.0, adm.REGION_IV),
        (-2.5, 0.4, adm.REGION_V),
        (-2.5, 1.8, adm.REGION_V),
        (-1.5, -0.5, adm.REGION_VI),
        (-2.0, -1.5, adm.REGION_VII),
        (0.0, 1.0, adm.B_I_II),
        (-1.0, 2.0, adm.B_I_IV),
        (-0.5, 0.5, adm.B_II_III),
        (-2.0, 2.0, adm.B_IV_V),
        (-1.5, 0.0, adm.B_V_VI),
        (-1.0, 0.5, adm.B_III_V),
        (-1.0, -0.5, adm.B_III_VI),
        (-1.8, -1.0, adm.B_VI_VII),
        (0.4, 0.4, adm.UNDEFINED),         # contracting diagonal
        (-1.0, 1.0, adm.UNDEFINED),        # corner point
    ])
    def test_labels(self, lm, lp, label):
        assert adm.classify_lambda_region(lm, lp) == label

    def test_order_validated(self):
        with pytest.raises(ValueError):
            adm.classify_lambda_region(2.0, 1.0)

    def test_partition_single_stable_label(self, rng):
        # every pair gets exactly one label, stable under small perturbation
        tol = 1e-10
        for _ in range(300):
            lm = float(rng.uniform(-3, 3))
            lp = float(rng.uniform(lm, 3))
            label = adm.classify_lambda_region(lm, lp, tol)
            assert label in adm.REGION_LABELS
            # skip points hugging a boundary band
            near = min(abs(lp - 1), abs(lp), abs(lp + 1), abs(lm + 1),
                       abs(lm + lp), abs(lm - lp))
            if near < 10 * tol:
                continue
            for _ in range(3):
                dlm = float(rng.uniform(-tol / 10, tol / 10))
                dlp = float(rng.uniform(-tol / 10, tol / 10))
                assert adm.classify_lambda_region(lm + dlm, lp + dlp, tol) == label


class TestAnalyticBounds:
    def test_fibonacci_alpha0_positive(self):
        b = adm.beta0_bound_analytic(adm.REGION_I, PSI, GOLDEN, 1.0)
        assert b.is_bound and abs(b.value) <= 1e-12  # 1 - r = 0

    def test_fibonacci_alpha0_negative(self):
        b = adm.beta0_bound_analytic(adm.REGION_I, PSI, GOLDEN, -1.0)
        assert b.is_bound and abs(b.value - GOLDEN) <= 1e-12

    def test_region_I_beyond_unit_lambda_minus(self):
        # (p, q) = (3, 2): the first-level constraint binds, not the tail
        b = adm.beta0_bound_analytic(adm.REGION_I, 2.0, 3.0, -1.0)
        assert b.value == 4.0  # r - 1 = p + q - 1
        b2 = adm.beta0_bound_analytic(adm.REGION_I, 2.0, 3.0, 1.0)
        assert b2.value == -3.0  # -p

    def test_region_II_needs_nonpositive_alpha0(self):
        with pytest.raises(NoAdmissibleVacuumError):
            adm.beta0_bound_analytic(adm.REGION_II, 0.0, 0.5, 1.0)
        b = adm.beta0_bound_analytic(adm.REGION_II, 0.0, 0.5, -2.0)
        assert b.value == (0.5 - 1.0) * 2.0

    def test_region_III_numerical_only(self):
        b = adm.beta0_bound_analytic(adm.REGION_III, -0.5, 0.2, 0.0)
        assert not b.is_bound
        with pytest.raises(NoAdmissibleVacuumError):
            adm.beta0_bound_analytic(adm.REGION_III, -0.5, 0.2, 1.0)

    def test_region_V_numerical_only(self):
        assert not adm.beta0_bound_analytic(adm.REGION_V, -2.5, 0.4, 1.0).is_bound

    def test_regions_VI_VII_numerical_only(self):
        assert not adm.beta0_bound_analytic(adm.REGION_VI, -1.5, -0.5, -1.0).is_bound
        assert not adm.beta0_bound_analytic(adm.REGION_VII, -2.0, -1.5, -1.0).is_bound

    def test_boundary_bounds(self):
        assert adm.beta0_bound_analytic(adm.B_I_II, -0.5, 1.0, 2.0).value == 1.0
        assert adm.beta0_bound_analytic(adm.B_I_IV, -1.0, 2.0, -1.0).value == 2.0
        assert adm.beta0_bound_analytic(adm.B_II_III, -0.5, 0.5, -1.0).value == -1.0
        assert adm.beta0_bound_analytic(adm.B_IV_V, -2.0, 2.0, 1.0).value == 1.0
        with pytest.raises(NoAdmissibleVacuumError):
            adm.beta0_bound_analytic(adm.B_IV_V, -2.0, 2.0, -1.0)
        with pytest.raises(NoAdmissibleVacuumError):
            adm.beta0_bound_analytic(adm.B_II_III, -0.5, 0.5, 0.5)


class TestOracle:
    def test_fibonacci_vacuum_admissible(self):
        v = adm.admissible_numeric(LinearParams(1, 1), VacuumState(1, 0))
        assert v.status == adm.ADMISSIBLE

    def test_zero_vacuum_always_admissible(self, rng):
        for _ in range(25):
            params = LinearParams(float(rng.uniform(-3, 3)),
                                  float(rng.uniform(-3, 3)))
            v = adm.admissible_numeric(params, VacuumState(0, 0))
            assert v.status == adm.ADMISSIBLE

    def test_fibonacci_negative_alpha0_needs_golden_beta0(self):
        params = LinearParams(1, 1)
        bad = adm.admissible_numeric(params, VacuumState(-1, 1))
        assert bad.status == adm.INADMISSIBLE
        assert bad.first_violation is not None
        good = adm.admissible_numeric(params, VacuumState(-1, GOLDEN + 1e-9))
        assert good.status == adm.ADMISSIBLE

    def test_periodic_orbit_admissible(self):
        params = LinearParams(-1, -1)
        v = adm.admissible_numeric(params, VacuumState(-1.0, 0.0))
        assert v.status == adm.ADMISSIBLE
        assert v.certificate in ("exact-cycle", "periodic-orbit")

    def test_quasiperiodic_dense_case(self):
        r = 2 * math.cos(2 * math.pi / math.sqrt(2.0))
        params = LinearParams(r, -1.0)
        # oscillation amplitude exceeds |alpha0|: the orbit dips below
        v = adm.admissible_numeric(params, VacuumState(-1.0, 5.0), n_max=400)
        assert v.status == adm.INADMISSIBLE
        # beta0 = -Re(p) * alpha0 centres the mode: amplitude equals |alpha0|
        # and the orbit never crosses below, so the oracle must not reject
        v2 = adm.admissible_numeric(params, VacuumState(-1.0, r / 2), n_max=400)
        assert v2.status in (adm.ADMISSIBLE, adm.INCONCLUSIVE)

    def test_contracting_positive_alpha0_inadmissible(self):
        v = adm.admissible_numeric(LinearParams(0.5, 0.1), VacuumState(0.5, 5.0))
        assert v.status == adm.INADMISSIBLE

    def test_growing_spiral_inadmissible(self):
        v = adm.admissible_numeric(LinearParams(1.0, -2.0), VacuumState(1.0, 5.0))
        assert v.status == adm.INADMISSIBLE

    def test_boundary_ii_exact_bound_oscillation(self):
        # q = -1 with the dominant mode cancelled leaves a bounded
        # two-cycle at exactly alpha0: admissible, not divergent.
        p, a0 = 2.0, -1.0
        params = params_from_roots(-1.0, p)
        v = adm.admissible_numeric(params, VacuumState(a0, p * abs(a0)))
        assert v.status == adm.ADMISSIBLE

    def test_region_VI_cancellation_ray(self):
        p, q = -0.5, -2.0
        params = params_from_roots(q, p)
        a0 = -1.0
        on_ray = adm.admissible_numeric(params, VacuumState(a0, -q * a0), n_max=400)
        assert on_ray.status == adm.ADMISSIBLE
        off_ray = adm.admissible_numeric(params, VacuumState(a0, -q * a0 + 1e-6),
                                         n_max=400)
        assert off_ray.status == adm.INADMISSIBLE

    def test_monotone_in_beta0_region_I(self, rng):
        # If (alpha0, beta0) is admissible, so is every larger beta0.
        for _ in range(15):
            lp = float(rng.uniform(1.1, 3.0))
            lm = float(rng.uniform(-1.0, min(1.0, lp - 0.1)))
            params = params_from_roots(lm, lp)
            a0 = float(rng.uniform(-1.5, 1.5))
            bound = adm.beta0_bound_analytic(adm.REGION_I, lm, lp, a0)
            base = bound.value + 1e-6
            for extra in (0.1, 1.0, 10.0):
                v = adm.admissible_numeric(params, VacuumState(a0, base + extra),
                                           n_max=600)
                assert v.status == adm.ADMISSIBLE

    def test_nmax_validated(self):
        with pytest.raises(ValueError):
            adm.admissible_numeric(LinearParams(1, 1), VacuumState(1, 0), n_max=4)

    def test_certificates_sound_against_long_iteration(self, rng):
        # Tight budget (n_max=64) forces the tail certificates to do the
        # work; a much longer brute-force iteration must agree with them.
        for _ in range(120):
            params = LinearParams(float(rng.uniform(-2.5, 2.5)),
                                  float(rng.uniform(-2.5, 2.5)))
            vac = VacuumState(float(rng.uniform(-2, 2)), float(rng.uniform(-2, 2)))
            v = adm.admissible_numeric(params, vac, n_max=64)
            alpha, beta = vac.alpha0, vac.beta0
            slack = 1e-6 * max(1.0, abs(vac.alpha0))
            if v.status == adm.ADMISSIBLE:
                for n in range(1, 4000):
                    alpha, beta = params.r * alpha + beta, params.s * alpha
                    if not math.isfinite(alpha) or abs(alpha) > 1e250:
                        break
                    assert alpha >= vac.alpha0 - 1e-9 - slack, (params, vac, n, v)
            elif v.status == adm.INADMISSIBLE and v.first_violation is None:
                found = False
                for n in range(1, 20000):
                    alpha, beta = params.r * alpha + beta, params.s * alpha
                    if not math.isfinite(alpha) or alpha < vac.alpha0 - 1e-9:
                        found = True
                        break
                    if abs(alpha) > 1e200:
                        break
                assert found, (params, vac, v)


class TestScanAgreement:
    def test_region_I_small_grid(self):
        pts = [(lm, lp) for lp in np.linspace(1.2, 2.8, 6)
               for lm in np.linspace(-0.9, lp - 0.1, 6)]
        rep = adm.scan_agreement(pts, [1.0, -1.0], n_max=800)
        assert rep.tested > 0
        assert rep.agreement_fraction == 1.0
        assert not rep.disagreements

    def test_region_V_skipped(self):
        rep = adm.scan_agreement([(-2.5, 0.4)], [1.0, -1.0])
        assert rep.tested == 0
        assert rep.skipped_numerical_only == 2

    def test_no_bound_combinations_skipped(self):
        rep = adm.scan_agreement([(0.0, 0.5)], [1.0])  # region II, alpha0 > 0
        assert rep.skipped_no_bound == 1


class TestFibonacciBoundCoefficient:
    def test_range_of_bound_coefficients(self):
        # (1 - [n+1]) / [n] decreases from 0 toward -golden
        vals = []
        for n in range(1, 101):
            gn = pq.gauss_number(n, pq.PQBasis(GOLDEN, PSI))
            gn1 = pq.gauss_number(n + 1, pq.PQBasis(GOLDEN, PSI))
            vals.append((1 - gn1) / gn)
        assert max(vals) == 0.0
        assert abs(min(vals) + GOLDEN) <= 1e-6
        assert all(-GOLDEN - 1e-9 <= v <= 0.0 for v in vals)


class TestDecide:
    def test_bound_only_query(self):
        out = adm.decide(LinearParams(1, 1), -1.0)
        assert out.region == adm.REGION_I
        assert abs(out.beta0_lower_bound - GOLDEN) <= 1e-12
        assert out.source == "analytic"

    def test_full_verdict_agrees(self):
        out = adm.decide(LinearParams(1, 1), 1.0, 0.0)
        assert out.admissible is True
        assert out.source == "both"

    def test_complex_pair_goes_numeric(self):
        out = adm.decide(LinearParams(1, -1), -3.0, 0.0)
        assert out.region is None
        assert out.source == "numeric"

    def test_region_map_rows(self):
        rows = adm.region_map_rows(np.linspace(-2, 2, 5), np.linspace(-2, 2, 5))
        assert all(len(r) == 5 for r in rows)
        labels = {r[2] for r in rows}
        assert labels <= set(adm.REGION_LABELS)
