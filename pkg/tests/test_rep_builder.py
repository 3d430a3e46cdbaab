import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fibalg.core import (
    CharacteristicFunctions,
    NonPhysicalSequenceError,
    TruncatedRep,
    TruncationError,
    VacuumState,
)
from fibalg import rep_builder as rb

from conftest import draw_physical_instance

FIB = CharacteristicFunctions.linear(1, 1)
FIB_VACUUM = VacuumState(1.0, 0.0)


def fib_sequence(levels=15):
    return rb.iterate_eigenvalues(FIB, FIB_VACUUM, levels)


def test_fibonacci_tracks():
    seq = fib_sequence(5)
    assert seq.alphas == (1, 1, 2, 3, 5, 8)
    assert seq.betas == (0, 1, 1, 2, 3, 5)
    assert seq.norms_sq == (0, 1, 2, 4, 7)


def test_fibonacci_symbolic_row_coefficients():
    # alpha[4] = 5*alpha0 + 3*beta0, beta[4] = 3*alpha0 + 2*beta0: probe the
    # coefficients with a vacuum that separates them in decimal digits.
    seq = rb.iterate_eigenvalues(FIB, VacuumState(100.0, 1.0), 4)
    assert seq.alphas[4] == 503.0
    assert seq.betas[4] == 302.0


def test_zero_fixed_point():
    funcs = CharacteristicFunctions([0.0], [0.0])
    seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 0), 6)
    assert set(seq.alphas) == {0.0}
    assert set(seq.norms_sq) == {0.0}


def test_evenly_spaced_hand_iteration():
    # f(x) = 2x, g(x) = -x from (0, 1): hand-iterated ladder
    funcs = CharacteristicFunctions.linear(2, -1)
    seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 1), 4)
    assert seq.alphas == (0, 1, 2, 3, 4)
    assert seq.norms_sq == (1, 2, 3, 4)


def test_iteration_overflow_names_first_bad_index():
    funcs = CharacteristicFunctions([0, 0, 2], [0, 1])  # f = 2x^2
    with pytest.raises(TruncationError) as err:
        rb.iterate_eigenvalues(funcs, VacuumState(10.0, 0.0), 400)
    assert err.value.index >= 1


def test_levels_must_be_positive():
    with pytest.raises(ValueError):
        rb.iterate_eigenvalues(FIB, FIB_VACUUM, 0)


@given(st.integers(2, 12))
def test_telescoping_identity_fibonacci(levels):
    seq = fib_sequence(levels)
    for n, n2 in enumerate(seq.norms_sq):
        assert n2 == seq.alphas[n + 1] - seq.alphas[0]


def test_telescoping_identity_random(rng):
    for _ in range(25):
        _, _, seq = draw_physical_instance(rng, levels=16)
        for n, n2 in enumerate(seq.norms_sq):
            scale = max(1.0, abs(n2))
            assert abs(n2 - (seq.alphas[n + 1] - seq.alphas[0])) <= 1e-12 * scale


class TestCheckPhysical:
    def test_fibonacci_physical(self):
        report = rb.check_physical(fib_sequence())
        assert report.physical
        assert report.first_zero_norm == 0  # N_0^2 = alpha_1 - alpha_0 = 0

    def test_trivial_zero_vacuum_physical(self):
        funcs = CharacteristicFunctions([0, 1, 1], [0, -1])
        seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 0), 8)
        assert rb.check_physical(seq).physical

    def test_negative_alpha0_violates(self):
        seq = rb.iterate_eigenvalues(FIB, VacuumState(-1.0, 0.0), 8)
        report = rb.check_physical(seq)
        assert not report.physical
        assert report.first_violation is not None


class TestBuildMatrices:
    def test_fibonacci_d3(self):
        seq = rb.iterate_eigenvalues(FIB, FIB_VACUUM, 2)
        rep = rb.build_matrices(seq)
        assert rep.dim == 3
        assert np.array_equal(np.diag(rep.H), [1, 1, 2])
        assert rep.a_dag[1, 0] == 0.0
        assert rep.a_dag[2, 1] == 1.0

    def test_zero_rep(self):
        funcs = CharacteristicFunctions([0.0], [0.0])
        seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 0), 1)
        rep = rb.build_matrices(seq)
        assert rep.dim == 2
        for mat in (rep.H, rep.J3, rep.a_dag, rep.a):
            assert np.all(mat == 0.0)

    def test_subdiagonal_roots(self):
        funcs = CharacteristicFunctions.linear(2, -1)
        seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 1), 4)
        rep = rb.build_matrices(seq)
        sub = rep.a_dag[np.arange(1, 5), np.arange(4)]
        assert np.allclose(sub, [1.0, math.sqrt(2), math.sqrt(3), 2.0],
                           rtol=0, atol=1e-15)

    def test_rejects_non_physical(self):
        seq = rb.iterate_eigenvalues(FIB, VacuumState(-1.0, 0.0), 8)
        with pytest.raises(NonPhysicalSequenceError):
            rb.build_matrices(seq)

    def test_a_transposes_a_dag(self):
        rep = rb.build_matrices(fib_sequence(10))
        assert np.array_equal(rep.a, rep.a_dag.T)

    def test_H_J3_commute_exactly(self):
        rep = rb.build_matrices(fib_sequence(10))
        assert np.array_equal(rep.H @ rep.J3, rep.J3 @ rep.H)


class TestVerifyRelations:
    def test_fibonacci_d16(self):
        seq = fib_sequence(15)
        rep = rb.build_matrices(seq)
        assert rep.dim == 16
        report = rb.verify_relations(rep, FIB, tol=1e-9)
        assert report.passed
        assert report.interior_dim == 15
        assert max(report.residuals.values()) <= 1e-9

    def test_zero_rep_residuals_zero(self):
        funcs = CharacteristicFunctions([0.0], [0.0])
        seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 0), 4)
        report = rb.verify_relations(rb.build_matrices(seq), funcs)
        assert max(report.residuals.values()) == 0.0

    def test_perturbed_subdiagonal_fails(self):
        seq = fib_sequence(9)
        rep = rb.build_matrices(seq)
        ad = np.array(rep.a_dag)
        ad[3, 2] += 1e-3
        bad = TruncatedRep(rep.dim, rep.H, rep.J3, ad, ad.T)
        report = rb.verify_relations(bad, FIB, tol=1e-9)
        assert not report.passed
        assert report.residuals[rb.REL_LADDER_COMM] >= 1e-4

    def test_needs_dim_3(self):
        seq = rb.iterate_eigenvalues(FIB, FIB_VACUUM, 1)
        rep = rb.build_matrices(seq)
        with pytest.raises(ValueError):
            rb.verify_relations(rep, FIB)

    def test_random_instances_property(self, rng):
        for _ in range(30):
            funcs, _, seq = draw_physical_instance(rng)
            rep = rb.build_matrices(seq)
            report = rb.verify_relations(rep, funcs, tol=1e-9)
            assert report.passed, (funcs, report.residuals)

    def test_ladder_products_match_closed_forms(self, rng):
        funcs, _, seq = draw_physical_instance(rng)
        rep = rb.build_matrices(seq)
        ada = np.diag(rep.a_dag @ rep.a)
        aad = np.diag(rep.a @ rep.a_dag)
        d = rep.dim
        assert abs(ada[0]) == 0.0
        assert np.allclose(ada[1:], seq.norms_sq[: d - 1], rtol=1e-12, atol=1e-12)
        assert np.allclose(aad[: d - 1], seq.norms_sq[: d - 1],
                           rtol=1e-12, atol=1e-12)


class TestCasimir1:
    def test_fibonacci_is_minus_alpha0(self):
        rep = rb.build_matrices(fib_sequence(11))
        c1, report = rb.casimir1(rep, FIB)
        assert report.constant_on_interior
        assert report.diag_expected == -1.0
        assert np.allclose(np.diag(c1)[:-1], -1.0, atol=1e-12)

    def test_zero_rep(self):
        funcs = CharacteristicFunctions([0.0], [0.0])
        seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 0), 4)
        _, report = rb.casimir1(rb.build_matrices(seq), funcs)
        assert report.constant_on_interior
        assert report.diag_expected == 0.0

    def test_evenly_spaced_zero_casimir(self):
        funcs = CharacteristicFunctions.linear(2, -1)
        seq = rb.iterate_eigenvalues(funcs, VacuumState(0, 1), 8)
        c1, report = rb.casimir1(rb.build_matrices(seq), funcs)
        assert report.constant_on_interior
        assert np.allclose(np.diag(c1)[:-1], 0.0, atol=1e-12)

    def test_commutators_vanish_on_interior(self, rng):
        funcs, _, seq = draw_physical_instance(rng)
        _, report = rb.casimir1(rb.build_matrices(seq), funcs)
        assert all(v <= 1e-9 for v in report.commutator_residuals.values())


def test_relation_report_serializes():
    rep = rb.build_matrices(fib_sequence(5))
    report = rb.verify_relations(rep, FIB)
    data = report.to_dict()
    assert set(data["residuals"]) == set(rb.RELATION_NAMES)
    assert data["passed"] is True
