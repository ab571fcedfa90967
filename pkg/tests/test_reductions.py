"""Reduction construction tests: gadgets, splitting, amplification, recovery."""
import math

import numpy as np
import pytest

from dynls.baselines import RecursiveLsq
from dynls.errors import EigenvalueOutOfRange, InvalidParameter
from dynls.linalg import orthonormal_complement
from dynls.reductions import (
    AdversarialProjection,
    ExactProjection,
    LsrGadget,
    amplify_projection,
    boolean_omv_gadget,
    default_amplify_depth,
    exact_mv_oracle,
    incremental_omv_recover,
    make_noisy_mv_oracle,
    omv_via_projection,
    real_gadget_matrix,
    split_oracles,
    split_spectrum,
    verify_amplification,
)


def random_orthonormal(d, d1, seed):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.normal(size=(d, d1)))
    return q


class TestProjectionOracles:
    def test_exact_projection(self):
        u = random_orthonormal(6, 2, 0)
        oracle = ExactProjection(u)
        z = np.random.default_rng(1).normal(size=6)
        assert np.allclose(oracle(z), u @ (u.T @ z))

    def test_adversarial_contract_saturates(self):
        u = random_orthonormal(8, 3, 2)
        alpha, beta = 1.0 / 3.0, 1e-2
        oracle = AdversarialProjection(u, alpha, beta, seed=5)
        rng = np.random.default_rng(3)
        for _ in range(50):
            z = rng.normal(size=8) * rng.uniform(0.1, 4.0)
            y = oracle(z)
            z_u = u @ (u.T @ z)
            err = np.linalg.norm(y - z_u)
            assert err <= alpha * np.linalg.norm(z_u) + beta * np.linalg.norm(z) + 1e-12


class TestBooleanOmvGadget:
    def test_embedding_spectrum(self):
        rng = np.random.default_rng(4)
        b = rng.integers(0, 2, size=(12, 12))
        h = real_gadget_matrix(b.astype(float))
        w = np.linalg.eigvalsh(h)
        assert w[0] >= 1.0 - 1e-12 and w[-1] <= 3.0 + 1e-12

    def test_identity_matrix_basis_query(self):
        d = 8
        z = np.zeros(d, dtype=int)
        z[0] = 1
        out = boolean_omv_gadget(np.eye(d, dtype=int), z, exact_mv_oracle)
        assert np.array_equal(out, z)

    def test_all_ones_saturates(self):
        d = 6
        out = boolean_omv_gadget(np.ones((d, d), dtype=int), np.ones(d, dtype=int),
                                 exact_mv_oracle)
        assert np.array_equal(out, np.ones(d, dtype=int))

    def test_noisy_oracle_exact_recovery(self):
        # Oracle: direct Boolean product; the real oracle answers with an
        # injected 0.5/d^2 error.
        d = 32
        rng = np.random.default_rng(6)
        for trial in range(100):
            b = rng.integers(0, 2, size=(d, d))
            z = rng.integers(0, 2, size=d)
            if not z.any():
                z[0] = 1
            oracle = make_noisy_mv_oracle(0.5 / d**2, seed=trial)
            got = boolean_omv_gadget(b, z, oracle)
            want = ((b @ z) > 0).astype(int)
            assert np.array_equal(got, want)

    def test_zero_query_rejected(self):
        with pytest.raises(InvalidParameter):
            boolean_omv_gadget(np.eye(3, dtype=int), np.zeros(3, dtype=int),
                               exact_mv_oracle)


class TestSplitSpectrum:
    def test_half_identity_single_bit(self):
        split = split_spectrum(0.5 * np.eye(5))
        assert len(split.bit_sets[0]) == 5
        for s in split.bit_sets[1:]:
            assert len(s) == 0

    def test_three_quarters_two_bits(self):
        split = split_spectrum(0.75 * np.eye(4))
        assert len(split.bit_sets[0]) == 4
        assert len(split.bit_sets[1]) == 4
        for s in split.bit_sets[2:]:
            assert len(s) == 0

    def test_unit_eigenvalues_supported(self):
        split = split_spectrum(np.eye(3))
        # 1.0 expands as 0.111... so every bit set is full
        for s in split.bit_sets:
            assert len(s) == 3

    def test_random_reconstruction_error(self):
        # Oracle: direct reconstruction sum_j 2^-j U(j) U(j)^T.
        rng = np.random.default_rng(8)
        d = 32
        q = random_orthonormal(d, d, 8)
        h = q @ np.diag(rng.uniform(1 / 3, 1.0, size=d)) @ q.T
        split = split_spectrum(h)
        assert split.k == math.ceil(2 * math.log2(d)) + 2
        err = np.linalg.norm(h - split.reconstruction(), ord=2)
        assert err <= 2.0**-split.k + 1e-12

    def test_out_of_range_rejected(self):
        with pytest.raises(EigenvalueOutOfRange):
            split_spectrum(0.1 * np.eye(3))


class TestOmvViaProjection:
    def test_exact_oracles_half_identity(self):
        d = 8
        split = split_spectrum(0.5 * np.eye(d))
        oracles = split_oracles(split)
        z = np.random.default_rng(9).normal(size=d)
        z /= np.linalg.norm(z)
        y = omv_via_projection(split, z, oracles)
        assert np.allclose(y, 0.5 * z, atol=2.0**-split.k)

    def test_zero_query(self):
        d = 4
        split = split_spectrum(0.5 * np.eye(d))
        y = omv_via_projection(split, np.zeros(d), split_oracles(split))
        assert np.array_equal(y, np.zeros(d))

    @pytest.mark.parametrize("d", [32, 64, 128])
    def test_noisy_oracles_error_scaling(self, d):
        # Oracle: exact H z; the per-bit oracles carry 1/(2 d^2) noise.
        rng = np.random.default_rng(d)
        q = random_orthonormal(d, d, d)
        h = q @ np.diag(rng.uniform(1 / 3, 1.0, size=d)) @ q.T
        split = split_spectrum(h)
        oracles = split_oracles(split, backing="noisy", noise=0.5 / d**2, seed=d)
        worst = 0.0
        for _ in range(10):
            z = rng.normal(size=d)
            z /= np.linalg.norm(z)
            y = omv_via_projection(split, z, oracles)
            worst = max(worst, float(np.linalg.norm(y - h @ z)))
        assert worst * d * d <= 0.8


class TestAmplification:
    def test_exact_oracles_reproduce_projection(self):
        d = 32
        u = random_orthonormal(d, 10, 1)
        u_perp = orthonormal_complement(u)
        z = np.random.default_rng(2).normal(size=d)
        z /= np.linalg.norm(z)
        depth = default_amplify_depth(d)
        out = amplify_projection(z, ExactProjection(u), ExactProjection(u_perp),
                                 depth, depth)
        assert np.linalg.norm(out - u @ (u.T @ z)) <= 1e-10

    def test_orthogonal_input_shrinks_to_beta_floor(self):
        d = 64
        u = random_orthonormal(d, 20, 3)
        u_perp = orthonormal_complement(u)
        z = u_perp @ np.random.default_rng(4).normal(size=d - 20)
        z /= np.linalg.norm(z)
        depth = default_amplify_depth(d)
        beta = 1.0 / d**3
        out = amplify_projection(z, AdversarialProjection(u, 1 / 3, beta, seed=1),
                                 AdversarialProjection(u_perp, 1 / 3, beta, seed=2),
                                 depth, depth)
        # Oracle: the exact projection of z onto U is zero.
        assert np.linalg.norm(out) <= 50 * depth * depth**2 * beta

    def test_adversarial_error_within_frozen_constant(self):
        result = verify_amplification(64, queries=25, seed=11)
        assert result.passed, result

    def test_error_scaling_non_increasing(self):
        metrics = [verify_amplification(d, queries=25, seed=5, threshold=1e9).metric
                   for d in (64, 128, 256)]
        for smaller_d, larger_d in zip(metrics, metrics[1:]):
            assert larger_d <= 2.0 * smaller_d  # within 2x slack

    def test_inner_loop_decay_trace(self):
        # ||w_{r,k,U}|| decays by about alpha per inner pass until the beta
        # floor; instrumented with exact projections of the intermediates.
        d = 128
        alpha, beta = 1.0 / 3.0, 1.0 / d**3
        u = random_orthonormal(d, 40, 7)
        u_perp = orthonormal_complement(u)
        depth = default_amplify_depth(d)
        z = np.random.default_rng(8).normal(size=d)
        z /= np.linalg.norm(z)
        _, trace = amplify_projection(
            z, AdversarialProjection(u, alpha, beta, seed=3),
            AdversarialProjection(u_perp, alpha, beta, seed=4),
            depth, depth, return_trace=True)
        floor = 20 * depth * beta
        first_round = trace["rounds"][0]
        norms = [np.linalg.norm(u.T @ w) for w in first_round["w"]]
        for prev, cur in zip(norms, norms[1:]):
            if prev <= floor:
                break
            assert cur <= (alpha + 0.05) * prev + 4 * beta

    def test_outer_loop_preserves_target_component(self):
        # ||z_{r+1,U} - z_{r,U}|| <= 4 (K+2) beta at every round.
        d = 128
        alpha, beta = 1.0 / 3.0, 1.0 / d**3
        u = random_orthonormal(d, 50, 9)
        u_perp = orthonormal_complement(u)
        depth = default_amplify_depth(d)
        z = np.random.default_rng(10).normal(size=d)
        z /= np.linalg.norm(z)
        out, trace = amplify_projection(
            z, AdversarialProjection(u, alpha, beta, seed=5),
            AdversarialProjection(u_perp, alpha, beta, seed=6),
            depth, depth, return_trace=True)
        per_round = [r["z"] for r in trace["rounds"]] + [out]
        for z_r, z_next in zip(per_round, per_round[1:]):
            drift = np.linalg.norm(u.T @ (z_next - z_r))
            assert drift <= 4 * (depth + 2) * beta

    def test_non_unit_input_rescaled(self):
        d = 16
        u = random_orthonormal(d, 4, 12)
        u_perp = orthonormal_complement(u)
        z = 3.7 * np.random.default_rng(13).normal(size=d)
        depth = default_amplify_depth(d)
        out = amplify_projection(z, ExactProjection(u), ExactProjection(u_perp),
                                 depth, depth)
        assert np.allclose(out, u @ (u.T @ z), atol=1e-9)


class TestLsrGadget:
    def test_exact_solver_coordinate_case(self):
        # U = [e1, e2] in R^4, z = e1: the answer lands within the contract.
        u = np.eye(4)[:, :2]
        gadget = LsrGadget(u)
        e1 = np.array([1.0, 0.0, 0.0, 0.0])
        out = gadget.project(e1)
        assert np.linalg.norm(out - e1) <= 1.0 / 3.0 + 1.0 / 4**3

    def test_zero_target_component_returns_zero(self):
        u = np.eye(4)[:, :2]
        gadget = LsrGadget(u)
        e3 = np.array([0.0, 0.0, 1.0, 0.0])
        assert np.array_equal(gadget.project(e3), np.zeros(4))

    def test_perturbed_solver_contract_holds_everywhere(self):
        # 100 random (U, z) at d = 16 with the relative-1/100 loss
        # perturbation; oracle for ground truth is the exact projection.
        d = 16
        rng = np.random.default_rng(14)
        for trial in range(100):
            d1 = int(rng.integers(1, d))
            u = random_orthonormal(d, d1, 500 + trial)
            gadget = LsrGadget(u, loss_perturbation=1 / 100, seed=trial)
            z = rng.normal(size=d)
            z /= np.linalg.norm(z)
            out = gadget.project(z)
            z_u = u @ (u.T @ z)
            err = np.linalg.norm(out - z_u)
            assert err <= np.linalg.norm(z_u) / 3.0 + 30.0 / d**3

    def test_usable_as_amplification_oracle(self):
        # The gadget is a (1/3, 1/d^3)-projection oracle; amplifying a pair
        # of gadgets should beat the raw gadget's error on span(U).
        d = 16
        u = random_orthonormal(d, 6, 21)
        u_perp = orthonormal_complement(u)
        g_u = LsrGadget(u, loss_perturbation=1 / 100, seed=1)
        g_perp = LsrGadget(u_perp, loss_perturbation=1 / 100, seed=2)
        depth = default_amplify_depth(d)
        rng = np.random.default_rng(22)
        z = rng.normal(size=d)
        z /= np.linalg.norm(z)
        amplified = amplify_projection(z, g_u, g_perp, depth, depth)
        truth = u @ (u.T @ z)
        raw_err = np.linalg.norm(g_u.project(z) - truth)
        amp_err = np.linalg.norm(amplified - truth)
        assert amp_err <= max(raw_err, 1e-6)


class TestIncrementalRecovery:
    def test_identity_single_query(self):
        d = 8
        out = incremental_omv_recover(np.eye(d) * 1.5, [np.eye(d)[0]], RecursiveLsq)
        assert np.linalg.norm(out[0] - 1.5 * np.eye(d)[0]) <= 0.004 / d**2 * d**2 + 1e-4

    def test_zero_query_gives_zero(self):
        d = 6
        out = incremental_omv_recover(2.0 * np.eye(d), [np.zeros(d)], RecursiveLsq)
        assert np.allclose(out[0], 0.0, atol=1e-12)

    def test_exact_solver_accuracy(self):
        # Oracle: direct H z per query.
        d = 32
        rng = np.random.default_rng(15)
        q = random_orthonormal(d, d, 15)
        h = q @ np.diag(rng.uniform(1.0, 3.0, size=d)) @ q.T
        queries = []
        for _ in range(100):
            z = rng.normal(size=d)
            queries.append(z / np.linalg.norm(z))
        answers = incremental_omv_recover(h, queries, RecursiveLsq)
        worst = max(np.linalg.norm(y - h @ z) for y, z in zip(answers, queries))
        assert worst * d * d <= 0.004

    def test_caps_and_spectrum_enforced(self):
        with pytest.raises(EigenvalueOutOfRange):
            incremental_omv_recover(0.5 * np.eye(4), [np.zeros(4)], RecursiveLsq)
        with pytest.raises(InvalidParameter):
            incremental_omv_recover(
                2.0 * np.eye(4), [np.zeros(4)] * 5, RecursiveLsq, t_cap=4)
