import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from scissor import (
    PipelineConfig,
    SccConfig,
    VideoTokens,
    assign_sources,
    baseline_select,
    compress_video,
    final_merge,
    fit_tau,
    frame_seeds,
    gen_synthetic_video,
    scc_compress,
    spatial_step,
    SyntheticSpec,
    temporal_step,
)

FULL_SAMPLING = 1e-9


def orthobasis(k: int, d: int) -> np.ndarray:
    basis = np.zeros((k, d), dtype=np.float32)
    basis[np.arange(k), np.arange(k)] = 1.0
    return basis


class TestSpatialStep:
    def test_identical_tokens_per_frame(self):
        v = np.full((2, 5, 3), 0.7, dtype=np.float32)
        reps = spatial_step(VideoTokens.from_array(v), SccConfig(tau=0.9))
        assert [r.shape for r in reps] == [(1, 3), (1, 3)]

    def test_orthogonal_tokens_unchanged(self):
        frames = np.stack([orthobasis(4, 6), orthobasis(4, 6) * 2])
        video = VideoTokens.from_array(frames)
        reps = spatial_step(video, SccConfig(tau=0.5))
        for i, r in enumerate(reps):
            np.testing.assert_array_equal(r, video.frame(i))

    def test_two_planted_clusters_per_frame(self):
        a, b = orthobasis(2, 4)
        video = VideoTokens.from_array(np.array([[a, a, b, b]], dtype=np.float32))
        reps = spatial_step(video, SccConfig(tau=0.5))
        assert reps[0].shape == (2, 4)
        np.testing.assert_allclose(reps[0], [a, b], atol=1e-6)

    def test_frames_use_distinct_derived_seeds(self):
        seeds = frame_seeds(42, 8)
        assert len(set(seeds)) == 8
        assert seeds == frame_seeds(42, 8)  # deterministic


class TestTemporalStep:
    def test_shared_rep_across_frames_merges(self):
        a, b, c = orthobasis(3, 5)
        out = temporal_step([np.stack([a, b]), np.stack([b, c])], SccConfig(tau=0.5))
        np.testing.assert_allclose(out, [a, b, c], atol=1e-6)

    def test_single_frame_equals_plain_compression(self):
        rng = np.random.default_rng(3)
        reps = rng.normal(size=(6, 4)).astype(np.float32)
        cfg = SccConfig(tau=0.4, epsilon=FULL_SAMPLING, seed=5)
        np.testing.assert_array_equal(
            temporal_step([reps], cfg), scc_compress(reps, cfg).compressed
        )

    def test_all_frames_same_vector(self):
        v = np.array([[1.0, 2.0, 2.0]], dtype=np.float32)
        out = temporal_step([v, v, v], SccConfig(tau=0.9))
        np.testing.assert_allclose(out, v, atol=1e-6)

    def test_dim_mismatch_rejected(self):
        with pytest.raises(ValueError):
            temporal_step([np.ones((2, 3), np.float32), np.ones((2, 4), np.float32)],
                          SccConfig(tau=0.5))


class TestAssignSources:
    def test_identity_when_sources_equal_targets(self):
        k = orthobasis(4, 4)
        np.testing.assert_array_equal(assign_sources(k, k), [0, 1, 2, 3])

    def test_hand_example(self):
        sources = [(1.0, 0.0), (0.0, 1.0)]
        targets = [(1.0, 0.0), (0.6, 0.8)]
        np.testing.assert_array_equal(assign_sources(sources, targets), [0, 1])

    def test_single_target_assigns_all_to_zero(self):
        rng = np.random.default_rng(1)
        sources = rng.normal(size=(7, 3)).astype(np.float32) + 0.3
        np.testing.assert_array_equal(assign_sources(sources, [[1.0, 0.0, 0.0]]), np.zeros(7))

    def test_tie_resolves_to_smallest_index(self):
        sources = [(1.0, 0.0)]
        targets = [(2.0, 0.0), (1.0, 0.0)]  # both cosine 1 with the source
        assert assign_sources(sources, targets)[0] == 0

    def test_dim_mismatch(self):
        with pytest.raises(ValueError):
            assign_sources(np.ones((2, 3), np.float32), np.ones((2, 4), np.float32))


class TestFinalMerge:
    def test_identity_assignment_returns_targets(self):
        k = orthobasis(3, 3) * 2
        out = final_merge(k, k, np.array([0, 1, 2]))
        np.testing.assert_allclose(out, k, atol=1e-6)  # (t + t) / 2 = t

    def test_hand_weighted_average(self):
        targets = np.array([[1.0, 0.0]], dtype=np.float32)
        sources = np.array([[1.0, 0.0], [0.8, 0.6]], dtype=np.float32)
        out = final_merge(sources, targets, np.array([0, 0]))
        np.testing.assert_allclose(out, [[0.93333, 0.2]], atol=1e-5)

    def test_unassigned_target_passes_through(self):
        targets = np.array([[1.0, 0.0], [0.0, 1.0]], dtype=np.float32)
        sources = np.array([[1.0, 0.0]], dtype=np.float32)
        out = final_merge(sources, targets, np.array([0]))
        np.testing.assert_array_equal(out[1], targets[1])

    def test_assignment_shape_and_range_checked(self):
        k = orthobasis(2, 2)
        with pytest.raises(ValueError):
            final_merge(k, k, np.array([0]))  # wrong length
        with pytest.raises(ValueError):
            final_merge(k, k, np.array([0, 5]))  # out of range


class TestCompressVideo:
    def test_fully_redundant_video(self):
        v = np.tile(np.array([0.6, 0.8, 0.0], dtype=np.float32), (3, 4, 1))
        result = compress_video(VideoTokens.from_array(v), PipelineConfig.from_params(tau=0.9))
        assert result.temporal_count == 1
        np.testing.assert_allclose(result.final, [[0.6, 0.8, 0.0]], atol=1e-6)

    def test_zero_redundancy_video(self):
        basis = orthobasis(8, 8)
        video = VideoTokens.from_array(basis.reshape(2, 4, 8))
        result = compress_video(video, PipelineConfig.from_params(tau=0.99))
        assert result.temporal_count == 8
        np.testing.assert_array_equal(result.final, basis)
        assert result.retention_ratio == 1.0

    def test_planted_two_frames_three_clusters(self):
        a, b, c = orthobasis(3, 6)
        video = VideoTokens.from_array(
            np.array([[a, a, b, b], [b, b, c, c]], dtype=np.float32)
        )
        result = compress_video(video, PipelineConfig.from_params(tau=0.5))
        assert result.spatial_counts == [2, 2]
        assert result.temporal_count == 3
        np.testing.assert_allclose(result.final, [a, b, c], atol=1e-6)

    def test_counts_and_ratio_consistent(self):
        fx = gen_synthetic_video(SyntheticSpec(3, 20, 16, 5, noise_sigma=0.05, seed=2))
        result = compress_video(fx.video, PipelineConfig.from_params(tau=0.7, seed=4))
        assert result.input_count == 60
        assert result.retention_ratio == result.temporal_count / 60
        assert result.temporal_count <= sum(result.spatial_counts) <= 60
        assert result.assignment.shape == (60,)
        assert result.assignment.min() >= 0
        assert result.assignment.max() < result.temporal_count

    def test_disabling_temporal_never_reduces_count(self):
        fx = gen_synthetic_video(SyntheticSpec(4, 12, 16, 4, noise_sigma=0.06, seed=6))
        full = compress_video(fx.video, PipelineConfig.from_params(tau=0.75, seed=3))
        no_temporal = compress_video(
            fx.video, PipelineConfig.from_params(tau=0.75, seed=3, enable_temporal=False)
        )
        assert no_temporal.temporal_count >= full.temporal_count
        assert no_temporal.temporal_count == sum(no_temporal.spatial_counts)

    def test_disabling_merge_returns_retained(self):
        fx = gen_synthetic_video(SyntheticSpec(2, 10, 8, 3, noise_sigma=0.05, seed=8))
        result = compress_video(
            fx.video, PipelineConfig.from_params(tau=0.6, seed=1, enable_final_merge=False)
        )
        np.testing.assert_array_equal(result.final, result.retained)

    def test_bit_identical_determinism(self):
        fx = gen_synthetic_video(SyntheticSpec(3, 18, 12, 4, noise_sigma=0.07, seed=10))
        cfg = PipelineConfig.from_params(tau=0.8, epsilon=0.3, seed=21)
        a = compress_video(fx.video, cfg)
        b = compress_video(fx.video, cfg)
        assert a.retained.tobytes() == b.retained.tobytes()
        assert a.final.tobytes() == b.final.tobytes()
        np.testing.assert_array_equal(a.assignment, b.assignment)

    def test_final_tokens_inside_input_bounding_box(self):
        fx = gen_synthetic_video(SyntheticSpec(2, 16, 10, 3, noise_sigma=0.08, seed=12))
        result = compress_video(fx.video, PipelineConfig.from_params(tau=0.7, seed=2))
        tokens = fx.video.all_tokens()
        assert np.all(result.final >= tokens.min(axis=0) - 1e-5)
        assert np.all(result.final <= tokens.max(axis=0) + 1e-5)

    @settings(max_examples=25, deadline=None)
    @given(st.integers(0, 100_000))
    def test_merge_conservation(self, seed):
        rng = np.random.default_rng(seed)
        n, m, d = int(rng.integers(1, 4)), int(rng.integers(2, 10)), int(rng.integers(2, 8))
        v = rng.normal(size=(n, m, d)).astype(np.float32)
        v += np.sign(v) * 0.05  # keep rows off zero norm
        cfg = PipelineConfig.from_params(
            tau=float(rng.uniform(0, 0.9)), epsilon=float(rng.uniform(0.05, 1.0)), seed=seed
        )
        result = compress_video(VideoTokens.from_array(v), cfg)
        counts = np.bincount(result.assignment, minlength=result.temporal_count)
        lhs = ((counts + 1)[:, None] * result.final.astype(np.float64)).sum(axis=0)
        rhs = (
            v.reshape(-1, d).astype(np.float64).sum(axis=0)
            + result.retained.astype(np.float64).sum(axis=0)
        )
        scale = max(1.0, float(np.abs(rhs).max()))
        np.testing.assert_allclose(lhs, rhs, atol=1e-4 * scale)


class TestBaselineSelect:
    def test_uniform_indices(self):
        k = np.arange(16, dtype=np.float32).reshape(8, 2) + 1
        out = baseline_select(k, "uniform", 4, seed=0)
        np.testing.assert_array_equal(out, k[[0, 2, 4, 6]])

    def test_l2norm_picks_largest(self):
        k = np.array([[3.0, 0.0], [1.0, 0.0], [2.0, 0.0]], dtype=np.float32)
        out = baseline_select(k, "l2norm", 2, seed=0)
        np.testing.assert_array_equal(out, k[[0, 2]])  # ascending original order

    def test_l2norm_tie_prefers_smaller_index(self):
        k = np.array([[2.0, 0.0], [0.0, 2.0], [1.0, 0.0]], dtype=np.float32)
        out = baseline_select(k, "l2norm", 1, seed=0)
        np.testing.assert_array_equal(out, k[[0]])

    def test_target_equals_n_returns_all(self):
        rng = np.random.default_rng(4)
        k = rng.normal(size=(6, 3)).astype(np.float32)
        np.testing.assert_array_equal(baseline_select(k, "uniform", 6, seed=0), k)
        np.testing.assert_array_equal(baseline_select(k, "l2norm", 6, seed=0), k)
        rand = baseline_select(k, "random", 6, seed=0)
        assert {tuple(r) for r in rand} == {tuple(r) for r in k}

    def test_random_is_seeded_without_replacement(self):
        k = np.arange(20, dtype=np.float32).reshape(10, 2)
        a = baseline_select(k, "random", 5, seed=7)
        b = baseline_select(k, "random", 5, seed=7)
        np.testing.assert_array_equal(a, b)
        assert len({tuple(r) for r in a}) == 5

    @pytest.mark.parametrize("target", [0, 9])
    def test_invalid_target_count(self, target):
        with pytest.raises(ValueError):
            baseline_select(np.ones((8, 2), np.float32), "uniform", target, seed=0)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            baseline_select(np.ones((4, 2), np.float32), "entropy", 2, seed=0)

    def test_selector_pipeline_counts(self):
        fx = gen_synthetic_video(SyntheticSpec(2, 12, 8, 3, noise_sigma=0.05, seed=5))
        for sel in ("random", "uniform", "l2norm"):
            cfg = PipelineConfig.from_params(tau=0.5, seed=3, selector=sel, target_count=5)
            result = compress_video(fx.video, cfg)
            assert result.temporal_count == 5
            assert result.final.shape == (5, 8)
            assert result.spatial_counts == []  # no per-frame stage ran


class TestPipelineConfig:
    def test_non_scc_selector_requires_target(self):
        with pytest.raises(ValueError):
            PipelineConfig.from_params(tau=0.5, selector="random")

    def test_unknown_selector(self):
        with pytest.raises(ValueError):
            PipelineConfig.from_params(tau=0.5, selector="magic", target_count=3)

    def test_temporal_tau_defaults_to_spatial(self):
        cfg = PipelineConfig.from_params(tau=0.62)
        assert cfg.temporal.tau == 0.62
        cfg = PipelineConfig.from_params(tau=0.62, tau_temporal=0.9)
        assert (cfg.spatial.tau, cfg.temporal.tau) == (0.62, 0.9)


class TestFitTau:
    def test_hits_achievable_ratio(self):
        fx = gen_synthetic_video(SyntheticSpec(2, 24, 32, 3, noise_sigma=0.1, seed=11))
        base = PipelineConfig.from_params(tau=0.3, epsilon=FULL_SAMPLING, seed=2)
        reference = compress_video(
            fx.video, PipelineConfig.from_params(tau=0.7, epsilon=FULL_SAMPLING, seed=2)
        )
        tau, result = fit_tau(fx.video, reference.retention_ratio, base)
        assert abs(result.retention_ratio - reference.retention_ratio) <= 0.01
        assert 0.0 <= tau < 1.0

    def test_extreme_targets(self):
        fx = gen_synthetic_video(SyntheticSpec(2, 16, 16, 4, noise_sigma=0.08, seed=13))
        cfg = PipelineConfig.from_params(tau=0.5, epsilon=FULL_SAMPLING, seed=1)
        _, high = fit_tau(fx.video, 1.0, cfg)
        assert high.retention_ratio >= 0.99

    @pytest.mark.parametrize("ratio", [0.0, -0.5, 1.5])
    def test_invalid_target_ratio(self, ratio):
        fx = gen_synthetic_video(SyntheticSpec(1, 8, 8, 2, seed=1))
        with pytest.raises(ValueError):
            fit_tau(fx.video, ratio, PipelineConfig.from_params(tau=0.5))
