"""Synthetic benchmark harness.

Generates videos with planted semantic structure (mutually orthogonal cluster
centroids plus bounded gaussian noise), so compression quality is measurable
against ground truth at desk scale. Also provides threshold/tolerance sweep
statistics, selector comparisons, and a wall-clock scaling probe for the
approximate component search.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .components import approx_components, sample_size
from .pipeline import PipelineConfig, compress_video
from .tokens import VideoTokens, cosine_similarity

COVERAGE_COSINE = 0.9  # a centroid counts as "found" above this similarity


@dataclass(frozen=True)
class SyntheticSpec:
    n_frames: int
    tokens_per_frame: int
    dims: int
    n_clusters: int
    noise_sigma: float = 0.0
    temporal_drift: float = 0.0
    seed: int = 0

    def __post_init__(self):
        for name in ("n_frames", "tokens_per_frame", "dims", "n_clusters"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")
        if self.n_clusters > self.dims:
            # orthogonal centroids only exist up to the ambient dimension
            raise ValueError(
                f"n_clusters ({self.n_clusters}) cannot exceed dims ({self.dims})"
            )
        if self.n_clusters > self.n_frames * self.tokens_per_frame:
            raise ValueError("n_clusters exceeds total token count; cannot cover all clusters")
        if self.noise_sigma < 0 or self.temporal_drift < 0:
            raise ValueError("noise_sigma and temporal_drift must be >= 0")


@dataclass(frozen=True)
class SyntheticVideo:
    """A generated fixture: tokens, the planted labels behind them, the unit
    centroids, and the achieved cosine margin (min intra minus max inter)."""

    video: VideoTokens
    labels: np.ndarray  # (n_frames, tokens_per_frame) int64
    centroids: np.ndarray  # (n_clusters, dims) float32, unit rows
    margin: float
    spec: SyntheticSpec


def _unit_rows(x: np.ndarray) -> np.ndarray:
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def gen_synthetic_video(spec: SyntheticSpec) -> SyntheticVideo:
    """Plant n_clusters orthogonal unit centroids and sample noisy tokens.

    Each token is the unit-normalized sum of its cluster centroid (optionally
    drifted per frame) and gaussian noise. Every cluster id is guaranteed to
    appear at least once. Deterministic per seed. Raises if the noise level
    destroys the separation margin between clusters.
    """
    rng = np.random.default_rng(spec.seed)
    n, m, d, k = spec.n_frames, spec.tokens_per_frame, spec.dims, spec.n_clusters

    basis, _ = np.linalg.qr(rng.standard_normal((d, k)))
    centroids = _unit_rows(basis.T)  # (k, d), mutually orthogonal

    labels = rng.integers(0, k, size=(n, m), dtype=np.int64)
    labels.reshape(-1)[:k] = rng.permutation(k)

    frames = []
    for f in range(n):
        eff = centroids
        if spec.temporal_drift > 0:
            eff = _unit_rows(centroids + spec.temporal_drift * rng.standard_normal((k, d)))
        tok = eff[labels[f]]
        if spec.noise_sigma > 0:
            tok = _unit_rows(tok + spec.noise_sigma * rng.standard_normal((m, d)))
        frames.append(tok.astype(np.float32))

    video = VideoTokens.from_frames(frames)
    margin = _cosine_margin(video, labels)
    if margin <= 0:
        raise ValueError(
            f"noise_sigma={spec.noise_sigma} collapses cluster separation "
            f"(margin {margin:.4f}); lower it or raise dims"
        )
    return SyntheticVideo(
        video=video,
        labels=labels,
        centroids=centroids.astype(np.float32),
        margin=margin,
        spec=spec,
    )


def _cosine_margin(video: VideoTokens, labels: np.ndarray) -> float:
    """Smallest same-cluster cosine minus largest cross-cluster cosine."""
    sim = cosine_similarity(video.all_tokens())
    flat = labels.reshape(-1)
    same = flat[:, None] == flat[None, :]
    np.fill_diagonal(same, False)
    off_diag = ~np.eye(flat.size, dtype=bool)
    min_intra = float(sim[same].min()) if same.any() else 1.0
    inter = sim[~same & off_diag]
    max_inter = float(inter.max()) if inter.size else -1.0
    return min_intra - max_inter


@dataclass(frozen=True)
class SweepCurve:
    param: str  # "tau" or "epsilon"
    values: tuple[float, ...]
    mean_counts: tuple[float, ...]
    std_counts: tuple[float, ...]
    runs: int
    input_tokens: int
    floor_count: int | None = None  # exact-component count, epsilon sweeps only

    def __post_init__(self):
        if not len(self.values) == len(self.mean_counts) == len(self.std_counts):
            raise ValueError("sweep curve columns misaligned")
        for c in self.mean_counts:
            if not 1 <= c <= self.input_tokens:
                raise ValueError(f"mean count {c} outside [1, {self.input_tokens}]")


def _run_seeds(seed: int, runs: int) -> list[int]:
    return [int(s.generate_state(1, np.uint64)[0]) for s in np.random.SeedSequence(seed).spawn(runs)]


def _retained_count(video: VideoTokens, tau: float, epsilon: float, seed: int) -> int:
    cfg = PipelineConfig.from_params(tau=tau, epsilon=epsilon, seed=seed)
    return compress_video(video, cfg).temporal_count


def sweep_tau(
    video: VideoTokens, taus: list[float], epsilon: float, runs: int, seed: int = 0
) -> SweepCurve:
    """Mean retained token count per threshold, averaged over `runs` seeds.

    The same seed set is reused at every threshold so curves over tau are
    paired. Stricter thresholds retain more tokens.
    """
    if list(taus) != sorted(taus):
        raise ValueError("taus must be sorted ascending")
    if runs < 1:
        raise ValueError("runs must be >= 1")
    seeds = _run_seeds(seed, runs)
    means, stds = [], []
    for tau in taus:
        counts = [_retained_count(video, tau, epsilon, s) for s in seeds]
        means.append(float(np.mean(counts)))
        stds.append(float(np.std(counts)))
    return SweepCurve(
        param="tau",
        values=tuple(float(t) for t in taus),
        mean_counts=tuple(means),
        std_counts=tuple(stds),
        runs=runs,
        input_tokens=video.n_frames * video.tokens_per_frame,
    )


def sweep_epsilon(
    video: VideoTokens, tau: float, epsilons: list[float], runs: int, seed: int = 0
) -> SweepCurve:
    """Mean retained token count per sampling tolerance.

    Larger tolerances sample fewer vertices, leave more vertices uncovered,
    and so retain more tokens. floor_count is the full-sampling reference
    (every vertex sampled, hence the exact component count).
    """
    if list(epsilons) != sorted(epsilons):
        raise ValueError("epsilons must be sorted ascending")
    if runs < 1:
        raise ValueError("runs must be >= 1")
    seeds = _run_seeds(seed, runs)
    means, stds = [], []
    for eps in epsilons:
        counts = [_retained_count(video, tau, eps, s) for s in seeds]
        means.append(float(np.mean(counts)))
        stds.append(float(np.std(counts)))
    floor = _retained_count(video, tau, 1e-9, seeds[0])
    return SweepCurve(
        param="epsilon",
        values=tuple(float(e) for e in epsilons),
        mean_counts=tuple(means),
        std_counts=tuple(stds),
        runs=runs,
        input_tokens=video.n_frames * video.tokens_per_frame,
        floor_count=floor,
    )


@dataclass(frozen=True)
class SelectorRow:
    selector: str
    count: int
    recovery_error: float  # mean cosine distance from final tokens to nearest centroid
    coverage: float  # fraction of centroids with a final token within COVERAGE_COSINE
    coverage_threshold: float = COVERAGE_COSINE


def compare_selectors(
    fixture: SyntheticVideo, tau: float, epsilon: float, seed: int = 0
) -> list[SelectorRow]:
    """Head-to-head of component-based compression vs. selection baselines.

    The baselines (random, uniform, largest-norm) are given the component
    method's retained count as their target, so all rows are the same size.
    Needs the fixture's planted centroids, hence takes the full fixture.
    """
    rows = []
    scc_cfg = PipelineConfig.from_params(tau=tau, epsilon=epsilon, seed=seed)
    scc_result = compress_video(fixture.video, scc_cfg)
    target = scc_result.temporal_count
    rows.append(_score_row("scc", scc_result.final, fixture.centroids))
    for sel in ("random", "uniform", "l2norm"):
        cfg = PipelineConfig.from_params(
            tau=tau, epsilon=epsilon, seed=seed, selector=sel, target_count=target
        )
        result = compress_video(fixture.video, cfg)
        rows.append(_score_row(sel, result.final, fixture.centroids))
    return rows


def _score_row(name: str, final: np.ndarray, centroids: np.ndarray) -> SelectorRow:
    f = _unit_rows(final.astype(np.float64))
    c = _unit_rows(centroids.astype(np.float64))
    sim = f @ c.T  # final x centroids
    recovery_error = float(np.mean(1.0 - sim.max(axis=1)))
    coverage = float(np.mean(sim.max(axis=0) >= COVERAGE_COSINE))
    return SelectorRow(
        selector=name, count=final.shape[0], recovery_error=recovery_error, coverage=coverage
    )


@dataclass(frozen=True)
class TimingRow:
    size: int
    seconds: float
    sample_size: int


@dataclass(frozen=True)
class TimingReport:
    epsilon: float
    rows: tuple[TimingRow, ...]
    exponent: float | None  # slope of log time vs log size; None below 2 sizes


def timing_scaling(
    sizes: list[int], epsilon: float, seed: int = 0, reps: int = 5, avg_degree: float = 4.0
) -> TimingReport:
    """Wall time of the approximate component search on sparse random graphs.

    Each size gets a symmetric random graph of roughly constant average
    degree; the median of `reps` runs is reported. With two or more sizes the
    log-log growth exponent is fitted. Sampling keeps the exponent near
    linear once sizes pass the point where the sample budget stops covering
    every vertex; forcing full sampling pushes it back toward quadratic.
    """
    if list(sizes) != sorted(sizes):
        raise ValueError("sizes must be sorted ascending")
    rng = np.random.default_rng(seed)
    rows = []
    for n in sizes:
        adj = np.zeros((n, n), dtype=bool)
        n_edges = int(avg_degree * n / 2)
        i = rng.integers(0, n, size=n_edges)
        j = rng.integers(0, n, size=n_edges)
        adj[i, j] = True
        adj[j, i] = True
        np.fill_diagonal(adj, True)
        times = []
        for r in range(reps):
            start = time.perf_counter()
            approx_components(adj, epsilon, seed=seed + r)
            times.append(time.perf_counter() - start)
        rows.append(TimingRow(size=n, seconds=float(np.median(times)), sample_size=sample_size(n, epsilon)))
    exponent = None
    if len(sizes) >= 2:
        logs = np.log10([r.size for r in rows]), np.log10([r.seconds for r in rows])
        exponent = float(np.polyfit(logs[0], logs[1], 1)[0])
    return TimingReport(epsilon=epsilon, rows=tuple(rows), exponent=exponent)
