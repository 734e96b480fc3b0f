"""Two-step spatio-temporal video token compression.

Stage 1 compresses each frame independently (spatial redundancy); stage 2
compresses the concatenated per-frame representatives (temporal redundancy).
The retained tokens then absorb every source token via a nearest-neighbor
assignment and a weighted average, so no information source is dropped
outright. Toggles expose the intermediate variants (spatial only, no final
merge) and three model-free selector baselines.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ZeroNormRowError
from .scc import SccConfig, scc_compress
from .tokens import VideoTokens, ZERO_NORM_EPS, as_token_matrix

SELECTORS = ("scc", "random", "uniform", "l2norm")


@dataclass(frozen=True)
class PipelineConfig:
    spatial: SccConfig
    temporal: SccConfig
    enable_temporal: bool = True
    enable_final_merge: bool = True
    selector: str = "scc"
    target_count: int | None = None

    def __post_init__(self):
        if self.selector not in SELECTORS:
            raise ValueError(f"selector must be one of {SELECTORS}, got {self.selector!r}")
        if self.selector != "scc" and self.target_count is None:
            raise ValueError(f"selector {self.selector!r} requires target_count")

    @classmethod
    def from_params(
        cls,
        tau: float,
        epsilon: float = 0.05,
        seed: int = 0,
        tau_temporal: float | None = None,
        **kwargs,
    ) -> "PipelineConfig":
        """Build a config from scalar knobs; temporal tau defaults to the spatial one."""
        spatial = SccConfig(tau=tau, epsilon=epsilon, seed=seed)
        temporal = replace(spatial, tau=tau if tau_temporal is None else tau_temporal)
        return cls(spatial=spatial, temporal=temporal, **kwargs)


@dataclass(frozen=True)
class CompressionResult:
    retained: np.ndarray  # M x d float32, representatives before the final merge
    final: np.ndarray  # M x d float32
    assignment: np.ndarray  # (n*m,) int64: retained index nearest to each source token
    spatial_counts: list[int]  # per-frame representative counts (scc selector only)
    temporal_count: int  # M, the retained token count
    input_count: int  # n*m
    retention_ratio: float
    config: PipelineConfig = field(repr=False)


def frame_seeds(seed: int, n_frames: int) -> list[int]:
    """Deterministic per-frame seeds, split off the base seed."""
    children = np.random.SeedSequence(seed).spawn(n_frames)
    return [int(c.generate_state(1, np.uint64)[0]) for c in children]


def spatial_step(video: VideoTokens, cfg: SccConfig) -> list[np.ndarray]:
    """Compress each frame independently; element i has shape (m'_i, d)."""
    seeds = frame_seeds(cfg.seed, video.n_frames)
    return [
        scc_compress(video.frame(i), replace(cfg, seed=seeds[i])).compressed
        for i in range(video.n_frames)
    ]


def temporal_step(per_frame: list[np.ndarray], cfg: SccConfig) -> np.ndarray:
    """Compress the concatenation of per-frame representatives across time."""
    dims = {f.shape[1] for f in per_frame}
    if len(dims) != 1:
        raise ValueError(f"per-frame representatives disagree on dims: {sorted(dims)}")
    return scc_compress(np.vstack(per_frame), cfg).compressed


def assign_sources(all_tokens, retained) -> np.ndarray:
    """Index of the most cosine-similar retained token for each source token.

    Ties resolve to the smallest retained index.
    """
    src = as_token_matrix(all_tokens).astype(np.float64)
    dst = as_token_matrix(retained).astype(np.float64)
    if src.shape[1] != dst.shape[1]:
        raise ValueError(f"dims mismatch: sources {src.shape[1]}, retained {dst.shape[1]}")
    for name, mat in (("source", src), ("retained", dst)):
        norms = np.linalg.norm(mat, axis=1)
        bad = np.flatnonzero(norms < ZERO_NORM_EPS)
        if bad.size:
            raise ZeroNormRowError(int(bad[0]))
        mat /= norms[:, None]
    sim = src @ dst.T
    return np.argmax(sim, axis=1).astype(np.int64)


def final_merge(all_tokens, retained, assignment: np.ndarray) -> np.ndarray:
    """Average each retained token with its assigned sources, retained weight 1.

    A retained token with no assigned sources passes through unchanged.
    """
    src = as_token_matrix(all_tokens)
    dst = as_token_matrix(retained)
    assignment = np.asarray(assignment, dtype=np.int64)
    if assignment.shape != (src.shape[0],):
        raise ValueError(
            f"assignment length {assignment.shape} does not match {src.shape[0]} sources"
        )
    if assignment.size and (assignment.min() < 0 or assignment.max() >= dst.shape[0]):
        raise ValueError("assignment index out of range")
    sums = dst.astype(np.float64)
    np.add.at(sums, assignment, src.astype(np.float64))
    counts = np.bincount(assignment, minlength=dst.shape[0]).astype(np.float64)
    return (sums / (counts + 1.0)[:, None]).astype(np.float32)


def baseline_select(all_tokens, method: str, target_count: int, seed: int) -> np.ndarray:
    """Representative-token selection baselines: random, uniform, l2norm.

    random: sampled without replacement, in draw order. uniform: evenly spaced
    original indices. l2norm: the rows with largest L2 norm (ties to the
    smaller index), emitted in ascending original-index order.
    """
    k = as_token_matrix(all_tokens)
    n = k.shape[0]
    if not 1 <= target_count <= n:
        raise ValueError(f"target_count must be in [1, {n}], got {target_count}")
    if method == "random":
        idx = np.random.default_rng(seed).choice(n, size=target_count, replace=False)
    elif method == "uniform":
        idx = (np.arange(target_count) * n) // target_count
    elif method == "l2norm":
        norms = np.linalg.norm(k.astype(np.float64), axis=1)
        by_norm = np.lexsort((np.arange(n), -norms))
        idx = np.sort(by_norm[:target_count])
    else:
        raise ValueError(f"unknown selection method {method!r}")
    return k[idx].copy()


def compress_video(video: VideoTokens, cfg: PipelineConfig) -> CompressionResult:
    """Run the full compression pipeline on a video token tensor."""
    all_tokens = video.all_tokens()
    spatial_counts: list[int] = []

    if cfg.selector == "scc":
        per_frame = spatial_step(video, cfg.spatial)
        spatial_counts = [f.shape[0] for f in per_frame]
        if cfg.enable_temporal:
            retained = temporal_step(per_frame, cfg.temporal)
        else:
            retained = np.vstack(per_frame)
    else:
        retained = baseline_select(all_tokens, cfg.selector, cfg.target_count, cfg.spatial.seed)

    assignment = assign_sources(all_tokens, retained)
    final = final_merge(all_tokens, retained, assignment) if cfg.enable_final_merge else retained

    m = retained.shape[0]
    return CompressionResult(
        retained=retained,
        final=final,
        assignment=assignment,
        spatial_counts=spatial_counts,
        temporal_count=m,
        input_count=all_tokens.shape[0],
        retention_ratio=m / all_tokens.shape[0],
        config=cfg,
    )


def fit_tau(
    video: VideoTokens,
    target_ratio: float,
    cfg: PipelineConfig,
    tolerance: float = 0.01,
    max_iters: int = 20,
) -> tuple[float, CompressionResult]:
    """Bisect tau to hit a requested retention ratio within +/- tolerance.

    The retained count is non-decreasing in tau in expectation, so plain
    bisection over [0, 1) converges; returns the tau whose achieved ratio came
    closest, together with that run's result. This is a usability extension on
    top of the core method, which treats tau itself as the control knob.
    """
    if not 0.0 < target_ratio <= 1.0:
        raise ValueError(f"target ratio must be in (0, 1], got {target_ratio}")

    def run(tau: float) -> CompressionResult:
        spatial = replace(cfg.spatial, tau=tau)
        temporal = replace(cfg.temporal, tau=tau)
        return compress_video(video, replace(cfg, spatial=spatial, temporal=temporal))

    lo, hi = 0.0, 1.0 - 1e-9
    best: tuple[float, float, CompressionResult] | None = None
    for _ in range(max_iters):
        mid = (lo + hi) / 2.0
        result = run(mid)
        gap = abs(result.retention_ratio - target_ratio)
        if best is None or gap < best[0]:
            best = (gap, mid, result)
        if gap <= tolerance:
            break
        if result.retention_ratio > target_ratio:
            hi = mid  # too many tokens retained; loosen the threshold
        else:
            lo = mid
    _, tau, result = best
    return tau, result
