"""Pure-function entry points into the compression core.

Every call validates its arrays at the boundary, delegates to the scissor
package, and hands back fresh writable numpy arrays. No state is held
between calls, so everything here is reentrant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from scissor import (
    LlmCostConfig,
    OverheadConfig,
    PipelineConfig,
    SccConfig,
    VideoTokens,
    compress_video,
    compression_flops,
    llm_flops,
    scc_compress,
)
from scissor import read_vtok as _read_vtok
from scissor import write_vtok as _write_vtok

from .arrays import BoundArray


@dataclass(frozen=True)
class CompressStats:
    """What one compress() call did: sizes, the knobs used, per-frame counts."""

    input_tokens: int
    retained_tokens: int
    retention_ratio: float
    tau_spatial: float
    tau_temporal: float
    epsilon: float
    seed: int
    spatial_counts: tuple[int, ...]


def compress(
    video,
    tau: float,
    *,
    tau_temporal: float | None = None,
    epsilon: float = 0.05,
    seed: int = 0,
    temporal: bool = True,
    merge: bool = True,
    selector: str = "scc",
    target_count: int | None = None,
) -> tuple[np.ndarray, CompressStats]:
    """Compress an (n_frames, tokens_per_frame, dims) array to (M, dims)."""
    bound = BoundArray.bind(video, ndim=3)
    cfg = PipelineConfig.from_params(
        tau=tau,
        epsilon=epsilon,
        seed=seed,
        tau_temporal=tau_temporal,
        enable_temporal=temporal,
        enable_final_merge=merge,
        selector=selector,
        target_count=target_count,
    )
    result = compress_video(VideoTokens.from_array(bound.data), cfg)
    stats = CompressStats(
        input_tokens=result.input_count,
        retained_tokens=result.temporal_count,
        retention_ratio=result.retention_ratio,
        tau_spatial=cfg.spatial.tau,
        tau_temporal=cfg.temporal.tau,
        epsilon=epsilon,
        seed=seed,
        spatial_counts=tuple(result.spatial_counts),
    )
    return np.array(result.final), stats


def scc(tokens, tau: float, *, epsilon: float = 0.05, seed: int = 0):
    """One compression step on a 2-axis token matrix.

    Returns (compressed M x d array, component groups as index tuples).
    """
    bound = BoundArray.bind(tokens, ndim=2)
    out = scc_compress(bound.data, SccConfig(tau=tau, epsilon=epsilon, seed=seed))
    return np.array(out.compressed), out.partition.groups


def flops(
    *,
    layers: int,
    hidden: int,
    ffn: int,
    tokens: int,
    decode_len: int = 100,
    overhead: tuple[int, int, int, int, int] | None = None,
):
    """LLM prefill/decode cost, optionally charging the compressor's own work.

    overhead is (frames, tokens_per_frame, hidden, spatial_kept, final_kept).
    """
    report = llm_flops(
        LlmCostConfig(layers=layers, hidden=hidden, ffn=ffn, tokens=tokens, decode_len=decode_len)
    )
    if overhead is not None:
        n, m, d, k1, k2 = overhead
        report = report.with_overhead(
            compression_flops(OverheadConfig(frames=n, per_frame=m, hidden=d, k1=k1, k2=k2))
        )
    return report


def read_vtok(path) -> np.ndarray:
    """Read a token file into a fresh writable (n, m, d) float32 array."""
    return np.array(_read_vtok(path).data)


def write_vtok(path, video) -> None:
    """Write a 3-axis array as a token file."""
    _write_vtok(path, BoundArray.bind(video, ndim=3).data)
