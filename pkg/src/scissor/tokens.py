"""Token containers and the thresholded cosine-similarity graph.

Tokens are rows of float32 matrices. The similarity graph over a token set
is an N x N boolean adjacency matrix: two tokens are adjacent when their
cosine similarity strictly exceeds a threshold tau.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NonFiniteInputError, ZeroNormRowError

ZERO_NORM_EPS = 1e-12


def as_token_matrix(x) -> np.ndarray:
    """Validate and convert input to an N x d float32 token matrix.

    Accepts anything array-like with two axes. Rejects empty matrices and
    non-finite entries. Returns a C-contiguous float32 array.
    """
    arr = np.ascontiguousarray(x, dtype=np.float32)
    if arr.ndim != 2:
        raise ValueError(f"token matrix must have 2 axes, got {arr.ndim}")
    if arr.shape[0] < 1 or arr.shape[1] < 1:
        raise ValueError(f"token matrix must be non-empty, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise NonFiniteInputError("token matrix contains NaN or Inf entries")
    return arr


@dataclass(frozen=True)
class VideoTokens:
    """Frame-major container for video tokens: n frames x m tokens x d dims."""

    data: np.ndarray  # (n, m, d) float32, read-only

    @classmethod
    def from_array(cls, x) -> "VideoTokens":
        arr = np.ascontiguousarray(x, dtype=np.float32)
        if arr.ndim != 3:
            raise ValueError(f"video tokens must have 3 axes (n, m, d), got {arr.ndim}")
        if min(arr.shape) < 1:
            raise ValueError(f"video tokens must be non-empty, got shape {arr.shape}")
        if not np.all(np.isfinite(arr)):
            raise NonFiniteInputError("video tokens contain NaN or Inf entries")
        # Lock a view so the container is immutable without touching the caller's array.
        arr = arr.view()
        arr.flags.writeable = False
        return cls(arr)

    @classmethod
    def from_frames(cls, frames) -> "VideoTokens":
        mats = [as_token_matrix(f) for f in frames]
        shapes = {m.shape for m in mats}
        if len(shapes) != 1:
            raise ValueError(f"all frames must share one (m, d) shape, got {sorted(shapes)}")
        return cls.from_array(np.stack(mats, axis=0))

    @property
    def n_frames(self) -> int:
        return self.data.shape[0]

    @property
    def tokens_per_frame(self) -> int:
        return self.data.shape[1]

    @property
    def dims(self) -> int:
        return self.data.shape[2]

    def frame(self, i: int) -> np.ndarray:
        return self.data[i]

    def all_tokens(self) -> np.ndarray:
        """All tokens concatenated in frame order: (n*m) x d."""
        return self.data.reshape(-1, self.data.shape[2])


def _row_norms(k64: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(k64, axis=1)
    bad = np.flatnonzero(norms < ZERO_NORM_EPS)
    if bad.size:
        raise ZeroNormRowError(int(bad[0]))
    return norms


def cosine_similarity(tokens) -> np.ndarray:
    """Pairwise cosine similarity of the rows of a token matrix.

    Inputs are float32; the Gram matrix and norms are accumulated in float64
    so results are deterministic across platforms. The diagonal is pinned to
    exactly 1.0 (a token's self-similarity).
    """
    k = as_token_matrix(tokens)
    k64 = k.astype(np.float64)
    norms = _row_norms(k64)
    sim = (k64 @ k64.T) / np.outer(norms, norms)
    np.fill_diagonal(sim, 1.0)
    return sim


def binary_adjacency(sim: np.ndarray, tau: float) -> np.ndarray:
    """Threshold a symmetric similarity matrix into a boolean adjacency matrix.

    An edge exists where similarity is strictly greater than tau. The diagonal
    is always set (self-similarity is 1 > tau for any tau < 1), so every vertex
    carries a self-loop; self-loops never affect connectivity.
    """
    if not 0.0 <= tau < 1.0:
        raise ValueError(f"tau must be in [0, 1), got {tau}")
    sim = np.asarray(sim)
    if sim.ndim != 2 or sim.shape[0] != sim.shape[1]:
        raise ValueError(f"similarity matrix must be square, got shape {sim.shape}")
    bits = sim > tau
    np.fill_diagonal(bits, True)
    return bits


def degrees(adj: np.ndarray) -> np.ndarray:
    """Neighbor count per vertex, excluding the self-loop."""
    adj = np.asarray(adj, dtype=bool)
    deg = adj.sum(axis=1).astype(np.int64)
    deg -= np.diagonal(adj).astype(np.int64)
    return deg
