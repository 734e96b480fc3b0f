"""Semantic-connected-component compression of a single token set.

Tokens whose pairwise cosine similarity exceeds a threshold tau form a graph;
each connected component is one semantic region and is replaced by the
arithmetic mean of its member tokens.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .components import ComponentPartition, approx_components
from .errors import PartitionMismatchError
from .tokens import as_token_matrix, binary_adjacency, cosine_similarity

DEFAULT_EPSILON = 0.05


@dataclass(frozen=True)
class SccConfig:
    tau: float
    epsilon: float = DEFAULT_EPSILON
    seed: int = 0

    def __post_init__(self):
        if not 0.0 <= self.tau < 1.0:
            raise ValueError(f"tau must be in [0, 1), got {self.tau}")
        if self.epsilon <= 0:
            raise ValueError(f"epsilon must be positive, got {self.epsilon}")
        if self.seed < 0:
            raise ValueError(f"seed must be non-negative, got {self.seed}")


@dataclass(frozen=True)
class SccOutput:
    compressed: np.ndarray  # M x d float32, one mean token per component
    partition: ComponentPartition


def merge_partition(tokens, partition: ComponentPartition) -> np.ndarray:
    """One output row per group: the arithmetic mean of that group's input rows.

    Means are accumulated in float64 and stored back as float32.
    """
    k = as_token_matrix(tokens)
    if partition.n != k.shape[0]:
        raise PartitionMismatchError(
            f"partition covers {partition.n} rows, token matrix has {k.shape[0]}"
        )
    k64 = k.astype(np.float64)
    out = np.empty((len(partition), k.shape[1]), dtype=np.float64)
    for i, group in enumerate(partition.groups):
        out[i] = k64[list(group)].mean(axis=0)
    return out.astype(np.float32)


def scc_compress(tokens, cfg: SccConfig) -> SccOutput:
    """Compress N tokens into M <= N mean tokens, one per semantic region."""
    k = as_token_matrix(tokens)
    n = k.shape[0]
    if n == 1:
        # Degenerate graph; skip sampling entirely.
        partition = ComponentPartition(groups=((0,),), n=1)
        return SccOutput(compressed=k.copy(), partition=partition)
    adj = binary_adjacency(cosine_similarity(k), cfg.tau)
    partition = approx_components(adj, cfg.epsilon, cfg.seed)
    return SccOutput(compressed=merge_partition(k, partition), partition=partition)
