"""Connected components of a token adjacency graph.

approx_components() samples a subset of vertices (size governed by an error
tolerance epsilon), unions each sampled vertex with all of its neighbors, and
treats every vertex left uncovered as its own singleton component. With the
sample covering all vertices it degenerates to exact connectivity;
exact_components() provides that ground truth directly via breadth-first
search. Components are ordered by the smallest vertex ID among each group's
maximum-degree members, which preserves the relative positional layout of the
underlying tokens.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from .tokens import degrees
from .unionfind import UnionFind


@dataclass(frozen=True)
class ComponentPartition:
    """Ordered disjoint vertex groups covering exactly {0..n-1}."""

    groups: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        if any(len(group) == 0 for group in self.groups):
            raise ValueError("empty component group")
        flat = np.fromiter(
            (v for group in self.groups for v in group), dtype=np.int64
        )
        if flat.size and (flat.min() < 0 or flat.max() >= self.n):
            raise ValueError(f"vertex index out of range [0, {self.n})")
        counts = np.bincount(flat, minlength=self.n)
        if (counts > 1).any():
            raise ValueError("component groups overlap")
        if flat.size != self.n:
            raise ValueError(f"groups cover {flat.size} of {self.n} vertices")

    def __len__(self) -> int:
        return len(self.groups)

    def sizes(self) -> list[int]:
        return [len(g) for g in self.groups]

    def as_sets(self) -> frozenset:
        """Order-free view, for comparing partitions."""
        return frozenset(frozenset(g) for g in self.groups)


@dataclass(frozen=True)
class SamplePlan:
    """The sampled-vertex budget and the concrete draw used for one run."""

    epsilon: float
    sample_size: int
    sampled: np.ndarray = field(repr=False)  # distinct vertex indices
    seed: int


def sample_size(n: int, epsilon: float, log_base: float = 10.0) -> int:
    """Number of vertices to sample: min(n, ceil(log(n)/epsilon^2)).

    The logarithm is base 10 by default; log_base exists for sensitivity
    checks only. The result is clamped to at least 1 so n=1 inputs are legal.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if epsilon <= 0:
        raise ValueError(f"epsilon must be positive, got {epsilon}")
    budget = math.ceil(math.log(n, log_base) / (epsilon * epsilon))
    return min(n, max(1, budget))


def make_sample_plan(n: int, epsilon: float, seed: int, log_base: float = 10.0) -> SamplePlan:
    size = sample_size(n, epsilon, log_base)
    rng = np.random.default_rng(seed)
    sampled = rng.choice(n, size=size, replace=False)
    return SamplePlan(epsilon=epsilon, sample_size=size, sampled=sampled, seed=seed)


def approx_components(
    adj: np.ndarray, epsilon: float, seed: int, log_base: float = 10.0
) -> ComponentPartition:
    """Approximate connected components via sampled union-find.

    Each sampled vertex is unioned with every neighbor in its adjacency row,
    and the sampled vertex plus those neighbors are marked covered. Vertices
    never covered become singleton components, even if they share an edge with
    another uncovered vertex: that is the approximation error the epsilon
    tolerance governs. When the sample budget reaches n the result equals
    exact_components().
    """
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    plan = make_sample_plan(n, epsilon, seed, log_base)

    covered = np.zeros(n, dtype=bool)
    covered[plan.sampled] = True
    uf = UnionFind(n)

    xs: list[int] = []
    ys: list[int] = []
    for i in plan.sampled.tolist():
        neighbors = np.flatnonzero(adj[i])
        covered[neighbors] = True
        xs.extend([i] * neighbors.size)
        ys.extend(neighbors.tolist())
    uf.batch_union(xs, ys)
    uf.flatten()

    parent = uf.parent
    sampled_roots = {parent[i] for i in plan.sampled.tolist()}
    buckets: dict[int, list[int]] = {root: [] for root in sampled_roots}
    singletons: list[tuple[int, ...]] = []
    covered_list = covered.tolist()
    for v in range(n):
        if covered_list[v]:
            buckets[parent[v]].append(v)
        else:
            singletons.append((v,))

    groups = [tuple(members) for members in buckets.values()]
    groups.extend(singletons)
    partition = ComponentPartition(groups=tuple(groups), n=n)
    return sort_components(partition, adj)


def exact_components(adj: np.ndarray) -> ComponentPartition:
    """True connected components by breadth-first search (oracle for the above)."""
    adj = np.asarray(adj, dtype=bool)
    n = adj.shape[0]
    visited = np.zeros(n, dtype=bool)
    groups = []
    for start in range(n):
        if visited[start]:
            continue
        visited[start] = True
        members = [start]
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in np.flatnonzero(adj[v] & ~visited).tolist():
                visited[u] = True
                members.append(u)
                queue.append(u)
        groups.append(tuple(sorted(members)))
    partition = ComponentPartition(groups=tuple(groups), n=n)
    return sort_components(partition, adj)


def sort_components(partition: ComponentPartition, adj: np.ndarray) -> ComponentPartition:
    """Order groups by the smallest vertex ID among each group's max-degree members.

    Degree excludes the self-loop (a uniform +1 on every vertex cannot change
    an argmax). Keys are vertex IDs of distinct groups, so they never tie.
    """
    deg = degrees(adj).tolist()

    def key(group: tuple[int, ...]) -> int:
        return min(group, key=lambda v: (-deg[v], v))

    ordered = sorted(partition.groups, key=key)
    return ComponentPartition(groups=tuple(ordered), n=partition.n)
