"""Disjoint-set forest with path compression and union by rank."""

from __future__ import annotations


class UnionFind:
    """Disjoint sets over vertices 0..n-1.

    find() compresses paths by the grandparent hop; batch_union() merges by
    rank, attaching the y-root under the x-root on rank ties. Instances are
    single-writer: even find() mutates parent links.
    """

    __slots__ = ("parent", "rank")

    def __init__(self, n: int):
        if n < 1:
            raise ValueError(f"need at least one element, got n={n}")
        self.parent = list(range(n))
        self.rank = [0] * n

    def __len__(self) -> int:
        return len(self.parent)

    def find(self, x: int) -> int:
        """Root of x's set; shortens the traversed path as a side effect."""
        parent = self.parent
        if not 0 <= x < len(parent):
            raise IndexError(f"vertex {x} out of range [0, {len(parent)})")
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        x_root = self.find(x)
        y_root = self.find(y)
        if x_root == y_root:
            return
        rank = self.rank
        if rank[x_root] < rank[y_root]:
            self.parent[x_root] = y_root
        else:
            self.parent[y_root] = x_root
            if rank[x_root] == rank[y_root]:
                rank[x_root] += 1

    def batch_union(self, xs, ys) -> None:
        """Union corresponding pairs from two equal-length index sequences."""
        if len(xs) != len(ys):
            raise ValueError(f"length mismatch: {len(xs)} vs {len(ys)}")
        for x, y in zip(xs, ys):
            self.union(x, y)

    def flatten(self) -> None:
        """Point every vertex directly at its root; set structure is unchanged.

        Grouping vertices by parent equality is only sound on a flattened
        forest, so callers that read `parent` directly must flatten first.
        """
        parent = self.parent
        for i in range(len(parent)):
            parent[i] = self.find(i)
