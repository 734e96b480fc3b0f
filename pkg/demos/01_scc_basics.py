#!/usr/bin/env python3
"""Walk through one compression step on a hand-built token set.

Eight tokens, two obvious semantic directions plus noise. We look at the
cosine matrix, the thresholded adjacency, the connected components, and the
mean token each component collapses into.
"""

import numpy as np

from scissor import (
    SccConfig,
    approx_components,
    binary_adjacency,
    cosine_similarity,
    exact_components,
    scc_compress,
)

rng = np.random.default_rng(0)

# two directions in 8-d space, four noisy copies of each
a = np.array([1.0, 0, 0, 0, 0, 0, 0, 0])
b = np.array([0, 1.0, 0, 0, 0, 0, 0, 0])
tokens = np.vstack([d + 0.05 * rng.standard_normal(8) for d in [a] * 4 + [b] * 4])
tokens = (tokens / np.linalg.norm(tokens, axis=1, keepdims=True)).astype(np.float32)

sim = cosine_similarity(tokens)
print("cosine similarity (rounded):")
print(np.round(sim, 2))

tau = 0.8
adj = binary_adjacency(sim, tau)
print(f"\nadjacency at tau={tau} (edge = similarity strictly above tau):")
print(adj.astype(int))

exact = exact_components(adj)
print(f"\nexact components: {exact.groups}")

# the approximate search with a tiny tolerance samples every vertex,
# so it lands on the same partition
approx = approx_components(adj, epsilon=1e-9, seed=0)
print(f"full-sampling components: {approx.groups}")
assert approx.as_sets() == exact.as_sets()

# a loose tolerance samples few vertices; whatever they miss stays unmerged
loose = approx_components(adj, epsilon=1.0, seed=0)
print(f"loose-sampling components (epsilon=1.0): {loose.groups}")

out = scc_compress(tokens, SccConfig(tau=tau))
print(f"\ncompressed {tokens.shape[0]} tokens down to {out.compressed.shape[0]}:")
print(np.round(out.compressed, 3))
print("each row is the mean of one component, i.e. one semantic region")
