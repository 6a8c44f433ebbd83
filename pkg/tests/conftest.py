"""Shared strategies and independent reference implementations.

The oracles here deliberately use a different algorithmic route than the
package (itertools subsets, permutation minima, set-based sums) so that
agreement is meaningful.
"""

import itertools

import hypothesis
from hypothesis import strategies as st

from booklab.graphs import Graph, from_mask

hypothesis.settings.register_profile("default", deadline=None)
hypothesis.settings.register_profile("thorough", deadline=None, max_examples=400)
hypothesis.settings.load_profile("default")


# ---------------------------------------------------------------------------
# strategies


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    mask = draw(st.integers(min_value=0, max_value=(1 << (n * (n - 1) // 2)) - 1))
    return from_mask(n, mask)


@st.composite
def graphs_with_vertex_pair(draw, min_n=2, max_n=8):
    g = draw(graphs(min_n=min_n, max_n=max_n))
    u = draw(st.integers(min_value=0, max_value=g.n - 1))
    v = draw(st.integers(min_value=0, max_value=g.n - 1))
    return g, u, v


# ---------------------------------------------------------------------------
# oracles


def oracle_count_cliques(g: Graph, r: int) -> int:
    if r == 0:
        return 1
    total = 0
    for combo in itertools.combinations(range(g.n), r):
        if all(g.has_edge(a, b) for a, b in itertools.combinations(combo, 2)):
            total += 1
    return total


def oracle_canonical_key(g: Graph) -> tuple:
    """Minimum adjacency encoding over every relabeling.  Factorial; n <= 6."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        bits = tuple(
            1 if g.has_edge(perm[i], perm[j]) else 0
            for j in range(g.n)
            for i in range(j)
        )
        if best is None or bits < best:
            best = bits
    return (g.n, best)


def oracle_contains_subgraph(g: Graph, h: Graph) -> bool:
    if h.n > g.n:
        return False
    for combo in itertools.permutations(range(g.n), h.n):
        if all(
            g.has_edge(combo[a], combo[b])
            for a, b in itertools.combinations(range(h.n), 2)
            if h.has_edge(a, b)
        ):
            return True
    return False


def oracle_partitions(r: int):
    """All partitions of r, built by first-part recursion (not the package's)."""

    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return list(rec(r, r))


def oracle_subset_sums(parts) -> set:
    sums = {0}
    for a in parts:
        sums |= {x + a for x in sums}
    return sums


def oracle_beta(r: int, s: int) -> int:
    best = 0
    for parts in oracle_partitions(r):
        hit = any(
            sum(c) == s
            for k in range(1, len(parts) + 1)
            for c in itertools.combinations(parts, k)
        )
        if not hit:
            best = max(best, len(parts))
    return best
