"""Immutable bit-vector graphs and the clique / containment kernel.

A graph stores one integer per vertex whose set bits are the neighbor
indices.  Python integers are arbitrary-precision bit vectors, so the
same word-wise AND tricks work uniformly for any order; everything below
64 vertices stays on the CPython small-int fast path.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import ResourceLimitError

#: Soft guard against absurd inputs.  Constructions in this package live in
#: the tens-to-hundreds of vertices; raise this if you know what you're doing.
VERTEX_CAP = 4096


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class VertexSet:
    """A subset of vertices, stored as a bit mask."""

    bits: int

    @classmethod
    def of(cls, *vertices: int) -> "VertexSet":
        m = 0
        for v in vertices:
            m |= 1 << v
        return cls(m)

    def vertices(self) -> tuple[int, ...]:
        return tuple(_bits(self.bits))

    def overlap(self, other: "VertexSet") -> int:
        return (self.bits & other.bits).bit_count()

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return (self.bits >> v) & 1 == 1


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    adj[v] is the neighbor set of v as a bit mask.  Instances are values:
    every operation returns a new graph.  Factories validate; hot loops
    that build graphs from already-consistent rows skip re-validation.
    """

    n: int
    adj: tuple[int, ...]

    def validate(self) -> "Graph":
        if not 0 <= self.n <= VERTEX_CAP:
            raise ValueError(f"vertex count {self.n} outside [0, {VERTEX_CAP}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count differs from n")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {u} mentions vertices >= n")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(self.n):
            row = self.adj[u]
            for v in _bits(row):
                if not (self.adj[v] >> u) & 1:
                    raise ValueError(f"asymmetric pair ({u}, {v})")
        return self

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges (u, v) with u < v in lexicographic order."""
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def permute(self, perm: tuple[int, ...] | list[int]) -> "Graph":
        """Relabel: vertex v of self becomes perm[v] of the result."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm is not a permutation of range(n)")
        rows = [0] * self.n
        for u in range(self.n):
            pu = perm[u]
            row = 0
            for v in _bits(self.adj[u]):
                row |= 1 << perm[v]
            rows[pu] = row
        return Graph(self.n, tuple(rows))


def from_edges(n: int, edges) -> Graph:
    """Build a graph from an iterable of (u, v) pairs.  Duplicates collapse."""
    if not 0 <= n <= VERTEX_CAP:
        raise ValueError(f"vertex count {n} outside [0, {VERTEX_CAP}]")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    if not 0 <= n <= VERTEX_CAP:
        raise ValueError(f"vertex count {n} outside [0, {VERTEX_CAP}]")
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    if not 0 <= n <= VERTEX_CAP:
        raise ValueError(f"vertex count {n} outside [0, {VERTEX_CAP}]")
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)]) if n else empty_graph(0)


def turan_part_sizes(n: int, t: int) -> tuple[int, ...]:
    """Part sizes of the Turan graph T_t(n): the first n mod t parts round up."""
    if t < 1:
        raise ValueError("need at least one part")
    q, rem = divmod(n, t)
    return tuple(q + 1 if i < rem else q for i in range(t))


def turan_graph(n: int, t: int) -> Graph:
    """Complete multipartite T_t(n); vertex i sits in part i mod t."""
    if t < 1:
        raise ValueError("need at least one part")
    if n < 0:
        raise ValueError("negative vertex count")
    rows = []
    for i in range(n):
        row = 0
        for j in range(n):
            if j != i and j % t != i % t:
                row |= 1 << j
        rows.append(row)
    return Graph(n, tuple(rows))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; h is shifted."""
    n = g.n + h.n
    if n > VERTEX_CAP:
        raise ValueError(f"join exceeds vertex cap {VERTEX_CAP}")
    g_side = (1 << g.n) - 1
    h_side = ((1 << h.n) - 1) << g.n
    rows = [g.adj[u] | h_side for u in range(g.n)]
    rows += [(h.adj[v] << g.n) | g_side for v in range(h.n)]
    return Graph(n, tuple(rows))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > VERTEX_CAP:
        raise ValueError(f"union exceeds vertex cap {VERTEX_CAP}")
    rows = list(g.adj) + [h.adj[v] << g.n for v in range(h.n)]
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge masks: pairs (i, j), i < j, in lexicographic order, one bit per pair.
# Used by the labeled search engine and by tests that sweep all graphs.

def from_mask(n: int, mask: int) -> Graph:
    rows = [0] * n
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if (mask >> k) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


def to_mask(g: Graph) -> int:
    mask = 0
    k = 0
    for i in range(g.n):
        row = g.adj[i]
        for j in range(i + 1, g.n):
            if (row >> j) & 1:
                mask |= 1 << k
            k += 1
    return mask


# ---------------------------------------------------------------------------
# cliques

def count_cliques(g: Graph, r: int) -> int:
    """Number of r-cliques.  r=0 counts the empty clique once."""
    if r < 0:
        raise ValueError("clique size must be >= 0")
    if r == 0:
        return 1
    adj = g.adj

    def extend(cand: int, need: int) -> int:
        if need == 1:
            return cand.bit_count()
        total = 0
        while cand:
            if cand.bit_count() < need:
                break
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            total += extend(cand & adj[v], need - 1)
        return total

    return extend((1 << g.n) - 1, r)


def enumerate_clique_masks(g: Graph, r: int, within: int | None = None) -> Iterator[int]:
    """Yield every r-clique as a bit mask, lexicographically by sorted members."""
    if r < 0:
        raise ValueError("clique size must be >= 0")
    adj = g.adj
    start = (1 << g.n) - 1 if within is None else within

    def extend(chosen: int, cand: int, need: int) -> Iterator[int]:
        if need == 0:
            yield chosen
            return
        while cand:
            if cand.bit_count() < need:
                return
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            yield from extend(chosen | low, cand & adj[v], need - 1)

    yield from extend(0, start, r)


def enumerate_cliques(g: Graph, r: int) -> Iterator[VertexSet]:
    """Deterministic stream of all r-cliques as VertexSets."""
    for mask in enumerate_clique_masks(g, r):
        yield VertexSet(mask)


def has_clique(g: Graph, r: int, within: int | None = None) -> bool:
    """Existence test with early exit; `within` restricts the candidate set."""
    if r <= 0:
        return r == 0
    adj = g.adj

    def extend(cand: int, need: int) -> bool:
        if need == 1:
            return cand != 0
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if extend(cand & adj[v], need - 1):
                return True
        return False

    return extend((1 << g.n) - 1 if within is None else within, r)


def clique_number(g: Graph) -> int:
    w = 0
    while has_clique(g, w + 1):
        w += 1
    return w


def clique_mask_list(g: Graph, r: int, budget: int | None = None) -> list[int]:
    """Materialize all r-cliques as masks; budget guards pathological inputs."""
    out: list[int] = []
    for mask in enumerate_clique_masks(g, r):
        out.append(mask)
        if budget is not None and len(out) > budget:
            raise ResourceLimitError(
                f"more than {budget} cliques of size {r}; raise the budget to proceed"
            )
    return out


# ---------------------------------------------------------------------------
# subgraph containment (not induced): injective map carrying edges to edges

def _search_order(h: Graph, first: int) -> list[int]:
    """Pattern vertices ordered most-constrained-first, starting at `first`."""
    order = [first]
    placed = 1 << first
    while len(order) < h.n:
        best, best_key = -1, (-1, -1)
        for p in range(h.n):
            if (placed >> p) & 1:
                continue
            key = ((h.adj[p] & placed).bit_count(), h.adj[p].bit_count())
            if key > best_key:
                best, best_key = p, key
        order.append(best)
        placed |= 1 << best
    return order


def find_subgraph(
    g: Graph, h: Graph, *, pin: tuple[int, int] | None = None
) -> tuple[int, ...] | None:
    """First embedding of h into g, as a tuple mapping pattern vertex -> host.

    pin=(p, w) forces pattern vertex p onto host vertex w.  Returns None when
    no embedding exists.  Extra host edges are fine; this is plain subgraph
    containment, not induced.
    """
    if h.n > g.n:
        return None
    if h.n == 0:
        return ()
    hdeg = [h.adj[p].bit_count() for p in range(h.n)]
    gdeg = [g.adj[v].bit_count() for v in range(g.n)]
    full = (1 << g.n) - 1

    if pin is None:
        first = max(range(h.n), key=lambda p: hdeg[p])
    else:
        first = pin[0]
        if gdeg[pin[1]] < hdeg[first]:
            return None
    order = _search_order(h, first)
    # for each position, the positions of already-placed pattern neighbors
    earlier: list[list[int]] = []
    for idx, p in enumerate(order):
        earlier.append([k for k in range(idx) if (h.adj[p] >> order[k]) & 1])

    image = [0] * h.n

    def place(idx: int, used: int) -> bool:
        if idx == h.n:
            return True
        p = order[idx]
        cand = full & ~used
        for k in earlier[idx]:
            cand &= g.adj[image[order[k]]]
        need = hdeg[p]
        while cand:
            low = cand & -cand
            w = low.bit_length() - 1
            cand ^= low
            if gdeg[w] < need:
                continue
            image[p] = w
            if place(idx + 1, used | low):
                return True
        return False

    if pin is not None:
        image[first] = pin[1]
        if place(1, 1 << pin[1]):
            return tuple(image)
        return None
    if place(0, 0):
        return tuple(image)
    return None


def contains_subgraph(g: Graph, h: Graph) -> bool:
    return find_subgraph(g, h) is not None


def contains_subgraph_at(g: Graph, h: Graph, host_vertex: int) -> bool:
    """Does some embedding of h cover the given host vertex?"""
    for p in range(h.n):
        if find_subgraph(g, h, pin=(p, host_vertex)) is not None:
            return True
    return False


# small exhaustive oracle, kept next to the fast path for cross-checking
def count_cliques_by_subsets(g: Graph, r: int) -> int:
    if r == 0:
        return 1
    total = 0
    for combo in combinations(range(g.n), r):
        if all(g.has_edge(u, v) for u, v in combinations(combo, 2)):
            total += 1
    return total
