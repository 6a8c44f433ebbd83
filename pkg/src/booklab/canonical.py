"""Canonical labeling by ordered-partition refinement with backtracking.

The canonical key is the lexicographically smallest upper-triangle
adjacency bit string (column-major, the graph6 bit order) over all vertex
orderings the refinement tree reaches.  Two graphs get equal keys exactly
when they are isomorphic: the key fixes the whole adjacency matrix, and the
refinement steps are label-independent, so isomorphic graphs explore the
same tree up to relabeling.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, _bits


@dataclass(frozen=True)
class CanonicalForm:
    """Hashable isomorphism-class fingerprint: vertex count plus packed key."""

    n: int
    key: bytes

    def to_graph(self) -> Graph:
        """Rebuild the canonical representative the key encodes."""
        n = self.n
        nbits = n * (n - 1) // 2
        total = int.from_bytes(self.key, "big")
        pad = (-nbits) % 8
        total >>= pad
        rows = [0] * n
        k = nbits
        for j in range(1, n):
            for i in range(j):
                k -= 1
                if (total >> k) & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
        return Graph(n, tuple(rows))


def _refine(adj: tuple[int, ...], cells: list[int]) -> list[int]:
    """Split cells by neighbor counts toward every cell until stable.

    Cells are vertex bit masks in a significant order; sub-cells are ordered
    by their count signatures, so the outcome is label-independent.
    """
    while True:
        sigs: dict[int, tuple[int, ...]] = {}
        for c in cells:
            if c.bit_count() == 1:
                continue
            for v in _bits(c):
                sigs[v] = tuple((adj[v] & c2).bit_count() for c2 in cells)
        new_cells: list[int] = []
        changed = False
        for c in cells:
            if c.bit_count() == 1:
                new_cells.append(c)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in _bits(c):
                groups.setdefault(sigs[v], 0)
                groups[sigs[v]] |= 1 << v
            if len(groups) == 1:
                new_cells.append(c)
            else:
                changed = True
                for sig in sorted(groups):
                    new_cells.append(groups[sig])
        cells = new_cells
        if not changed:
            return cells


def _twin_representatives(adj: tuple[int, ...], cell: int) -> list[int]:
    """One vertex per twin class of the cell; swapping twins is an automorphism."""
    reps: list[int] = []
    for v in _bits(cell):
        vb = 1 << v
        for u in reps:
            if (adj[u] ^ adj[v]) & ~((1 << u) | vb) == 0:
                break
        else:
            reps.append(v)
    return reps


def _encode(adj: tuple[int, ...], perm: list[int], n: int) -> int:
    """Column-major upper-triangle bits of the relabeled graph, first bit highest."""
    key = 0
    for j in range(1, n):
        pj = perm[j]
        for i in range(j):
            key = (key << 1) | ((adj[perm[i]] >> pj) & 1)
    return key


def canonical_form(g: Graph) -> CanonicalForm:
    n = g.n
    nbits = n * (n - 1) // 2
    if n <= 1:
        return CanonicalForm(n, b"")
    adj = g.adj
    best: int | None = None

    def descend(cells: list[int]) -> None:
        nonlocal best
        for idx, c in enumerate(cells):
            if c.bit_count() > 1:
                break
        else:
            perm = [c.bit_length() - 1 for c in cells]
            key = _encode(adj, perm, n)
            if best is None or key < best:
                best = key
            return
        for v in _twin_representatives(adj, c):
            vb = 1 << v
            descend(_refine(adj, cells[:idx] + [vb, c ^ vb] + cells[idx + 1 :]))

    descend(_refine(adj, [(1 << n) - 1]))
    assert best is not None
    pad = (-nbits) % 8
    return CanonicalForm(n, (best << pad).to_bytes((nbits + pad) // 8, "big"))
