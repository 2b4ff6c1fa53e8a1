"""Immutable simple graphs with exact bitset adjacency.

Vertices are labeled 0..n-1.  Adjacency is stored as one Python int per
vertex (bit u of ``adj[v]`` set iff u ~ v), so every set operation is
exact and graphs of a few hundred vertices are cheap.  All iteration
orders are ascending by vertex id, making every derived quantity
reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def edge(u: int, v: int) -> tuple[int, int]:
    """Normalize an unordered pair to (min, max)."""
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    Instances are immutable and hashable; every transformation returns a
    new graph.  ``adj[v]`` is the neighborhood of v as a bitmask.
    """

    n: int
    adj: tuple[int, ...]

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from unordered vertex pairs (duplicates collapse)."""
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge endpoint out of range: ({u}, {v}) with n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")

    # -- basic queries ------------------------------------------------

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> int:
        """Neighborhood of v as a bitmask."""
        self._check_vertex(v)
        return self.adj[v]

    def degree(self, v: int) -> int:
        return popcount(self.neighbors(v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    def is_clique(self, mask: int) -> bool:
        """True iff the vertices of ``mask`` are pairwise adjacent."""
        for v in bits(mask):
            if mask & ~(self.adj[v] | 1 << v):
                return False
        return True

    # -- transformations ----------------------------------------------

    def induced_delete(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement of ``drop``, relabeled.

        Survivors keep their relative order: new label i is the i-th
        smallest surviving old label (see :meth:`deletion_map`).
        """
        drop_mask = self._vertex_mask(drop)
        keep = [v for v in range(self.n) if not (drop_mask >> v & 1)]
        pos = {old: new for new, old in enumerate(keep)}
        adj = []
        for old in keep:
            row = 0
            for u in bits(self.adj[old] & ~drop_mask):
                row |= 1 << pos[u]
            adj.append(row)
        return Graph(len(keep), tuple(adj))

    def deletion_map(self, drop: Iterable[int]) -> list[int]:
        """new label -> old label map used by :meth:`induced_delete`."""
        drop_mask = self._vertex_mask(drop)
        return [v for v in range(self.n) if not (drop_mask >> v & 1)]

    def minus_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        return self.induced_delete((v,))

    def saturate(self, v: int) -> "Graph":
        """Complete the neighborhood of v into a clique; keep all edges."""
        self._check_vertex(v)
        nbr = self.adj[v]
        adj = list(self.adj)
        for u in bits(nbr):
            adj[u] |= nbr & ~(1 << u)
        return Graph(self.n, tuple(adj))

    def strip_isolated(self) -> "Graph":
        return self.induced_delete(self.isolated_vertices())

    # -- vertex predicates and counts ----------------------------------

    def is_free_vertex(self, v: int) -> bool:
        """True iff N(v) induces a complete graph (vacuously for deg <= 1)."""
        return self.is_clique(self.neighbors(v))

    def internal_vertex_count(self) -> int:
        """Number of non-free vertices."""
        return sum(1 for v in range(self.n) if not self.is_free_vertex(v))

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if not self.adj[v]]

    # -- components -----------------------------------------------------

    def component_masks(self) -> list[int]:
        """Connected components as bitmasks, ordered by smallest vertex."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = 1 << v
            while frontier:
                grown = comp
                for u in bits(frontier):
                    grown |= self.adj[u]
                frontier = grown & ~comp
                comp = grown
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1

    def cut_signature(self, cut: Iterable[int]) -> list[tuple[int, ...]]:
        """Vertex sets of the components of G - cut, in original labels.

        Ordered by smallest contained vertex; the length is the component
        count of the cut.
        """
        cut_mask = self._vertex_mask(cut)
        remaining = self.induced_delete(bits(cut_mask))
        back = self.deletion_map(bits(cut_mask))
        return [tuple(back[u] for u in bits(m)) for m in remaining.component_masks()]

    def completes_decomposition(self) -> list[int] | None:
        """Component sizes if every component is complete, else None."""
        sizes = []
        for mask in self.component_masks():
            if not self.is_clique(mask):
                return None
            sizes.append(popcount(mask))
        return sizes

    def _vertex_mask(self, vs: Iterable[int]) -> int:
        mask = 0
        for v in vs:
            self._check_vertex(v)
            mask |= 1 << v
        return mask

    def key(self) -> tuple[int, int]:
        """(n, packed upper-triangle edge bits); canonical for labeled graphs."""
        mask = 0
        k = 0
        for v in range(1, self.n):
            for u in range(v):
                if self.adj[u] >> v & 1:
                    mask |= 1 << k
                k += 1
        return self.n, mask
