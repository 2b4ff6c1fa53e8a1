"""Exact graph invariants: maximal-clique count, clique-disjoint edge
sets (eta), longest induced paths, and the constructive one-step
extension that grows a clique-disjoint set of the saturated graph G_v
into a strictly larger one of G.

Two edges "conflict" when their endpoint union induces a complete
subgraph; a clique-disjoint edge set is an independent set of the
conflict graph, so eta is computed by an exact branch-and-bound maximum
independent set solver with degree-1 reductions and component splitting.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import ResourceLimitError
from .graphs import Graph, bits, edge, popcount

DEFAULT_NODE_LIMIT = 5_000_000


# -- maximal cliques ----------------------------------------------------


def maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    """All maximal cliques (isolated vertices count, as 1-cliques).

    Bron-Kerbosch with max-intersection pivoting; output sorted by
    vertex tuple, so the count and order are reproducible.
    """
    out: list[tuple[int, ...]] = []
    adj = g.adj

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.append(tuple(bits(r)))
            return
        pivot = -1
        best = -1
        for u in bits(p | x):
            score = popcount(adj[u] & p)
            if score > best:
                best, pivot = score, u
        for v in bits(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    if g.n:
        expand(0, g.full_mask(), 0)
    return sorted(out)


def clique_count(g: Graph) -> int:
    return len(maximal_cliques(g))


# -- edge conflict relation ---------------------------------------------


def in_common_clique(g: Graph, e: tuple[int, int], f: tuple[int, int]) -> bool:
    """True iff some clique of g contains both edges.

    Equivalent to the endpoint union inducing a complete subgraph
    (any complete subgraph extends to a maximal clique).
    """
    e = _require_edge(g, e)
    f = _require_edge(g, f)
    mask = 1 << e[0] | 1 << e[1] | 1 << f[0] | 1 << f[1]
    return g.is_clique(mask)


def _require_edge(g: Graph, e: tuple[int, int]) -> tuple[int, int]:
    u, v = edge(*e)
    if not g.has_edge(u, v):
        raise ValueError(f"({u}, {v}) is not an edge of the graph")
    return u, v


@dataclass(frozen=True)
class ConflictGraph:
    """Edges of a source graph, adjacent iff they share a clique."""

    edge_index: tuple[tuple[int, int], ...]
    adj: tuple[int, ...]

    def n(self) -> int:
        return len(self.edge_index)


def conflict_graph(g: Graph) -> ConflictGraph:
    es = g.edges()
    masks = [1 << u | 1 << v for u, v in es]
    adj = [0] * len(es)
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if g.is_clique(masks[i] | masks[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return ConflictGraph(tuple(es), tuple(adj))


# -- exact maximum independent set ---------------------------------------


class _MisSolver:
    """Exact MIS by branch and bound with memoization.

    Reductions: vertices of degree <= 1 always join some optimum, so
    they are committed greedily.  Components are solved independently.
    Branching picks the max-degree vertex (smallest index on ties), the
    include branch winning ties, so witnesses are deterministic.
    """

    def __init__(self, adj: Sequence[int], node_limit: int):
        self.adj = adj
        self.node_limit = node_limit
        self.nodes = 0
        self.memo: dict[int, tuple[int, int]] = {}

    def solve(self, mask: int) -> tuple[int, int]:
        cached = self.memo.get(mask)
        if cached is not None:
            return cached
        self.nodes += 1
        if self.nodes > self.node_limit:
            raise ResourceLimitError(
                f"independent-set search exceeded {self.node_limit} nodes"
            )
        adj = self.adj
        taken_size = 0
        taken_mask = 0
        m = mask
        changed = True
        while changed:
            changed = False
            for v in bits(m):
                if not (m >> v & 1):
                    continue
                nb = adj[v] & m
                if popcount(nb) <= 1:
                    taken_size += 1
                    taken_mask |= 1 << v
                    m &= ~(nb | 1 << v)
                    changed = True
        if m:
            comps = self._components(m)
            if len(comps) > 1:
                for comp in comps:
                    s, w = self.solve(comp)
                    taken_size += s
                    taken_mask |= w
            else:
                v = max(bits(m), key=lambda u: (popcount(adj[u] & m), -u))
                s_in, w_in = self.solve(m & ~(adj[v] | 1 << v))
                s_out, w_out = self.solve(m & ~(1 << v))
                if s_in + 1 >= s_out:
                    taken_size += s_in + 1
                    taken_mask |= w_in | 1 << v
                else:
                    taken_size += s_out
                    taken_mask |= w_out
        self.memo[mask] = (taken_size, taken_mask)
        return taken_size, taken_mask

    def _components(self, mask: int) -> list[int]:
        comps = []
        left = mask
        while left:
            v = (left & -left).bit_length() - 1
            comp = 1 << v
            frontier = comp
            while frontier:
                grown = comp
                for u in bits(frontier):
                    grown |= self.adj[u] & mask
                frontier = grown & ~comp
                comp = grown
            comps.append(comp)
            left &= ~comp
        return comps


def max_independent_set(
    adj: Sequence[int], node_limit: int = DEFAULT_NODE_LIMIT
) -> tuple[int, int]:
    """Exact maximum independent set of a bitset-adjacency graph.

    Returns (size, member bitmask).  Raises ResourceLimitError past the
    node budget; never returns an approximate answer.
    """
    solver = _MisSolver(adj, node_limit)
    return solver.solve((1 << len(adj)) - 1)


# -- eta ------------------------------------------------------------------


@dataclass(frozen=True)
class CliqueDisjointSet:
    """An edge set of ``graph`` in which no two edges share a clique."""

    graph: Graph
    edges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


def is_clique_disjoint(g: Graph, edges: Iterable[tuple[int, int]]) -> bool:
    """Check that all pairs of (distinct) edges avoid common cliques."""
    es = [_require_edge(g, e) for e in edges]
    for i in range(len(es)):
        for j in range(i + 1, len(es)):
            if in_common_clique(g, es[i], es[j]):
                return False
    return True


@lru_cache(maxsize=None)
def _eta_cached(g: Graph, node_limit: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    cg = conflict_graph(g)
    size, mask = _MisSolver(cg.adj, node_limit).solve((1 << cg.n()) - 1)
    return size, tuple(cg.edge_index[i] for i in bits(mask))


def eta(g: Graph, node_limit: int = DEFAULT_NODE_LIMIT) -> tuple[int, CliqueDisjointSet]:
    """Maximum size of a clique-disjoint edge set, with one witness."""
    size, witness = _eta_cached(g, node_limit)
    return size, CliqueDisjointSet(g, frozenset(witness))


# -- longest induced paths -------------------------------------------------


def longest_induced_path(g: Graph) -> tuple[int, list[list[int]]]:
    """Sum over components of the longest induced path length.

    Length is the edge count; a single-vertex component contributes 0.
    Returns the sum and one witness path per component (ordered by the
    component's smallest vertex).
    """
    total = 0
    witnesses = []
    for comp in g.component_masks():
        length, path = _component_lip(g, comp)
        total += length
        witnesses.append(path)
    return total, witnesses


def _component_lip(g: Graph, comp: int) -> tuple[int, list[int]]:
    adj = g.adj
    best_len = 0
    best_path = [next(bits(comp))]

    def extend(last: int, avail: int, path: list[int]) -> None:
        nonlocal best_len, best_path
        # every future vertex comes from avail, adding one edge each
        if len(path) - 1 + popcount(avail) <= best_len:
            return
        for u in bits(avail & adj[last]):
            path.append(u)
            if len(path) - 1 > best_len:
                best_len = len(path) - 1
                best_path = list(path)
            extend(u, avail & ~adj[last] & ~(1 << u), path)
            path.pop()

    for start in bits(comp):
        extend(start, comp & ~(1 << start), [start])
    return best_len, best_path


# -- constructive extension (saturated graph -> original graph) -----------


def least_nonadjacent_pair(g: Graph, v: int) -> tuple[int, int]:
    """Lexicographically least non-adjacent pair inside N(v).

    Exists exactly when v is non-free; raises ValueError otherwise.
    """
    nbr = list(bits(g.neighbors(v)))
    for i in range(len(nbr)):
        for j in range(i + 1, len(nbr)):
            if not g.has_edge(nbr[i], nbr[j]):
                return nbr[i], nbr[j]
    raise ValueError(f"vertex {v} is free: its neighborhood is complete")


def extend_clique_disjoint(
    g: Graph, v: int, h: CliqueDisjointSet | Iterable[tuple[int, int]]
) -> CliqueDisjointSet:
    """Turn a clique-disjoint set of G_v into a strictly larger one of G.

    ``h`` must be clique-disjoint in G_v = g.saturate(v) and v must be
    non-free in g.  The output is clique-disjoint in g and has exactly
    one more edge, built by case analysis on how ``h`` meets v:

    * some member covers v: drop it, add {v,a} and {v,b} for the least
      non-adjacent pair a, b in N(v);
    * v uncovered and some member is a fill-in edge (absent from g):
      replace that member by the two edges joining v to its endpoints;
    * v uncovered and all members are edges of g: add {v,a} or {v,b}
      if one of them conflicts with nothing, else swap the unique
      conflicting member for both.
    """
    if g.is_free_vertex(v):
        raise ValueError(f"vertex {v} is free; extension requires a non-free vertex")
    gv = g.saturate(v)
    members = sorted(edge(*e) for e in (h.edges if isinstance(h, CliqueDisjointSet) else h))
    if len(set(members)) != len(members):
        raise ValueError("input edge set contains duplicates")
    if not is_clique_disjoint(gv, members):
        raise ValueError("input is not clique-disjoint in the saturated graph")

    covering = [e for e in members if v in e]
    if covering:
        # v lies in exactly one member, and every other member is a g-edge
        e1 = covering[0]
        a, b = least_nonadjacent_pair(g, v)
        rest = [e for e in members if e != e1]
        result = rest + [edge(v, a), edge(v, b)]
    else:
        fill_ins = [e for e in members if not g.has_edge(*e)]
        if fill_ins:
            u, w = fill_ins[0]
            rest = [e for e in members if e != fill_ins[0]]
            result = rest + [edge(v, u), edge(v, w)]
        else:
            a, b = least_nonadjacent_pair(g, v)
            conf_a = [e for e in members if in_common_clique(g, e, (v, a))]
            conf_b = [e for e in members if in_common_clique(g, e, (v, b))]
            if not conf_a:
                result = members + [edge(v, a)]
            elif not conf_b:
                result = members + [edge(v, b)]
            else:
                # the conflicting member is unique and shared by both
                drop = conf_a[0]
                rest = [e for e in members if e != drop]
                result = rest + [edge(v, a), edge(v, b)]

    out = frozenset(result)
    try:
        valid = len(out) == len(members) + 1 and is_clique_disjoint(g, out)
    except ValueError:
        valid = False
    if not valid:
        raise AssertionError("extension construction produced an invalid set")
    return CliqueDisjointSet(g, out)
