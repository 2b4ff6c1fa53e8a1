"""Independent brute-force oracles used to freeze expected values.

Everything here recomputes invariants from first principles (subset and
permutation enumeration over explicit edge sets), sharing no code with
the solvers under test beyond the Graph container itself.
"""

from itertools import combinations, permutations

from beibounds.graphs import Graph


def is_complete_subset(g: Graph, vs) -> bool:
    return all(g.has_edge(u, v) for u, v in combinations(sorted(set(vs)), 2))


def brute_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    cliques = []
    for size in range(1, g.n + 1):
        for vs in combinations(range(g.n), size):
            if is_complete_subset(g, vs):
                cliques.append(set(vs))
    maximal = [c for c in cliques if not any(c < d for d in cliques)]
    return sorted(tuple(sorted(c)) for c in maximal)


def brute_common_clique(g: Graph, e, f) -> bool:
    return is_complete_subset(g, set(e) | set(f))


def brute_eta(g: Graph) -> int:
    es = g.edges()
    best = 0
    for mask in range(1 << len(es)):
        chosen = [es[i] for i in range(len(es)) if mask >> i & 1]
        if all(
            not brute_common_clique(g, a, b) for a, b in combinations(chosen, 2)
        ):
            best = max(best, len(chosen))
    return best


def brute_longest_induced_path(g: Graph) -> int:
    """Sum over components of the max induced path length (edge count)."""
    total = 0
    for comp in g.component_masks():
        vs = [v for v in range(g.n) if comp >> v & 1]
        best = 0
        for size in range(1, len(vs) + 1):
            for seq in permutations(vs, size):
                ok = True
                for i in range(size):
                    for j in range(i + 1, size):
                        adjacent = g.has_edge(seq[i], seq[j])
                        if adjacent != (j == i + 1):
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    best = max(best, size - 1)
        total += best
    return total


def brute_free_vertex(g: Graph, v: int) -> bool:
    nbrs = [u for u in range(g.n) if g.has_edge(u, v)]
    return is_complete_subset(g, nbrs)


def brute_iv(g: Graph) -> int:
    return sum(1 for v in range(g.n) if not brute_free_vertex(g, v))
