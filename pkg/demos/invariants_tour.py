"""Tour of the exact invariants on the package's named graphs.

For each graph we print the vertex/edge counts, the number of non-free
vertices iv, the longest-induced-path sum L, the clique-disjoint number
eta with a witness edge set, and the maximal clique count c.  The
interesting part is how the four quantities separate: the net graph has
eta = c with L strictly below, the closed 6-vertex graph has L strictly
below eta, and the triforce has eta strictly below c.
"""

from beibounds import eta, longest_induced_path, maximal_cliques
from beibounds.generators import complete, fig2_closed, net, path, sierpinski, union


def show(name, g):
    e, witness = eta(g)
    length, paths = longest_induced_path(g)
    cliques = maximal_cliques(g)
    print(f"{name}: n={g.n} m={g.edge_count()} iv={g.internal_vertex_count()}")
    print(f"  L   = {length}   witness paths {paths}")
    print(f"  eta = {e}   witness edges {witness.sorted_edges()}")
    print(f"  c   = {len(cliques)}   maximal cliques {cliques}")
    print()


if __name__ == "__main__":
    show("net (triangle with three pendants)", net())
    show("closed 6-vertex graph", fig2_closed())
    show("triforce", sierpinski(1))
    show("path P6", path(6))
    show("K4 + K3 + K2 disjoint union", union([complete(4), complete(3), complete(2)]))
