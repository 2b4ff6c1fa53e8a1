"""The one-step extension from a saturated graph back to the original.

Saturating a non-free vertex v (completing its neighborhood) always
strictly lowers eta.  The constructive proof of that fact is an
algorithm: given any clique-disjoint set H of G_v it produces a
clique-disjoint set of G with one more edge.  This demo runs the three
cases on small graphs and shows the produced sets.
"""

from beibounds import eta, extend_clique_disjoint, is_clique_disjoint
from beibounds.generators import cycle, net, path


def demo(name, g, v, h):
    gv = g.saturate(v)
    assert is_clique_disjoint(gv, h)
    out = extend_clique_disjoint(g, v, h)
    print(f"{name}: v={v}, H in G_v = {sorted(h)}")
    print(f"  extended to {out.sorted_edges()}  (size {len(h)} -> {len(out)})")
    print()


if __name__ == "__main__":
    # fill-in case: the chord {1,3} of the saturated C4 is not an edge of C4
    demo("C4, chord swap", cycle(4), 0, [(1, 3)])

    # covered case: a member of H touches v itself
    demo("P3, covered vertex", path(3), 1, [(0, 1)])

    # start from an optimal set of the saturated graph and grow it
    g = net()
    size, h = eta(g.saturate(0))
    demo(f"net, from an optimum of G_0 (eta={size})", g, 0, h.edges)

    print("eta along saturation:", eta(net())[0], "->", eta(net().saturate(0))[0])
