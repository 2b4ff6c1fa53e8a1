"""Growth of the clique-count/eta gap along the triforce family.

Level k subdivides every triangle of level k-1 at its side midpoints,
so the maximal clique count is exactly 4^k while eta grows by at most a
factor 3 per subdivided triangle (every clique-disjoint set restricted
to one triforce copy has at most 3 edges).  The gap c - eta therefore
diverges; this prints the exact numbers at desk scale.
"""

from beibounds import eta, maximal_cliques
from beibounds.generators import sierpinski

if __name__ == "__main__":
    print(f"{'k':>2} {'n':>4} {'m':>4} {'c':>4} {'eta':>4} {'3*4^(k-1)':>9} {'gap':>4}")
    for k in range(1, 4):
        g = sierpinski(k)
        c = len(maximal_cliques(g))
        e = eta(g)[0]
        bound = 3 * 4 ** (k - 1)
        assert c == 4 ** k and e <= bound
        print(f"{k:>2} {g.n:>4} {g.edge_count():>4} {c:>4} {e:>4} {bound:>9} {c - e:>4}")
    g = sierpinski(4)
    print(f" 4 {g.n:>4} {g.edge_count():>4} {len(maximal_cliques(g)):>4}  (eta at this size left to the patient)")
