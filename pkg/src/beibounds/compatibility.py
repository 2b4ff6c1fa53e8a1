"""Machine checks for the compatibility conditions, the internal-vertex
drop lemma, the regularity recursion inequality, and the full bound
chain L <= reg <= eta <= c.

A map phi: graphs -> non-negative integers is compatible when
  (a) phi(G minus isolated vertices) <= phi(G);
  (b) phi(G) >= t when G is exactly a disjoint union of t complete
      graphs, each on at least 2 vertices;
  (c) whenever G has a non-free vertex, some vertex v satisfies
      phi(G - v) <= phi(G) and phi(G_v) < phi(G).
Any compatible map bounds the regularity of the binomial edge ideal
from above, so these checks plus the regularity oracle machine-verify
the chain on whole corpora.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import ResourceLimitError
from .graphs import Graph
from .invariants import eta, longest_induced_path, maximal_cliques
from .regularity import regularity_bei

InvariantMap = Callable[[Graph], int]


def eta_value(g: Graph) -> int:
    return eta(g)[0]


def clique_count_value(g: Graph) -> int:
    return len(maximal_cliques(g))


def induced_path_value(g: Graph) -> int:
    return longest_induced_path(g)[0]


def regularity_value(g: Graph) -> int:
    return regularity_bei(g).value


NAMED_MAPS: dict[str, InvariantMap] = {
    "eta": eta_value,
    "clique-count": clique_count_value,
    "induced-path": induced_path_value,
}


def memoized(phi: InvariantMap) -> InvariantMap:
    """Cache phi by labeled adjacency; sweeps revisit derived graphs a lot."""
    cache: dict[tuple[int, int], int] = {}

    def wrapped(g: Graph) -> int:
        k = g.key()
        if k not in cache:
            cache[k] = phi(g)
        return cache[k]

    return wrapped


@dataclass
class CompatibilityReport:
    map_name: str
    pass_a: bool
    pass_b: bool
    pass_c: bool
    witness_vertex: Optional[int] = None
    counterexample: Optional[dict] = None
    values: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.pass_a and self.pass_b and self.pass_c


def check_compatibility(phi: InvariantMap, g: Graph, name: str = "phi") -> CompatibilityReport:
    """Evaluate conditions (a), (b), (c) for one map on one graph.

    Condition (c) searches vertices in ascending order and records the
    first witness; a failing condition attaches a structured
    counterexample with the offending values.
    """
    report = CompatibilityReport(name, True, True, True)
    phi_g = phi(g)
    report.values["phi"] = phi_g

    hat = g.strip_isolated()
    phi_hat = phi(hat)
    report.values["phi_hat"] = phi_hat
    if phi_hat > phi_g:
        report.pass_a = False
        report.counterexample = {
            "condition": "a",
            "phi": phi_g,
            "phi_without_isolated": phi_hat,
        }
        return report

    sizes = g.completes_decomposition()
    if sizes is not None and sizes and min(sizes) >= 2:
        t = len(sizes)
        report.values["union_components"] = t
        if phi_g < t:
            report.pass_b = False
            report.counterexample = {"condition": "b", "phi": phi_g, "components": t}
            return report

    if g.internal_vertex_count() > 0:
        witness = None
        for v in range(g.n):
            if phi(g.minus_vertex(v)) <= phi_g and phi(g.saturate(v)) < phi_g:
                witness = v
                break
        if witness is None:
            report.pass_c = False
            report.counterexample = {
                "condition": "c",
                "phi": phi_g,
                "per_vertex": [
                    {"v": v, "phi_minus": phi(g.minus_vertex(v)), "phi_saturated": phi(g.saturate(v))}
                    for v in range(g.n)
                ],
            }
        else:
            report.witness_vertex = witness
            report.values["phi_minus_witness"] = phi(g.minus_vertex(witness))
            report.values["phi_saturated_witness"] = phi(g.saturate(witness))
    return report


def nonfree_vertex_failures(phi: InvariantMap, g: Graph) -> list[dict]:
    """Condition (c) in its strong per-vertex form.

    For every non-free v the inequalities phi(G-v) <= phi(G) and
    phi(G_v) < phi(G) must hold; returns one record per violation.
    """
    phi_g = phi(g)
    bad = []
    for v in range(g.n):
        if g.is_free_vertex(v):
            continue
        minus = phi(g.minus_vertex(v))
        sat = phi(g.saturate(v))
        if minus > phi_g or sat >= phi_g:
            bad.append({"v": v, "phi": phi_g, "phi_minus": minus, "phi_saturated": sat})
    return bad


def check_iv_lemma(g: Graph, v: int) -> bool:
    """Strict drop of the non-free vertex count at a non-free vertex:
    max(iv(G_v), iv(G-v), iv(G_v - v)) < iv(G)."""
    if g.is_free_vertex(v):
        raise ValueError(f"vertex {v} is free; the lemma applies to non-free vertices")
    gv = g.saturate(v)
    worst = max(
        gv.internal_vertex_count(),
        g.minus_vertex(v).internal_vertex_count(),
        gv.minus_vertex(v).internal_vertex_count(),
    )
    return worst < g.internal_vertex_count()


def check_regularity_recursion(
    g: Graph, v: int, reg_fn: InvariantMap = regularity_value
) -> bool:
    """reg(G) <= max(reg(G_v), reg(G-v), reg(G_v - v) + 1)."""
    gv = g.saturate(v)
    bound = max(reg_fn(gv), reg_fn(g.minus_vertex(v)), reg_fn(gv.minus_vertex(v)) + 1)
    return reg_fn(g) <= bound


def is_path_graph(g: Graph) -> bool:
    """Connected with max degree <= 2 and no cycle (includes K_1, K_2)."""
    return g.is_connected() and g.edge_count() == g.n - 1 and all(
        g.degree(v) <= 2 for v in range(g.n)
    )


@dataclass
class BoundChainReport:
    n: int
    length_sum: int
    eta: int
    clique_count: int
    reg: Optional[int] = None
    flags: dict = field(default_factory=dict)
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations


def bound_chain(
    g: Graph, with_reg: bool = True, reg_fn: InvariantMap = regularity_value
) -> BoundChainReport:
    """Exact values of L, eta, c (and reg when within reach) plus every
    inequality of the chain; resource errors degrade to a reg-less
    report rather than failing the run."""
    length_sum = longest_induced_path(g)[0]
    eta_g = eta(g)[0]
    c_g = len(maximal_cliques(g))
    reg: Optional[int] = None
    if with_reg:
        try:
            reg = reg_fn(g)
        except ResourceLimitError:
            reg = None
    report = BoundChainReport(g.n, length_sum, eta_g, c_g, reg)

    def check(name: str, lhs: int, rhs: int) -> None:
        if lhs > rhs:
            report.violations.append({"inequality": name, "lhs": lhs, "rhs": rhs})

    check("L<=eta", length_sum, eta_g)
    check("eta<=c", eta_g, c_g)
    report.flags = {
        "L=eta": length_sum == eta_g,
        "L=c": length_sum == c_g,
        "eta=c": eta_g == c_g,
    }
    if reg is not None:
        check("L<=reg", length_sum, reg)
        check("reg<=eta", reg, eta_g)
        check("reg<=n-1", reg, g.n - 1 if g.n else 0)
        if g.n and g.is_connected() and not is_path_graph(g):
            check("reg<=n-2", reg, g.n - 2)
        report.flags["reg=eta"] = reg == eta_g
        report.flags["reg=L"] = reg == length_sum
    return report
