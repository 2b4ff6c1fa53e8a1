from itertools import combinations

import pytest

from beibounds.errors import FieldDisagreementError, ResourceLimitError
from beibounds.generators import all_labeled, complete, cycle, fig2_closed, net, path, sierpinski, union, with_injected_isolates
from beibounds.graphs import Graph
from beibounds.regularity import (
    SquarefreeIdeal,
    homology_dims,
    initial_ideal,
    label_valid_path_monomials,
    minimalize,
    regularity_bei,
    regularity_squarefree,
    require_field_agreement,
)


def supports(ideal):
    return set(ideal.supports())


# -- initial ideal -----------------------------------------------------------

def test_initial_ideal_p3_keeps_only_edge_monomials():
    # the length-2 path is label-invalid: its interior lies between the ends
    n = 3
    ideal = initial_ideal(path(3))
    assert supports(ideal) == {(0, n + 1), (1, n + 2)}


def test_initial_ideal_k3_is_edge_generated():
    n = 3
    ideal = initial_ideal(complete(3))
    assert supports(ideal) == {(0, n + 1), (0, n + 2), (1, n + 2)}


def test_initial_ideal_k2():
    assert supports(initial_ideal(complete(2))) == {(0, 3)}


def test_initial_ideal_c4_has_two_path_monomials():
    n = 4
    ideal = initial_ideal(cycle(4))
    assert supports(ideal) == {
        (0, n + 1), (1, n + 2), (2, n + 3), (0, n + 3),
        (0, 3, n + 2),       # 0-3-2: interior 3 > 2, contributes x3
        (1, n + 0, n + 3),   # 1-0-3: interior 0 < 1, contributes y0
    }


def test_initial_ideal_cap():
    with pytest.raises(ResourceLimitError):
        initial_ideal(path(9))


def test_minimalize_is_an_antichain():
    gens = minimalize([0b011, 0b111, 0b110, 0b011])
    assert gens == (0b011, 0b110)


def test_every_path_monomial_is_divisible_by_a_minimal_generator():
    # adding non-minimal label-valid path monomials never changes the ideal
    for g in [cycle(4), cycle(5), net(), fig2_closed(), complete(5)]:
        ideal = initial_ideal(g)
        for mono in label_valid_path_monomials(g):
            assert any(gen & mono == gen for gen in ideal.gens)


# -- homology of induced subcomplexes ----------------------------------------

def test_two_points_have_reduced_h0():
    ideal = SquarefreeIdeal.from_supports(4, [(0, 1)])
    dims = homology_dims(ideal, [0, 1], 2)
    assert dims[0] == 1 and dims[-1] == 0


def test_empty_subset_reports_degree_minus_one():
    ideal = SquarefreeIdeal.from_supports(4, [(0, 1)])
    assert homology_dims(ideal, [], 2) == {-1: 1}


def test_cone_subsets_are_acyclic():
    ideal = SquarefreeIdeal.from_supports(4, [(0, 1)])
    dims = homology_dims(ideal, [0, 1, 2], 3)  # 2 lies in no generator: cone apex
    assert all(d == 0 for d in dims.values())


def test_hollow_triangle_is_a_circle():
    ideal = SquarefreeIdeal.from_supports(3, [(0, 1, 2)])
    dims = homology_dims(ideal, [0, 1, 2], 2)
    assert dims[1] == 1 and dims[0] == 0


# 6-vertex triangulation of the real projective plane: complete 1-skeleton,
# ten triangles, every edge in exactly two of them.  Its homology separates
# GF(2) from GF(3), which exercises boundary signs end to end.
_RP2_FACES = [
    (0, 1, 2), (0, 1, 3), (0, 2, 4), (0, 3, 5), (0, 4, 5),
    (1, 2, 5), (1, 3, 4), (1, 4, 5), (2, 3, 4), (2, 3, 5),
]
_RP2_NONFACES = [t for t in combinations(range(6), 3) if t not in _RP2_FACES]


def test_projective_plane_homology_depends_on_characteristic():
    ideal = SquarefreeIdeal.from_supports(6, _RP2_NONFACES)
    gf2 = homology_dims(ideal, range(6), 2)
    gf3 = homology_dims(ideal, range(6), 3)
    assert gf2[1] == 1 and gf2[2] == 1
    assert gf3[1] == 0 and gf3[2] == 0


def test_homology_rejects_non_prime():
    ideal = SquarefreeIdeal.from_supports(4, [(0, 1)])
    with pytest.raises(ValueError):
        homology_dims(ideal, [0, 1], 4)


# -- regularity of squarefree ideals ------------------------------------------

def test_single_quadric_has_regularity_one():
    ideal = SquarefreeIdeal.from_supports(4, [(0, 2)])
    assert regularity_squarefree(ideal, 2).value == 1


def test_two_disjoint_quadrics_regularity_two():
    # complete intersection of two quadrics in disjoint variables
    ideal = SquarefreeIdeal.from_supports(6, [(0, 3), (1, 4)])
    res = regularity_squarefree(ideal, 2)
    assert res.value == 2
    assert res.witness_degree == 1


def test_zero_ideal_regularity_zero():
    ideal = SquarefreeIdeal(6, ())
    res = regularity_squarefree(ideal, 3)
    assert res.value == 0
    assert res.witness_vars == frozenset() and res.witness_degree == -1


def test_regularity_differs_across_fields_on_rp2():
    ideal = SquarefreeIdeal.from_supports(6, _RP2_NONFACES)
    assert regularity_squarefree(ideal, 2).value == 3
    assert regularity_squarefree(ideal, 3).value == 2


def test_require_field_agreement_raises_with_both_values():
    with pytest.raises(FieldDisagreementError) as err:
        require_field_agreement({2: 3, 3: 2})
    assert err.value.values_by_prime == {2: 3, 3: 2}
    require_field_agreement({2: 4, 3: 4})  # no raise


def test_var_cap_enforced():
    ideal = SquarefreeIdeal(18, (0b11,))
    with pytest.raises(ResourceLimitError):
        regularity_squarefree(ideal, 2)


# -- regularity of binomial edge ideals ---------------------------------------

@pytest.mark.parametrize(
    "g, want",
    [
        (net(), 4),
        (fig2_closed(), 3),
        (sierpinski(1), 3),
        (cycle(4), 2),
        (complete(4), 1),
        (union([complete(3), complete(2)]), 2),
        (union([complete(2), complete(2), complete(3)]), 3),
        (Graph.from_edge_list(3, []), 0),
    ],
)
def test_regularity_named_values(g, want):
    res = regularity_bei(g)
    assert res.value == want
    assert res.fields_used == (2, 3) and res.agreement


@pytest.mark.parametrize("n", range(2, 8))
def test_path_regularity_is_n_minus_one(n):
    # forced by the sandwich L(P_n) = eta(P_n) = n-1
    assert regularity_bei(path(n)).value == n - 1


def test_fig2_vertex_deletions_all_have_regularity_three():
    g = fig2_closed()
    assert all(regularity_bei(g.minus_vertex(v)).value == 3 for v in range(6))


def test_regularity_ignores_isolated_vertices():
    g = net()
    padded = with_injected_isolates(g, [0, 3, 6])
    assert regularity_bei(padded).value == regularity_bei(g).value == 4


def test_witness_is_reproducible():
    for g in [net(), fig2_closed(), cycle(5), path(6), union([complete(3), complete(2)])]:
        res = regularity_bei(g)
        ideal = initial_ideal(g)
        for p in res.fields_used:
            dims = homology_dims(ideal, res.witness_vars, p)
            assert dims[res.witness_degree] > 0


def test_component_sum_matches_direct_scan_on_disconnected_graphs():
    checked = 0
    for g in all_labeled(4):
        if g.is_connected():
            continue
        direct = regularity_squarefree(initial_ideal(g), 2).value
        assert regularity_bei(g).value == direct
        checked += 1
    assert checked > 0


def test_component_cap_allows_large_unions():
    g = union([complete(4)] * 4)  # 16 vertices, components within cap
    assert regularity_bei(g).value == 4


def test_component_cap_enforced():
    with pytest.raises(ResourceLimitError):
        regularity_bei(path(9))


def test_cap_override_warns_loudly():
    with pytest.warns(RuntimeWarning):
        assert regularity_bei(path(9), component_cap=9).value == 8
