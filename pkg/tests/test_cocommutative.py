import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfmon.lib.cocommutative import (
    acyclic_orientation_count,
    antipode_cocommutative,
    coefficient_via_orientations,
    coefficient_via_permutations,
    contraction_graph,
    enumerate_acyclic_orientations,
    flats_antipode,
    hyperforest_coefficient,
    minimal_support_partition,
    omega,
    orientation_composition,
    orientation_count,
    permutation_contributions,
    quotient_hypergraph,
    support_length_profile,
)
from hopfmon.lib.compositions import elements, full_mask, mask_of
from hopfmon.lib.errors import GuardExceededError, MonoidMismatchError
from hopfmon.lib.formal_sum import FormalSum, key_string
from hopfmon.lib.lxh import conflict_graph
from hopfmon.lib.monoids import Hypergraph, Order, element_from_data, identity_order
from hopfmon.lib.takeuchi import composition_sweep, takeuchi_antipode
from hopfmon.utils.io import composition_label
from hopfmon.validate.generators import all_elements
from strategies import graphs, hypergraphs, partitions

TWO_TRIANGLES = [[1, 2, 4], [2, 3, 4]]

A_O = [
    "(4,3,2,1)", "(3,4,2,1)", "(34,2,1)", "(3,2,4,1)",
    "(2,4,3,1)", "(23,4,1)", "(1,4,3,2)", "(3,1,4,2)",
    "(1,2,4,3)", "(1,23,4)", "(1,24,3)", "(1,34,2)",
    "(3,12,4)", "(12,4,3)", "(123,4)", "(14,3,2)",
    "(3,14,2)", "(134,2)", "(3,24,1)", "(24,3,1)",
]


def masks(*parts):
    return tuple(mask_of(v - 1 for v in part) for part in parts)


def edgeless(x):
    return type(x)(x.n, x.ground, ())


@pytest.fixture
def triangles():
    x = element_from_data("hg", TWO_TRIANGLES, 4)
    h = quotient_hypergraph(x, edgeless(x), minimal_support_partition(x, edgeless(x)))
    return x, h


def test_two_triangles_antipode(triangles):
    x, _ = triangles
    expected = FormalSum(
        [
            (x, -1),
            (element_from_data("hg", [[1, 2, 4]], 4), 2),
            (element_from_data("hg", [[2, 3, 4]], 4), 2),
            (edgeless(x), -2),
        ]
    )
    assert antipode_cocommutative(x, "orientations") == expected
    assert antipode_cocommutative(x, "permutations") == expected


def test_twenty_orientations(triangles):
    _, h = triangles
    assert h.data() == {"m": 4, "hyperedges": TWO_TRIANGLES}
    assert orientation_count(h) == 36
    acyclic = enumerate_acyclic_orientations(h)
    found = [orientation_composition(h, o) for o in acyclic]
    assert [composition_label(p) for p in found] == A_O
    assert sum(1 for p in found if len(p) % 2 == 0) == 9
    for o, parts in zip(acyclic, found):
        assert omega(h, parts) == o


def test_orientation_guard(triangles):
    _, h = triangles
    with pytest.raises(GuardExceededError):
        enumerate_acyclic_orientations(h, limit=35)


def test_omega_needs_split_hyperedges(triangles):
    _, h = triangles
    with pytest.raises(ValueError):
        omega(h, masks([1, 2, 4], [3]))


def test_permutation_contributions(triangles):
    x, h = triangles
    contributions = {tau: c for tau, c in permutation_contributions(x, edgeless(x)).items() if c}
    assert contributions == {(0, 1, 3, 2): -1, (1, 2, 3, 0): -1, (2, 0, 1, 3): -1, (3, 2, 1, 0): 1}
    assert coefficient_via_permutations(x, edgeless(x)) == -2

    # the ordering 1243 has conflict arcs 1-3 and 3-4
    hx = Hypergraph(4, full_mask(4), x.edges)
    tau = (0, 1, 3, 2)
    g = conflict_graph(identity_order(4), hx, Order(4, full_mask(4), tau), edgeless(hx), tuple(1 << t for t in tau))
    assert g.arcs == ((1, 3), (3, 4))


def test_quotient_on_five_points():
    x = element_from_data("hg", [[2, 3], [1, 2, 5], [1, 4, 5], [2, 3, 5]], 5)
    y = element_from_data("hg", [[2, 3]], 5)
    lam = minimal_support_partition(x, y, cross_check=True)
    assert lam == masks([1], [2, 3], [4], [5])
    assert quotient_hypergraph(x, y, lam).data()["hyperedges"] == [[1, 3, 4], [2, 4]]
    assert support_length_profile(x, y) == {2: 6, 3: 30, 4: 24}
    assert coefficient_via_orientations(x, y) == 0
    assert coefficient_via_permutations(x, y) == 0
    assert takeuchi_antipode(x)[y] == 0


def test_unreachable_target():
    x = element_from_data("g", [], 2)
    y = element_from_data("g", [[1, 2]], 2)
    assert minimal_support_partition(x, y) is None
    assert coefficient_via_orientations(x, y) == 0
    assert permutation_contributions(x, y) == {}


def test_minimal_partition_matches_scan():
    for monoid in ("pi", "g", "hg"):
        for n in (1, 2, 3):
            for x in all_elements(monoid, n):
                for y in composition_sweep(x):
                    assert minimal_support_partition(x, y, cross_check=True) is not None


@pytest.mark.parametrize("monoid", ["pi", "g", "hg", "sc", "hf"])
def test_methods_match_takeuchi(monoid):
    for n in (1, 2, 3, 4):
        for x in all_elements(monoid, n):
            expected = takeuchi_antipode(x)
            assert antipode_cocommutative(x, "orientations") == expected
            assert antipode_cocommutative(x, "permutations") == expected


def test_cocommutative_errors():
    alpha = identity_order(2)
    with pytest.raises(MonoidMismatchError):
        antipode_cocommutative(alpha)
    x = element_from_data("g", [[1, 2]], 2)
    with pytest.raises(ValueError):
        antipode_cocommutative(x, "flats")
    with pytest.raises(MonoidMismatchError):
        minimal_support_partition(x, element_from_data("hg", [], 2))


@pytest.mark.parametrize(
    "edges, n, expected",
    [
        ([[1, 2]], 2, 2),
        ([[1, 2]], 3, -2),
        ([[1, 2, 3]], 3, 0),
        ([[1, 2, 3, 4]], 4, 2),
        ([[1, 2], [2, 3]], 3, -4),
    ],
)
def test_hyperforest_closed_form(edges, n, expected):
    f = element_from_data("hf", edges, n)
    h = edgeless(f)
    assert hyperforest_coefficient(f, h) == expected
    assert coefficient_via_orientations(f, h) == expected


def test_hyperforest_closed_form_exhaustive():
    for n in (2, 3, 4):
        for f in all_elements("hf", n):
            for h in composition_sweep(f):
                assert hyperforest_coefficient(f, h) == coefficient_via_orientations(f, h)


def test_hyperforest_errors():
    x = element_from_data("hg", [[1, 2]], 2)
    with pytest.raises(ValueError):
        hyperforest_coefficient(x, edgeless(x))
    f = element_from_data("hf", [], 2)
    with pytest.raises(ValueError):
        hyperforest_coefficient(f, element_from_data("hf", [[1, 2]], 2))


def test_contraction_graph_and_flats():
    x = element_from_data("g", [[1, 2], [2, 3], [1, 3]], 3)
    g = contraction_graph(x, edgeless(x))
    assert nx.is_isomorphic(g, nx.complete_graph(3))
    assert acyclic_orientation_count(g) == 6
    assert contraction_graph(x, x).number_of_nodes() == 1
    with pytest.raises(ValueError):
        contraction_graph(x, element_from_data("g", [[1, 2], [2, 3]], 3))
    with pytest.raises(MonoidMismatchError):
        contraction_graph(element_from_data("hg", [], 2), element_from_data("hg", [], 2))


@pytest.mark.parametrize("monoid", ["g", "sc"])
def test_flats_match_takeuchi(monoid):
    for n in (1, 2, 3, 4):
        for x in all_elements(monoid, n):
            assert flats_antipode(x) == takeuchi_antipode(x)


def test_graph_coefficients_do_not_cancel():
    for x in all_elements("g", 4):
        for y, c in takeuchi_antipode(x).items():
            lam = minimal_support_partition(x, y)
            h = quotient_hypergraph(x, y, lam)
            sign = {-1 if len(orientation_composition(h, o)) % 2 else 1 for o in enumerate_acyclic_orientations(h)}
            assert len(sign) == 1


def _check_methods(x):
    expected = takeuchi_antipode(x)
    assert antipode_cocommutative(x, "orientations") == expected
    assert antipode_cocommutative(x, "permutations") == expected


@settings(max_examples=20, deadline=None)
@given(x=graphs(min_n=5, max_n=5))
def test_methods_match_takeuchi_on_five_vertex_graphs(x):
    _check_methods(x)


@settings(max_examples=20, deadline=None)
@given(x=partitions(min_n=5, max_n=5))
def test_methods_match_takeuchi_on_five_point_partitions(x):
    _check_methods(x)


@settings(max_examples=40, deadline=None)
@given(x=hypergraphs(min_n=2, max_n=4), data=st.data())
def test_quotient_ignores_block_order(x, data):
    targets = sorted(composition_sweep(x), key=key_string)
    y = data.draw(st.sampled_from(targets))
    lam = minimal_support_partition(x, y)
    h = quotient_hypergraph(x, y, lam)

    order = data.draw(st.permutations(range(len(lam))))
    shuffled = quotient_hypergraph(x, y, tuple(lam[i] for i in order))
    position = {old: new for new, old in enumerate(order)}
    assert shuffled.m == h.m
    assert set(shuffled.hyperedges) == {mask_of(position[i] for i in elements(e)) for e in h.hyperedges}
