import itertools

import pytest
from hypothesis import given, settings

from hopfmon.lib.nonnesting import (
    NonNestingGraph,
    c_graph_bruteforce,
    c_graph_fast,
    c_graph_fixed_points,
    enumerate_non_nested_graphs,
    is_non_nested,
    members,
    phi_step,
)
from strategies import non_nested_graphs


def _sign(split):
    return -1 if len(split) % 2 else 1


def test_is_non_nested():
    assert is_non_nested([(1, 3), (2, 4)])
    assert is_non_nested([(1, 3), (3, 5)])
    assert is_non_nested([(1, 2), (3, 4)])
    assert not is_non_nested([(1, 4), (2, 3)])
    assert not is_non_nested([(1, 3), (1, 4)])
    assert not is_non_nested([(1, 4), (2, 4)])


def test_invalid_graphs():
    with pytest.raises(ValueError):
        NonNestingGraph(4, ((1, 4), (2, 3)))
    with pytest.raises(ValueError):
        NonNestingGraph(3, ((2, 4),))
    with pytest.raises(ValueError):
        NonNestingGraph(3, ((2, 3), (1, 2)))
    with pytest.raises(ValueError):
        NonNestingGraph(0)
    assert NonNestingGraph.from_arcs(3, [(2, 3), (1, 2)]).arcs == ((1, 2), (2, 3))


@pytest.mark.parametrize(
    "m, arcs, expected",
    [
        (1, (), -1),
        (2, (), 0),
        (2, ((1, 2),), 1),
        (3, ((1, 3),), 1),
        (6, ((2, 4), (3, 5), (5, 6)), 0),
    ],
)
def test_small_values(m, arcs, expected):
    g = NonNestingGraph(m, arcs)
    assert c_graph_fast(g) == expected
    assert c_graph_bruteforce(g) == expected
    assert c_graph_fixed_points(g) == expected


def test_members():
    g = NonNestingGraph(3, ((1, 3),))
    assert sorted(members(g)) == sorted([((1, 2), (3,)), ((1,), (2, 3)), ((1,), (2,), (3,))])


def test_connectivity_and_short_arcs():
    g = NonNestingGraph(5, ((1, 2), (2, 4), (3, 5)))
    assert g.is_connected()
    assert g.short_arcs() == [1]
    assert g.restrict(2, 5).arcs == ((1, 3), (2, 4))
    assert not NonNestingGraph(4, ((1, 2), (3, 4))).is_connected()


@pytest.mark.parametrize("m", range(1, 7))
def test_fast_matches_bruteforce(m):
    for g in enumerate_non_nested_graphs(m):
        c = c_graph_fast(g)
        assert c in (-1, 0, 1)
        assert c == c_graph_bruteforce(g) == c_graph_fixed_points(g)


@pytest.mark.parametrize("m", range(1, 6))
def test_phi_is_a_sign_reversing_involution(m):
    for g in enumerate_non_nested_graphs(m):
        for split in members(g):
            image = phi_step(g, split)
            assert phi_step(g, image) == split
            if image != split:
                assert _sign(image) == -_sign(split)
                assert all(g.admits(part) for part in image)


def test_phi_rejects_non_members():
    g = NonNestingGraph(3, ((1, 2),))
    with pytest.raises(ValueError):
        phi_step(g, ((1, 2), (3,)))
    with pytest.raises(ValueError):
        phi_step(g, ((1,), (3,)))


@pytest.mark.parametrize("m", range(1, 6))
def test_enumeration_is_complete(m):
    arcs = [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)]
    expected = set()
    for bits in range(1 << len(arcs)):
        chosen = tuple(arc for i, arc in enumerate(arcs) if bits >> i & 1)
        if is_non_nested(chosen):
            expected.add(chosen)
    found = [g.arcs for g in enumerate_non_nested_graphs(m)]
    assert len(found) == len(set(found))
    assert set(found) == expected


def test_enumeration_counts():
    assert [len(list(enumerate_non_nested_graphs(m))) for m in (1, 2, 3)] == [1, 2, 5]


@settings(max_examples=50, deadline=None)
@given(g=non_nested_graphs(max_m=10))
def test_random_graphs(g):
    assert c_graph_fast(g) == c_graph_bruteforce(g)


def test_staggered_arcs_sort_both_ends():
    for g in enumerate_non_nested_graphs(5):
        rights = [b for _, b in g.arcs]
        assert rights == sorted(rights)
        assert all(x != y for x, y in itertools.combinations(rights, 2))
