import itertools

import pytest
from hypothesis import given, settings

from hopfmon.lib.compositions import full_mask, mask_of
from hopfmon.lib.errors import MonoidMismatchError
from hopfmon.lib.formal_sum import FormalSum
from hopfmon.lib.lxh import (
    antipode_lxh,
    coefficient_lxh,
    conflict_graph,
    d_count,
    kh_antipode,
    minimal_lambda,
    pr_antipode,
)
from hopfmon.lib.monoids import HadamardPair, Order, element_from_data, identity_order
from hopfmon.lib.takeuchi import kh_antipode_takeuchi, takeuchi_antipode
from hopfmon.validate.generators import all_elements, all_orders
from strategies import graphs, hypergraphs, orders


def masks(*parts):
    return tuple(mask_of(v - 1 for v in part) for part in parts)


def test_conflict_graph_on_eight_points():
    alpha = identity_order(8)
    x = element_from_data("g", [[1, 3], [2, 7], [6, 8], [5, 7], [2, 5], [2, 4]], 8)
    y = element_from_data("g", [[2, 5], [2, 4]], 8)
    beta = element_from_data("l", [1, 2, 4, 5, 6, 7, 8, 3], 8)

    lam = minimal_lambda(alpha, x, beta, y)
    assert lam == masks([1], [2, 4, 5], [6], [7], [8], [3])
    assert conflict_graph(alpha, x, beta, y, lam).arcs == ((2, 4), (3, 5), (5, 6))
    assert coefficient_lxh(alpha, x, beta, y) == 0


def test_conflict_graph_needs_a_valid_lambda():
    alpha = identity_order(2)
    x = element_from_data("g", [[1, 2]], 2)
    with pytest.raises(ValueError):
        conflict_graph(alpha, x, alpha, x, masks([1], [2]))


def test_unreachable_target():
    e12 = identity_order(2)
    e21 = element_from_data("l", [2, 1], 2)
    assert minimal_lambda(e12, e12, e12, e21) is None
    assert coefficient_lxh(e12, e12, e12, e21) == 0


def test_mismatched_monoids():
    alpha = identity_order(2)
    with pytest.raises(MonoidMismatchError):
        minimal_lambda(alpha, element_from_data("g", [], 2), alpha, element_from_data("hg", [], 2))


def test_l_times_l():
    e12 = identity_order(2)
    e21 = element_from_data("l", [2, 1], 2)
    assert antipode_lxh(e12, e12) == FormalSum({HadamardPair.of(e21, e21): 1})


@pytest.mark.parametrize("inner", ["l", "pi", "g", "hg", "sc", "hf"])
def test_lxh_matches_takeuchi(inner):
    for n in (1, 2, 3) if inner == "hg" else (1, 2, 3, 4):
        for alpha, x in itertools.product(all_orders(n), list(all_elements(inner, n))):
            s = antipode_lxh(alpha, x)
            assert s == takeuchi_antipode(HadamardPair.of(alpha, x))
            assert set(s.values()) <= {-1, 1}


@settings(max_examples=25, deadline=None)
@given(alpha=orders(min_n=4, max_n=4), x=graphs(min_n=4, max_n=4))
def test_lxg_random(alpha, x):
    assert antipode_lxh(alpha, x) == takeuchi_antipode(HadamardPair.of(alpha, x))


@settings(max_examples=25, deadline=None)
@given(alpha=orders(min_n=4, max_n=4), x=hypergraphs(min_n=4, max_n=4))
def test_lxhg_random(alpha, x):
    s = antipode_lxh(alpha, x)
    assert s == takeuchi_antipode(HadamardPair.of(alpha, x))
    assert set(s.values()) <= {-1, 1}


def test_d_counts():
    assert d_count((1, 0), (0, 1)) == 2
    assert d_count((1, 0), (1, 0)) == 1
    assert d_count((0,), (0,)) == 1
    with pytest.raises(ValueError):
        d_count((0, 1), (0, 0))


def test_pr_small():
    e12 = identity_order(2)
    e21 = element_from_data("l", [2, 1], 2)
    assert pr_antipode(e12) == FormalSum({e12: 1})
    assert pr_antipode(e21) == FormalSum({e12: 2, e21: -1})
    with pytest.raises(ValueError):
        pr_antipode(Order(3, 0b011, (1, 0)))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_pr_matches_takeuchi(n):
    for alpha in all_orders(n):
        assert pr_antipode(alpha) == kh_antipode_takeuchi(alpha)


@pytest.mark.parametrize("inner", ["l", "pi", "g"])
def test_kh_methods_agree(inner):
    for n in (1, 2, 3, 4):
        for x in all_elements(inner, n):
            assert kh_antipode(x, "lxh") == kh_antipode(x, "takeuchi")


def test_kh_partition_expansion():
    x = element_from_data("pi", [[1, 3], [2]], 3)
    expected = FormalSum(
        {
            x: -1,
            element_from_data("pi", [[1, 2], [3]], 3): 1,
            element_from_data("pi", [[1], [2, 3]], 3): 1,
        }
    )
    assert kh_antipode(x, "lxh") == expected
    assert kh_antipode(x, "takeuchi") == expected


def test_kh_errors():
    x = element_from_data("g", [[1, 2]], 2)
    with pytest.raises(MonoidMismatchError):
        kh_antipode(x, "pr")
    with pytest.raises(ValueError):
        kh_antipode(x, "flats")
    with pytest.raises(ValueError):
        kh_antipode(Order(3, full_mask(2), (0, 1)), "lxh")
