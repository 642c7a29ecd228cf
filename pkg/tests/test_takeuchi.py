import pytest

from hopfmon.lib.compositions import full_mask
from hopfmon.lib.errors import GuardExceededError, MonoidMismatchError
from hopfmon.lib.formal_sum import FormalSum
from hopfmon.lib.monoids import HadamardPair, Order, element_from_data, identity_order
from hopfmon.lib.takeuchi import (
    antipode_axiom_check,
    collapse_pair,
    composition_sweep,
    double_antipode_check,
    kh_antipode_takeuchi,
    takeuchi_antipode,
)
from hopfmon.validate.generators import all_elements, all_orders, all_partitions


def test_small_antipodes():
    pi = element_from_data("pi", [[1, 2], [3]], 3)
    assert takeuchi_antipode(pi) == FormalSum({pi: 1})
    assert takeuchi_antipode(element_from_data("l", [2, 1], 2)) == FormalSum({identity_order(2): 1})


def test_two_triangles():
    x = element_from_data("hg", [[1, 2, 4], [2, 3, 4]], 4)
    expected = FormalSum(
        [
            (x, -1),
            (element_from_data("hg", [[1, 2, 4]], 4), 2),
            (element_from_data("hg", [[2, 3, 4]], 4), 2),
            (element_from_data("hg", [], 4), -2),
        ]
    )
    assert takeuchi_antipode(x) == expected
    assert takeuchi_antipode(x, progress=True) == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_orders_reverse(n):
    for alpha in all_orders(n):
        reverse = Order(n, alpha.ground, alpha.seq[::-1])
        assert takeuchi_antipode(alpha) == FormalSum({reverse: (-1) ** n})


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_partitions_sign(n):
    for x in all_partitions(n):
        assert takeuchi_antipode(x) == FormalSum({x: (-1) ** len(x.blocks)})


def test_empty_ground_set():
    empty = Order(2, 0, ())
    assert takeuchi_antipode(empty) == FormalSum({empty: 1})


def test_sweep_keeps_cancelled_buckets():
    x = element_from_data("hg", [[1, 2, 3]], 3)
    buckets = composition_sweep(x)
    assert buckets[x] == -1
    assert buckets[element_from_data("hg", [], 3)] == 0
    assert sum(1 for c in buckets.values() if c) == len(takeuchi_antipode(x))


@pytest.mark.parametrize("monoid", ["l", "pi", "g", "hg", "sc", "hf"])
def test_antipode_axiom(monoid):
    for n in (1, 2, 3):
        for x in all_elements(monoid, n):
            assert antipode_axiom_check(x, takeuchi_antipode(x)) == FormalSum()


def test_axiom_detects_wrong_antipode():
    x = element_from_data("g", [[1, 2]], 2)
    assert antipode_axiom_check(x, FormalSum()) != FormalSum()
    with pytest.raises(ValueError):
        antipode_axiom_check(x, FormalSum({identity_order(2): 1}))


def test_parallel_sweep_matches_serial():
    x = element_from_data("g", [[1, 2], [2, 3], [3, 4]], 4)
    assert takeuchi_antipode(x, jobs=2) == takeuchi_antipode(x)


def test_guard():
    with pytest.raises(GuardExceededError):
        takeuchi_antipode(identity_order(5), limit=4)


def test_hadamard_pair():
    e12 = identity_order(2)
    e21 = Order(2, full_mask(2), (1, 0))
    assert takeuchi_antipode(HadamardPair.of(e12, e12)) == FormalSum({HadamardPair.of(e21, e21): 1})


def test_kh_takeuchi():
    e12 = identity_order(2)
    e21 = Order(2, full_mask(2), (1, 0))
    assert kh_antipode_takeuchi(e12) == FormalSum({e12: 1})
    assert kh_antipode_takeuchi(e21) == FormalSum({e12: 2, e21: -1})
    with pytest.raises(MonoidMismatchError):
        kh_antipode_takeuchi(HadamardPair.of(e12, e12))
    with pytest.raises(ValueError):
        kh_antipode_takeuchi(Order(3, 0b011, (0, 1)))


def test_collapse_pair():
    beta = Order(3, full_mask(3), (2, 0, 1))
    y = element_from_data("g", [[1, 3]], 3)
    # beta becomes the identity: 3 -> 1, 1 -> 2, 2 -> 3
    assert collapse_pair(HadamardPair.of(beta, y)) == element_from_data("g", [[1, 2]], 3)


@pytest.mark.parametrize("monoid", ["pi", "g", "hg"])
def test_double_antipode(monoid):
    for x in all_elements(monoid, 3):
        assert double_antipode_check(x) == FormalSum()
