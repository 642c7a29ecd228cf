import json

import pytest

from hopfmon.lib.errors import CoefficientOverflowError
from hopfmon.lib.formal_sum import FormalSum, key_data, key_string
from hopfmon.lib.monoids import Order, element_from_data
from hopfmon.lib.utils import set_limits

path = element_from_data("g", [[1, 2], [2, 3]], 3)
chord = element_from_data("g", [[1, 3]], 3)


def test_zeros_are_pruned():
    s = FormalSum({path: 2})
    s += FormalSum({path: -2})
    assert s == {}
    assert path not in s
    assert s[path] == 0
    assert FormalSum([(path, 0)]) == FormalSum()


def test_arithmetic():
    s = FormalSum({path: 2, chord: 1})
    t = FormalSum({path: 3, chord: -1})
    assert s + t == FormalSum({path: 5})
    assert s - s == FormalSum()
    assert -s == FormalSum({path: -2, chord: -1})
    assert 3 * s == FormalSum({path: 6, chord: 3})
    assert s * 0 == FormalSum()


def test_map_sums_and_drops():
    s = FormalSum({path: 2, chord: 1})
    edgeless = element_from_data("g", [], 3)
    assert s.map(lambda x: edgeless) == FormalSum({edgeless: 3})
    assert s.map(lambda x: None if x == path else x) == FormalSum({chord: 1})


def test_product_and_coproduct_are_linear():
    left, right = Order(2, 0b01, (0,)), Order(2, 0b10, (1,))
    assert FormalSum({left: 2}).product(right) == FormalSum({left.merge(right): 2})

    s = FormalSum({path: 1, chord: 1})
    expected = FormalSum([(path.split(0b011, 0b100), 1), (chord.split(0b011, 0b100), 1)])
    assert s.coproduct(0b011, 0b100) == expected
    assert len(expected) == 2


def test_overflow():
    set_limits({"coefficient": 10})
    s = FormalSum({path: 6})
    with pytest.raises(CoefficientOverflowError):
        s += FormalSum({path: 5})
    with pytest.raises(CoefficientOverflowError):
        FormalSum({chord: -11})


def test_json_keys():
    s = FormalSum({path: -1, chord: 2})
    assert s.to_json() == {"[[1,2],[2,3]]": -1, "[[1,3]]": 2}
    assert json.loads(key_string((path, chord))) == [[[1, 2], [2, 3]], [[1, 3]]]
    assert key_data((2, 1, 1)) == [2, 1, 1]
