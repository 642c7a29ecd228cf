"""
FormalSum is a dictionary basis element -> int with default value 0. Zero coefficients are dropped as soon as
they appear, so two sums are equal exactly when they are equal as dicts.

Keys are basis elements of a linearized monoid (see :mod:`hopfmon.lib.monoids`), integer compositions
(for quasisymmetric functions in the monomial basis) or pairs of basis elements (for coproducts).
"""
import json
from typing import Any, Callable, Dict, Iterable, Optional, Tuple, Union

from hopfmon.lib.errors import CoefficientOverflowError
from hopfmon.lib.utils import max_coefficient


class FormalSum(dict):
    def __init__(self, data: Union[Dict, Iterable[Tuple[Any, int]]] = ()):
        super(FormalSum, self).__init__()
        self.__iadd__(data)

    def __getitem__(self, key) -> int:
        return self.get(key, 0)

    def iadd_term(self, key, coef: int) -> "FormalSum":
        """self += coef * key"""
        if coef == 0:
            return self
        value = self.get(key, 0) + coef
        if value == 0:
            del self[key]
            return self
        if abs(value) > max_coefficient():
            raise CoefficientOverflowError(f"coefficient {value} of {key_string(key)} is out of range")
        dict.__setitem__(self, key, value)
        return self

    def __iadd__(self, other) -> "FormalSum":
        if isinstance(other, dict):
            other = other.items()
        for key, coef in other:
            self.iadd_term(key, coef)
        return self

    def __add__(self, other) -> "FormalSum":
        res = FormalSum(self)
        res.__iadd__(other)
        return res

    def __isub__(self, other) -> "FormalSum":
        for key, coef in other.items():
            self.iadd_term(key, -coef)
        return self

    def __sub__(self, other) -> "FormalSum":
        res = FormalSum(self)
        res.__isub__(other)
        return res

    def __neg__(self) -> "FormalSum":
        return FormalSum((k, -c) for k, c in self.items())

    def __mul__(self, n: int) -> "FormalSum":
        if n == 0:
            return FormalSum()
        return FormalSum((k, n * c) for k, c in self.items())

    def __rmul__(self, n: int) -> "FormalSum":
        return self.__mul__(n)

    def map(self, fn: Callable[[Any], Optional[Any]]) -> "FormalSum":
        """
        Linear extension of a map on basis elements. Terms mapped to None vanish, terms mapped to the
        same key are summed.

        :param fn: basis element -> basis element or None
        :return: new FormalSum
        """
        res = FormalSum()
        for key, coef in self.items():
            image = fn(key)
            if image is not None:
                res.iadd_term(image, coef)
        return res

    def apply(self, fn: Callable[[Any], "FormalSum"]) -> "FormalSum":
        """Linear extension of a map sending basis elements to formal sums."""
        res = FormalSum()
        for key, coef in self.items():
            for image, c in fn(key).items():
                res.iadd_term(image, coef * c)
        return res

    def product(self, other) -> "FormalSum":
        """
        Bilinear extension of the monoid product. ``other`` may be a single basis element.
        """
        if not isinstance(other, dict):
            other = {other: 1}
        res = FormalSum()
        for a, ca in self.items():
            for b, cb in other.items():
                res.iadd_term(a.merge(b), ca * cb)
        return res

    def coproduct(self, a1: int, a2: int) -> "FormalSum":
        """Linear extension of the coproduct, keyed by pairs of basis elements."""
        res = FormalSum()
        for key, coef in self.items():
            pieces = key.split(a1, a2)
            if pieces is not None:
                res.iadd_term(pieces, coef)
        return res

    def to_json(self) -> Dict[str, int]:
        return {key_string(k): c for k, c in sorted(self.items(), key=lambda kc: key_string(kc[0]))}

    def __repr__(self):
        return f"FormalSum({self.to_json()})"


def key_data(key) -> Any:
    """1-based JSON data of a formal sum key"""
    if isinstance(key, tuple) and all(isinstance(k, int) for k in key):
        return list(key)
    if isinstance(key, tuple):
        return [key_data(k) for k in key]
    return key.data()


def key_string(key) -> str:
    return json.dumps(key_data(key), separators=(",", ":"))
