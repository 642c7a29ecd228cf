"""
Subsets, set compositions, set partitions and linear orders of a finite ground set.

Subsets are python ints used as bitmasks: element ``i`` of the ground set [n] = {0, ..., n-1}
is bit ``1 << i``. Everything here is 0-based, the 1-based labels only show up in
:mod:`hopfmon.utils.io`.
"""
import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from hopfmon.lib.utils import check_guard

SubsetMask = int
SetComposition = Tuple[SubsetMask, ...]
SetPartition = Tuple[SubsetMask, ...]
LinearOrder = Tuple[int, ...]
IntComposition = Tuple[int, ...]


@dataclass(frozen=True)
class GroundSet:
    """
    The finite ground set [n], with optional labels used for display.

    :param n: size of the set
    :param labels: one label per element
    """

    n: int
    labels: Optional[Tuple[str, ...]] = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"ground set size must be nonnegative, got {self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"expected {self.n} labels, got {len(self.labels)}")

    @property
    def mask(self) -> SubsetMask:
        return full_mask(self.n)

    def label(self, i: int) -> str:
        return str(i + 1) if self.labels is None else self.labels[i]


def full_mask(n: int) -> SubsetMask:
    return (1 << n) - 1


def popcount(mask: SubsetMask) -> int:
    return mask.bit_count()


def elements(mask: SubsetMask) -> List[int]:
    """Members of a subset in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(items: Iterable[int]) -> SubsetMask:
    mask = 0
    for i in items:
        mask |= 1 << i
    return mask


def lowest(mask: SubsetMask) -> int:
    """Smallest member of a nonempty subset."""
    return (mask & -mask).bit_length() - 1


def submasks(mask: SubsetMask) -> Iterator[SubsetMask]:
    """
    Nonempty subsets of ``mask`` in increasing numeric order, ``mask`` itself last.

    :param mask: the subset to split
    :return: iterator of submasks
    """
    sub = 0
    while True:
        sub = (sub - mask) & mask
        if sub == 0:
            return
        yield sub


def iter_compositions(mask: SubsetMask) -> Iterator[SetComposition]:
    """
    Streams every set composition of ``mask``, grouped by first part. The empty set has exactly one
    composition, the empty one.
    """
    if mask == 0:
        yield ()
        return
    for first in submasks(mask):
        yield from compositions_with_first_part(mask, first)


def compositions_with_first_part(mask: SubsetMask, first: SubsetMask) -> Iterator[SetComposition]:
    """All set compositions of ``mask`` whose first part is ``first``."""
    if first == 0 or first & ~mask:
        raise ValueError(f"first part {first:b} is not a nonempty subset of {mask:b}")
    if first == mask:
        yield (first,)
        return
    for rest in iter_compositions(mask ^ first):
        yield (first,) + rest


def _compositions_of_length(mask: SubsetMask, k: int) -> Iterator[SetComposition]:
    if k == 1:
        yield (mask,)
        return
    for first in submasks(mask):
        if first == mask or popcount(mask ^ first) < k - 1:
            continue
        for rest in _compositions_of_length(mask ^ first, k - 1):
            yield (first,) + rest


def enumerate_set_compositions(
    ground: Union[GroundSet, SubsetMask], limit: Optional[int] = None
) -> Iterator[SetComposition]:
    """
    Every set composition of the ground set exactly once, in canonical order: by number of parts,
    then lexicographically on the tuple of part masks.

    :param ground: a GroundSet or a nonempty subset mask
    :param limit: overrides the configured enumeration guard
    :return: iterator of set compositions
    """
    mask = ground.mask if isinstance(ground, GroundSet) else ground
    n = popcount(mask)
    if n < 1:
        raise ValueError("set compositions are only enumerated for a nonempty ground set")
    check_guard(n, limit)
    for k in range(1, n + 1):
        yield from _compositions_of_length(mask, k)


def enumerate_set_partitions(mask: SubsetMask) -> Iterator[SetPartition]:
    """
    Set partitions of ``mask``, each with its blocks sorted by smallest element.

    :param mask: subset to partition
    :return: iterator of set partitions
    """
    if mask == 0:
        yield ()
        return
    low = mask & -mask
    rest = mask ^ low
    # block holding the smallest element, then partitions of what is left
    for sub in _subsets_with_empty(rest):
        for tail in enumerate_set_partitions(rest ^ sub):
            yield (low | sub,) + tail


def _subsets_with_empty(mask: SubsetMask) -> Iterator[SubsetMask]:
    yield 0
    yield from submasks(mask)


def compositions_of_type(mask: SubsetMask, sizes: Sequence[int]) -> Iterator[SetComposition]:
    """Set compositions of ``mask`` whose part sizes are ``sizes`` in order."""
    if sum(sizes) != popcount(mask) or any(s < 1 for s in sizes):
        raise ValueError(f"{tuple(sizes)} is not a composition of {popcount(mask)}")
    if not sizes:
        yield ()
        return
    for chosen in itertools.combinations(elements(mask), sizes[0]):
        first = mask_of(chosen)
        for rest in compositions_of_type(mask ^ first, sizes[1:]):
            yield (first,) + rest


def composition_type(composition: SetComposition) -> IntComposition:
    return tuple(popcount(part) for part in composition)


def is_set_composition(composition: SetComposition, mask: SubsetMask) -> bool:
    seen = 0
    for part in composition:
        if part == 0 or part & seen:
            return False
        seen |= part
    return seen == mask


def refines(a: SetComposition, b: SetComposition) -> bool:
    """
    True when ``a`` refines ``b``: each part of ``b`` is a union of consecutive parts of ``a``.

    :param a: finer candidate
    :param b: coarser candidate
    :return: bool
    """
    ground = 0
    for part in a:
        ground |= part
    if not is_set_composition(b, ground) or not is_set_composition(a, ground):
        raise ValueError("refinement is only defined between compositions of the same set")

    i = 0
    for part in b:
        acc = 0
        while acc != part:
            if i >= len(a) or a[i] & ~part:
                return False
            acc |= a[i]
            i += 1
    return i == len(a)


def interval_splits(seq: Sequence) -> Iterator[Tuple[Tuple, ...]]:
    """
    Every way of cutting ``seq`` into nonempty consecutive segments. There are 2^(m-1) of them.

    :param seq: any sequence of length m >= 1
    :return: iterator of tuples of segments
    """
    m = len(seq)
    for cuts in range(1 << max(m - 1, 0)):
        out = []
        start = 0
        for i in range(m - 1):
            if cuts >> i & 1:
                out.append(tuple(seq[start : i + 1]))
                start = i + 1
        out.append(tuple(seq[start:]))
        yield tuple(out)


def standardize(seq: Sequence[int]) -> LinearOrder:
    """Replaces the i-th smallest entry by i."""
    rank = {v: i for i, v in enumerate(sorted(seq))}
    if len(rank) != len(seq):
        raise ValueError(f"entries of {tuple(seq)} are not distinct")
    return tuple(rank[v] for v in seq)


def compose(beta: Sequence[int], gamma: Sequence[int]) -> LinearOrder:
    """(beta o gamma)(i) = beta(gamma(i))"""
    return tuple(beta[g] for g in gamma)


def is_permutation(seq: Sequence[int], n: int) -> bool:
    return len(seq) == n and sorted(seq) == list(range(n))


def join_linear_orders(beta: Sequence[int], beta_gamma: Sequence[int]) -> SetComposition:
    """
    Finest set composition refined by both orders, seen as compositions into singletons. Cut after
    position i exactly when both prefixes of length i+1 hold the same elements.

    :param beta: a linear order
    :param beta_gamma: a linear order on the same set
    :return: set composition whose parts are segments of both
    """
    if sorted(beta) != sorted(beta_gamma):
        raise ValueError("join is only defined for linear orders of the same set")
    parts = []
    seen_a = seen_b = current = 0
    for a, b in zip(beta, beta_gamma):
        seen_a |= 1 << a
        seen_b |= 1 << b
        current |= 1 << a
        if seen_a == seen_b:
            parts.append(current)
            current = 0
    return tuple(parts)


@lru_cache(maxsize=None)
def ordered_bell(n: int) -> int:
    """Number of set compositions of an n-set."""
    if n == 0:
        return 1
    return sum(comb(n, k) * ordered_bell(n - k) for k in range(1, n + 1))
