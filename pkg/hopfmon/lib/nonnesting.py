"""
Non-nesting graphs on the vertices 1 < 2 < ... < m and the signed count

    c(G) = sum over A in C(G) of (-1)^{l(A)}

where C(G) holds the compositions of [m] into intervals none of whose parts contains both ends of an arc.
Arcs are pairs (a, b) with a < b, 1-based. Non-nesting means that two distinct arcs (a, b), (c, d) with
a <= c <= b always satisfy a < c <= b < d: arcs may only overlap in a staggered way. Sorting arcs by left end
then sorts them by right end too.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from hopfmon.lib.compositions import interval_splits
from hopfmon.lib.utils import check_guard

Arc = Tuple[int, int]
IntervalSplit = Tuple[Tuple[int, ...], ...]


def is_non_nested(arcs: Sequence[Arc]) -> bool:
    for (a, b), (c, d) in itertools.permutations(arcs, 2):
        if a <= c <= b and not (a < c and b < d):
            return False
    return True


@dataclass(frozen=True)
class NonNestingGraph:
    """
    :param m: number of vertices
    :param arcs: sorted arcs (a, b), 1 <= a < b <= m
    """

    m: int
    arcs: Tuple[Arc, ...] = ()

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("a non-nesting graph needs at least one vertex")
        for a, b in self.arcs:
            if not 1 <= a < b <= self.m:
                raise ValueError(f"arc ({a}, {b}) is not an arc of [{self.m}]")
        if len(set(self.arcs)) != len(self.arcs) or list(self.arcs) != sorted(self.arcs):
            raise ValueError("arcs must be distinct and sorted")
        if not is_non_nested(self.arcs):
            raise ValueError(f"arcs {list(self.arcs)} are nested")

    @classmethod
    def from_arcs(cls, m: int, arcs) -> "NonNestingGraph":
        return cls(m, tuple(sorted(set((int(a), int(b)) for a, b in arcs))))

    def is_connected(self) -> bool:
        """Every gap between r and r+1 is crossed by some arc."""
        covered = set()
        for a, b in self.arcs:
            covered.update(range(a, b))
        return len(covered) == self.m - 1

    def short_arcs(self) -> List[int]:
        """left ends of the arcs (i, i+1)"""
        return [a for a, b in self.arcs if b == a + 1]

    def restrict(self, lo: int, hi: int) -> "NonNestingGraph":
        """Induced graph on lo..hi, shifted to start at 1."""
        shift = lo - 1
        return NonNestingGraph(hi - lo + 1, tuple((a - shift, b - shift) for a, b in self.arcs if lo <= a and b <= hi))

    def admits(self, part: Sequence[int]) -> bool:
        """True when the interval ``part`` contains no arc."""
        lo, hi = part[0], part[-1]
        return not any(lo <= a and b <= hi for a, b in self.arcs)

    def data(self) -> Dict:
        return {"m": self.m, "arcs": [list(arc) for arc in self.arcs]}


def members(g: NonNestingGraph) -> Iterator[IntervalSplit]:
    """The interval splits in C(G)"""
    for split in interval_splits(tuple(range(1, g.m + 1))):
        if all(g.admits(part) for part in split):
            yield split


def c_graph_bruteforce(g: NonNestingGraph, limit: Optional[int] = None) -> int:
    """
    c(G) by summing over all 2^(m-1) interval splits.
    """
    check_guard(g.m, limit)
    return sum(-1 if len(split) % 2 else 1 for split in members(g))


def _check_member(g: NonNestingGraph, split: IntervalSplit) -> None:
    flat = [v for part in split for v in part]
    if flat != list(range(1, g.m + 1)) or any(len(part) == 0 for part in split):
        raise ValueError(f"{split} is not an interval split of [{g.m}]")
    if not all(g.admits(part) for part in split):
        raise ValueError(f"{split} has a part containing an arc")


def phi_step(g: NonNestingGraph, split: IntervalSplit) -> IntervalSplit:
    """
    The sign reversing involution on C(G). For each vertex i in increasing order try

        i-Merge: {i} is a part and no arc joins i to the next part; merge the two.
        i-Split: i is the minimum of a part of size > 1, and either the part is the first one, the previous
                 part is not {i-1}, or (i-1, i) is an arc; split off {i}.

    and apply the first one that changes the split. Fixed points are returned unchanged.

    :param g: non-nesting graph
    :param split: member of C(G)
    :return: phi(split)
    """
    _check_member(g, split)
    arcs = set(g.arcs)
    where = {v: j for j, part in enumerate(split) for v in part}

    for i in range(1, g.m):
        j = where[i]
        part = split[j]
        if part == (i,):
            if j + 1 < len(split) and not any((i, r) in arcs for r in split[j + 1]):
                return split[:j] + (part + split[j + 1],) + split[j + 2 :]
        elif part[0] == i:
            if j == 0 or split[j - 1] != (i - 1,) or (i - 1, i) in arcs:
                return split[:j] + ((i,), part[1:]) + split[j + 1 :]
    return split


def fixed_points(g: NonNestingGraph) -> List[IntervalSplit]:
    return [split for split in members(g) if phi_step(g, split) == split]


def c_graph_fixed_points(g: NonNestingGraph) -> int:
    """c(G) as the signed count of the fixed points of phi_step"""
    return sum(-1 if len(split) % 2 else 1 for split in fixed_points(g))


def _select_to_start(g: NonNestingGraph, bound: int) -> bool:
    """
    Walks from the right: repeatedly take the arc with the largest right end below ``bound`` and move the
    bound to its left end. True when the walk reaches vertex 1.
    """
    while True:
        below = [a for a, b in g.arcs if b < bound]
        if not below:
            return False
        p = below[-1]
        if p == 1:
            return True
        bound = p


def _connected_coefficient(g: NonNestingGraph) -> int:
    """c(G) for a connected graph on m >= 3 vertices without arcs (i, i+1)"""
    # fixed points alternate singletons {p} and intervals of size >= 2 fed by the arc out of p; the last
    # part is an interval (even length) or an interval followed by {m} (odd length)
    ends_even = _select_to_start(g, g.m + 1)
    ends_odd = _select_to_start(g, g.m)
    return int(ends_even) - int(ends_odd)


def c_graph_fast(g: NonNestingGraph) -> int:
    """
    c(G) without enumerating C(G). The result is 0 unless G is connected. Cutting at the arcs (i, i+1) makes
    c multiplicative over the pieces; a single vertex contributes -1 and larger pieces are settled by
    locating the unique fixed point of the involution, if any.

    :param g: non-nesting graph
    :return: -1, 0 or 1
    """
    if not g.is_connected():
        return 0

    cuts = g.short_arcs()
    bounds = [0] + cuts + [g.m]
    result = 1
    for lo, hi in zip(bounds[:-1], bounds[1:]):
        lo += 1
        if lo == hi:
            result = -result
            continue
        result *= _connected_coefficient(g.restrict(lo, hi))
        if result == 0:
            break
    logging.debug(f"c(G) = {result} for arcs {list(g.arcs)} on {g.m} vertices")
    return result


def enumerate_non_nested_graphs(m: int) -> Iterator[NonNestingGraph]:
    """
    Every non-nesting graph on [m]. Arcs are added by increasing left end, each new arc ending strictly
    after the previous one.
    """
    check_guard(m)

    def extend(start: int, last_right: int, arcs: Tuple[Arc, ...]) -> Iterator[Tuple[Arc, ...]]:
        yield arcs
        for a in range(start, m):
            for b in range(max(a + 1, last_right + 1), m + 1):
                yield from extend(a + 1, b, arcs + ((a, b),))

    for arcs in extend(1, 0, ()):
        yield NonNestingGraph(m, arcs)
