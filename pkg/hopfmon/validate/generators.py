"""
Random and exhaustive instances for the verification suites. All generators take a ``random.Random`` so a
suite is reproducible from its seed.
"""
import itertools
import random
from typing import Iterator, List, Optional

from networkx.utils import UnionFind

from hopfmon.lib.compositions import (
    SetComposition,
    SubsetMask,
    elements,
    enumerate_set_partitions,
    full_mask,
    mask_of,
)
from hopfmon.lib.monoids import (
    MONOIDS,
    BasisElement,
    Graph,
    Hyperforest,
    Hypergraph,
    Order,
    Partition,
    SimplicialComplex,
    is_hyperforest,
)
from hopfmon.lib.nonnesting import NonNestingGraph


def _candidate_edges(n: int, min_size: int = 2, max_size: Optional[int] = None) -> List[SubsetMask]:
    max_size = n if max_size is None else max_size
    return [
        mask_of(c) for size in range(min_size, max_size + 1) for c in itertools.combinations(range(n), size)
    ]


def random_permutation(n: int, rng: random.Random) -> Order:
    seq = list(range(n))
    rng.shuffle(seq)
    return Order(n, full_mask(n), tuple(seq))


def random_graph(n: int, rng: random.Random, p: float = 0.5) -> Graph:
    edges = tuple(e for e in _candidate_edges(n, 2, 2) if rng.random() < p)
    return Graph(n, full_mask(n), tuple(sorted(edges)))


def random_hypergraph(n: int, rng: random.Random, p: float = 0.2) -> Hypergraph:
    edges = tuple(e for e in _candidate_edges(n) if rng.random() < p)
    return Hypergraph(n, full_mask(n), tuple(sorted(edges)))


def random_hyperforest(rng: random.Random, max_vertices: int, max_edges: int) -> Hyperforest:
    """
    Grows a hyperforest one hyperedge at a time: every new hyperedge takes at most one vertex from each existing
    component, so no cycle can appear.

    :param rng: random source
    :param max_vertices: ambient size is drawn from 2..max_vertices
    :param max_edges: at most this many hyperedges
    :return: Hyperforest over [n]
    """
    n = rng.randint(2, max_vertices)
    uf = UnionFind(range(n))
    edges = []
    for _ in range(rng.randint(0, max_edges)):
        components = [sorted(c) for c in uf.to_sets()]
        if len(components) < 2:
            break
        size = rng.randint(2, min(4, len(components)))
        picked = rng.sample(components, size)
        e = [rng.choice(c) for c in picked]
        uf.union(*e)
        edges.append(mask_of(e))
    f = Hyperforest(n, full_mask(n), tuple(sorted(edges)))
    assert is_hyperforest(f.edges), f"generated {f.data()} is not a hyperforest"
    return f


def random_non_nested_graph(m: int, rng: random.Random, p: float = 0.5) -> NonNestingGraph:
    """Scans left ends in order, each arc ending strictly after the previous one."""
    arcs = []
    last_right = 0
    for a in range(1, m):
        if rng.random() >= p:
            continue
        lo = max(a + 1, last_right + 1)
        if lo > m:
            break
        b = rng.randint(lo, m)
        arcs.append((a, b))
        last_right = b
    return NonNestingGraph(m, tuple(arcs))


def all_orders(n: int) -> Iterator[Order]:
    for seq in itertools.permutations(range(n)):
        yield Order(n, full_mask(n), seq)


def all_partitions(n: int) -> Iterator[Partition]:
    for blocks in enumerate_set_partitions(full_mask(n)):
        yield Partition(n, full_mask(n), blocks)


def _all_edge_sets(n: int, candidates: List[SubsetMask]) -> Iterator[tuple]:
    for bits in range(1 << len(candidates)):
        yield tuple(sorted(e for i, e in enumerate(candidates) if bits >> i & 1))


def all_elements(monoid: str, n: int) -> Iterator[BasisElement]:
    """
    Every element of the monoid over [n]. Hypergraph-like monoids go through all subsets of the candidate
    hyperedges and keep the valid ones.

    :param monoid: one of l, pi, g, hg, sc, hf
    :param n: ground set size
    :return: iterator of elements
    """
    if monoid == "l":
        yield from all_orders(n)
        return
    if monoid == "pi":
        yield from all_partitions(n)
        return
    if monoid not in ("g", "hg", "sc", "hf"):
        raise ValueError(f"no exhaustive generator for '{monoid}'")

    cls = MONOIDS[monoid]
    candidates = _candidate_edges(n, 2, 2 if monoid == "g" else None)
    for edges in _all_edge_sets(n, candidates):
        if cls is SimplicialComplex:
            faces = set(edges)
            if any(len(elements(e)) > 2 and any(e ^ (1 << v) not in faces for v in elements(e)) for e in edges):
                continue
        elif cls is Hyperforest and not is_hyperforest(edges):
            continue
        yield cls(n, full_mask(n), edges)


def random_set_composition(mask: SubsetMask, rng: random.Random) -> SetComposition:
    """Shuffles the elements of ``mask`` and cuts the result at random places."""
    items = elements(mask)
    rng.shuffle(items)
    cuts = sorted(rng.sample(range(1, len(items)), rng.randint(0, len(items) - 1)))
    bounds = [0] + cuts + [len(items)]
    return tuple(mask_of(items[lo:hi]) for lo, hi in zip(bounds[:-1], bounds[1:]))
