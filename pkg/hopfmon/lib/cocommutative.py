"""
Antipodes of commutative and cocommutative monoids (Pi, G, HG, SC, HF) through acyclic orientations.

The coefficient of y in S(x) only depends on the quotient hypergraph G_x^y, built on the parts of the minimal
partition Lambda with x_Lambda = y:

    c_x^y = sum over acyclic orientations O of G_x^y of (-1)^{|V/O|}

It can also be read off the L x H machinery as a sum over all orderings tau of the quotient vertices.
"""
import itertools
import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, Iterator, List, Optional, Tuple

import networkx as nx
from networkx.utils import UnionFind

from hopfmon.lib.compositions import (
    LinearOrder,
    SetComposition,
    SetPartition,
    SubsetMask,
    elements,
    enumerate_set_partitions,
    full_mask,
    iter_compositions,
    lowest,
    mask_of,
    popcount,
    submasks,
)
from hopfmon.lib.errors import MonoidMismatchError, VerificationError
from hopfmon.lib.formal_sum import FormalSum, key_string
from hopfmon.lib.lxh import conflict_graph
from hopfmon.lib.monoids import (
    BasisElement,
    Graph,
    Hyperforest,
    Hypergraph,
    Order,
    Partition,
    SimplicialComplex,
    connectivity_classes,
    identity_order,
    is_hyperforest,
    restriction_of,
)
from hopfmon.lib.mp_utils import parallel_map
from hopfmon.lib.nonnesting import c_graph_fast
from hopfmon.lib.takeuchi import composition_sweep
from hopfmon.lib.utils import check_guard

COCOMMUTATIVE = (Partition, Hypergraph)


def _require_cocommutative(x: BasisElement, y: Optional[BasisElement] = None) -> None:
    if not isinstance(x, COCOMMUTATIVE):
        raise MonoidMismatchError(f"{x.monoid} is not commutative and cocommutative")
    if y is not None:
        if type(y) is not type(x):
            raise MonoidMismatchError(f"cannot compare {x.monoid} with {y.monoid}")
        if y.ground != x.ground or y.n != x.n:
            raise ValueError("x and y must live over the same set")


def _coarsens_blocks(fine: SetPartition, coarse: SetPartition) -> bool:
    return all(any(f & ~c == 0 for c in coarse) for f in fine)


def _fallback_support_partition(x: BasisElement, y: BasisElement) -> Optional[SetPartition]:
    valid = [p for p in enumerate_set_partitions(x.ground) if x.mu_delta(p) == y]
    if not valid:
        return None
    finest = max(valid, key=len)
    assert all(_coarsens_blocks(finest, p) for p in valid), "no finest partition reaches y"
    return finest


def minimal_support_partition(
    x: BasisElement, y: BasisElement, cross_check: bool = False
) -> Optional[SetComposition]:
    """
    Finest partition Lambda of the ground set with x_Lambda = y, blocks sorted by smallest element. Any ordering
    of its blocks is a minimal element of C_x^y.

    :param x: element of a commutative and cocommutative monoid
    :param y: candidate term of S(x)
    :param cross_check: also scan all set partitions and compare
    :return: Lambda, or None when y is not of the form x_A
    """
    _require_cocommutative(x, y)
    lam = connectivity_classes(y)
    fast = lam if x.mu_delta(lam) == y else None
    if cross_check:
        slow = _fallback_support_partition(x, y)
        assert fast == slow, f"connectivity classes {fast} disagree with the partition scan {slow}"
    return fast


@dataclass(frozen=True)
class QuotientHypergraph:
    """
    Hypergraph on the parts 0..m-1 of Lambda. Hyperedges are masks over the parts, sorted by their members.
    """

    m: int
    hyperedges: Tuple[SubsetMask, ...]
    lam: SetComposition

    def data(self) -> Dict:
        return {"m": self.m, "hyperedges": [[v + 1 for v in elements(e)] for e in self.hyperedges]}


def _product(pieces: List[BasisElement]) -> BasisElement:
    out = pieces[0]
    for p in pieces[1:]:
        out = out.merge(p)
    return out


def quotient_hypergraph(x: BasisElement, y: BasisElement, lam: SetComposition) -> QuotientHypergraph:
    """
    Inclusion-minimal sets U of at least two parts of Lambda such that merging them yields more than the product
    of the parts. Candidates are scanned by size, supersets of found hyperedges are skipped.

    :param x: element
    :param y: x_Lambda
    :param lam: minimal partition for y
    :return: the quotient hypergraph
    """
    _require_cocommutative(x, y)
    if x.mu_delta(lam) != y:
        raise ValueError("Lambda does not reach y")
    m = len(lam)
    parts = [restriction_of(x, p) for p in lam]

    found: List[SubsetMask] = []
    for size in range(2, m + 1):
        for chosen in itertools.combinations(range(m), size):
            u = mask_of(chosen)
            if any(e & ~u == 0 for e in found):
                continue
            merged = 0
            for i in chosen:
                merged |= lam[i]
            if restriction_of(x, merged) != _product([parts[i] for i in chosen]):
                found.append(u)
    edges = tuple(sorted(found, key=elements))
    logging.debug(f"quotient hypergraph on {m} vertices: {[elements(e) for e in edges]}")
    return QuotientHypergraph(m, edges, tuple(lam))


@dataclass(frozen=True)
class HyperOrientation:
    """(head, tail) masks, aligned with the hyperedges of the quotient hypergraph"""

    arcs: Tuple[Tuple[SubsetMask, SubsetMask], ...]

    def data(self) -> List:
        return [[[v + 1 for v in elements(h)], [v + 1 for v in elements(t)]] for h, t in self.arcs]


def orientation_count(h: QuotientHypergraph) -> int:
    """Number of orientations before the acyclicity filter"""
    count = 1
    for e in h.hyperedges:
        count *= 2 ** popcount(e) - 2
    return count


def _head_key(head: SubsetMask) -> Tuple[int, Tuple[int, ...]]:
    members = elements(head)
    if len(members) == 1:
        return 1, (-members[0],)
    return len(members), tuple(members)


def iter_orientations(h: QuotientHypergraph) -> Iterator[HyperOrientation]:
    """
    All orientations. Heads of each hyperedge go by size; singletons from the largest vertex down, larger heads
    in lexicographic order.
    """
    choices = []
    for e in h.hyperedges:
        heads = sorted((s for s in submasks(e) if s != e), key=_head_key)
        choices.append([(head, e ^ head) for head in heads])
    for arcs in itertools.product(*choices):
        yield HyperOrientation(tuple(arcs))


def quotient_digraph(h: QuotientHypergraph, o: HyperOrientation) -> nx.DiGraph:
    """
    Digraph on the classes of V/O, heads glued together. Nodes are class masks; an arc [a] -> [b] for every
    a in a head and b in the matching tail.
    """
    uf = UnionFind(range(h.m))
    for head, _ in o.arcs:
        uf.union(*elements(head))
    class_of = {}
    for c in uf.to_sets():
        cm = mask_of(c)
        for v in c:
            class_of[v] = cm

    g = nx.DiGraph()
    g.add_nodes_from(set(class_of.values()))
    for head, tail in o.arcs:
        hc = class_of[lowest(head)]
        g.add_edges_from((hc, class_of[t]) for t in elements(tail))
    return g


def is_acyclic(h: QuotientHypergraph, o: HyperOrientation) -> bool:
    # a self-loop is a cycle of length one
    return nx.is_directed_acyclic_graph(quotient_digraph(h, o))


def enumerate_acyclic_orientations(h: QuotientHypergraph, limit: Optional[int] = None) -> List[HyperOrientation]:
    """
    :param h: quotient hypergraph
    :param limit: overrides the orientation guard
    :return: acyclic orientations in enumeration order
    """
    check_guard(orientation_count(h), limit, "orientation")
    return [o for o in iter_orientations(h) if is_acyclic(h, o)]


def omega(h: QuotientHypergraph, composition: SetComposition) -> HyperOrientation:
    """
    Orientation read off a composition of the quotient vertices: each hyperedge's head is its intersection with
    the first part it meets.
    """
    arcs = []
    for e in h.hyperedges:
        first = next(p for p in composition if p & e)
        head = first & e
        if head == e:
            raise ValueError(f"hyperedge {elements(e)} lies inside one part")
        arcs.append((head, e ^ head))
    return HyperOrientation(tuple(arcs))


def orientation_composition(h: QuotientHypergraph, o: HyperOrientation) -> SetComposition:
    """
    A_O: the classes of V/O, ordered by repeatedly removing the source class with the largest minimum.

    :param h: quotient hypergraph
    :param o: acyclic orientation
    :return: set composition of the quotient vertices
    """
    g = quotient_digraph(h, o)
    if not nx.is_directed_acyclic_graph(g):
        raise ValueError("A_O is only defined for acyclic orientations")
    remaining = set(g.nodes)
    parts = []
    while remaining:
        sources = [c for c in remaining if not any(p in remaining for p in g.predecessors(c))]
        pick = max(sources, key=lowest)
        parts.append(pick)
        remaining.remove(pick)
    out = tuple(parts)
    assert omega(h, out) == o, f"Omega(A_O) differs from O for {o.data()}"
    return out


def coefficient_via_orientations(x: BasisElement, y: BasisElement, limit: Optional[int] = None) -> int:
    """
    Coefficient of y in S(x) as the signed count of acyclic orientations of G_x^y. Zero when y is not of
    the form x_A.
    """
    lam = minimal_support_partition(x, y)
    if lam is None:
        return 0
    h = quotient_hypergraph(x, y, lam)
    if isinstance(x, (Graph, SimplicialComplex)):
        assert all(popcount(e) == 2 for e in h.hyperedges), "graph quotients only have 2-element hyperedges"

    total = 0
    for o in enumerate_acyclic_orientations(h, limit):
        classes = quotient_digraph(h, o).number_of_nodes()
        total += -1 if classes % 2 else 1
    return total


def _tau_contribution(hx: Hypergraph, tau: LinearOrder) -> int:
    m = hx.n
    ground = full_mask(m)
    empty = Hypergraph(m, ground, ())
    lam = tuple(1 << t for t in tau)
    g = conflict_graph(identity_order(m), hx, Order(m, ground, tuple(tau)), empty, lam)
    return c_graph_fast(g)


def permutation_contributions(
    x: BasisElement, y: BasisElement, jobs: int = 1, limit: Optional[int] = None
) -> Dict[LinearOrder, int]:
    """
    c(G) of the conflict graph of (identity, G_x^y) and (tau, edgeless), for every ordering tau of the quotient
    vertices.

    :return: dict tau -> contribution, empty when y is not of the form x_A
    """
    lam = minimal_support_partition(x, y)
    if lam is None:
        return {}
    h = quotient_hypergraph(x, y, lam)
    check_guard(h.m, limit, "permutation")
    hx = Hypergraph(h.m, full_mask(h.m), tuple(sorted(h.hyperedges)))
    taus = list(itertools.permutations(range(h.m)))
    values = parallel_map(partial(_tau_contribution, hx), taus, jobs)
    return dict(zip(taus, values))


def coefficient_via_permutations(x: BasisElement, y: BasisElement, jobs: int = 1, limit: Optional[int] = None) -> int:
    return sum(permutation_contributions(x, y, jobs=jobs, limit=limit).values())


def support_length_profile(x: BasisElement, y: BasisElement, limit: Optional[int] = None) -> Dict[int, int]:
    """Number of set compositions A with x_A = y, by number of parts."""
    _require_cocommutative(x, y)
    check_guard(popcount(x.ground), limit)
    profile: Dict[int, int] = {}
    for parts in iter_compositions(x.ground):
        if x.mu_delta(parts) == y:
            profile[len(parts)] = profile.get(len(parts), 0) + 1
    return dict(sorted(profile.items()))


def antipode_cocommutative(
    x: BasisElement, method: str = "orientations", jobs: int = 1, limit: Optional[int] = None
) -> FormalSum:
    """
    S(x) with each coefficient computed from the quotient hypergraph. Candidate terms are collected in one sweep
    over set compositions, whose signed bucket counts must agree with the computed coefficients.

    :param x: element of Pi, G, HG, SC or HF
    :param method: 'orientations' or 'permutations'
    :param jobs: worker processes
    :param limit: overrides the enumeration guards
    :return: S(x)
    """
    _require_cocommutative(x)
    if method not in ("orientations", "permutations"):
        raise ValueError(f"unknown method '{method}'")
    buckets = composition_sweep(x, jobs=jobs, limit=limit)

    result = FormalSum()
    for y in sorted(buckets, key=key_string):
        if method == "orientations":
            c = coefficient_via_orientations(x, y)
        else:
            c = coefficient_via_permutations(x, y, jobs=jobs)
        if c != buckets[y]:
            raise VerificationError(f"{method} give {c} but the sweep gives {buckets[y]} for {key_string(y)}")
        result.iadd_term(y, c)
    return result


def hyperforest_coefficient(f: BasisElement, h: BasisElement) -> int:
    """
    Coefficient of h in S(f) for hyperforests: with k hyperedges and l connected components in G_f^h it is
    (-1)^l (-2)^k when every hyperedge of G_f^h has an even number of vertices, and 0 otherwise.

    :param f: hyperforest
    :param h: f_A for some composition A
    :return: the coefficient
    """
    for e in (f, h):
        if not isinstance(e, Hyperforest) or not is_hyperforest(e.edges):
            raise ValueError(f"{e.data()} is not a hyperforest")
    lam = minimal_support_partition(f, h)
    if lam is None:
        raise ValueError(f"{h.data()} is not obtained from {f.data()} by restricting along a composition")
    q = quotient_hypergraph(f, h, lam)
    if any(popcount(e) % 2 for e in q.hyperedges):
        return 0

    uf = UnionFind(range(q.m))
    for e in q.hyperedges:
        uf.union(*elements(e))
    components = len(list(uf.to_sets()))
    k = len(q.hyperedges)
    return (-1) ** components * (-2) ** k


# -----------------------------------------------------------------------------
# graphs and simplicial complexes
# -----------------------------------------------------------------------------
def contraction_graph(x: BasisElement, y: BasisElement) -> nx.Graph:
    """
    Simple graph on the connected components of y, two of them adjacent when an edge of x joins them.
    """
    if not isinstance(x, (Graph, SimplicialComplex)):
        raise MonoidMismatchError(f"contraction graphs are defined for g and sc, not {x.monoid}")
    _require_cocommutative(x, y)
    lam = connectivity_classes(y)
    if x.mu_delta(lam) != y:
        raise ValueError(f"{y.data()} is not a flat of {x.data()}")
    class_of = {v: i for i, block in enumerate(lam) for v in elements(block)}

    g = nx.Graph()
    g.add_nodes_from(range(len(lam)))
    for e in x.edges:
        if popcount(e) != 2:
            continue
        u, v = elements(e)
        if class_of[u] != class_of[v]:
            g.add_edge(class_of[u], class_of[v])
    return g


def acyclic_orientation_count(g: nx.Graph, limit: Optional[int] = None) -> int:
    """
    Counts acyclic orientations by trying all 2^|E| of them.
    """
    edges = list(g.edges())
    check_guard(len(edges), limit)
    count = 0
    for bits in range(1 << len(edges)):
        d = nx.DiGraph()
        d.add_nodes_from(g.nodes)
        d.add_edges_from((u, v) if bits >> i & 1 else (v, u) for i, (u, v) in enumerate(edges))
        if nx.is_directed_acyclic_graph(d):
            count += 1
    return count


def flats_antipode(x: BasisElement, jobs: int = 1, limit: Optional[int] = None) -> FormalSum:
    """
    S(x) for a graph or simplicial complex: the sum over flats y of (-1)^{|I/y|} a(x/y) y, where a counts the
    acyclic orientations of the contraction graph.
    """
    if not isinstance(x, (Graph, SimplicialComplex)):
        raise MonoidMismatchError(f"the flats formula applies to g and sc, not {x.monoid}")
    buckets = composition_sweep(x, jobs=jobs, limit=limit)
    result = FormalSum()
    for y in sorted(buckets, key=key_string):
        g = contraction_graph(x, y)
        sign = -1 if g.number_of_nodes() % 2 else 1
        c = sign * acyclic_orientation_count(g)
        if c != buckets[y]:
            raise VerificationError(f"flats give {c} but the sweep gives {buckets[y]} for {key_string(y)}")
        result.iadd_term(y, c)
    return result
