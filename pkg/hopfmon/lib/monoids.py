"""
Basis elements of the linearized Hopf monoids handled by hopfmon.

Every element lives over a subset ``ground`` of the ambient ground set [n] and keeps its data in ambient
indices, so restriction never relabels. Elements are immutable and hashable and serve as FormalSum keys.

    ================  =====================  ===========
    monoid            class                  commutative
    ================  =====================  ===========
    L                 Order                  no
    Pi                Partition              yes
    G                 Graph                  yes
    HG                Hypergraph             yes
    SC                SimplicialComplex      yes
    HF                Hyperforest            yes
    L x H             HadamardPair           no
    ================  =====================  ===========

Constructors trust their arguments; data coming from outside goes through :func:`element_from_data` or
``validate()``.
"""
from dataclasses import dataclass
from typing import Any, ClassVar, Dict, List, Optional, Sequence, Tuple, Type

import networkx as nx
from networkx.utils import UnionFind

from hopfmon.lib.compositions import (
    SetComposition,
    SetPartition,
    SubsetMask,
    elements,
    full_mask,
    is_permutation,
    is_set_composition,
    mask_of,
    popcount,
)
from hopfmon.lib.errors import MonoidMismatchError


def _relabel_mask(mask: SubsetMask, sigma: Sequence[int]) -> SubsetMask:
    return mask_of(sigma[i] for i in elements(mask))


def _block_key(mask: SubsetMask) -> int:
    return mask & -mask


@dataclass(frozen=True)
class BasisElement:
    """
    Common interface of all basis elements.

    :param n: size of the ambient ground set
    :param ground: subset of [n] the element lives over
    """

    n: int
    ground: SubsetMask

    monoid: ClassVar[str] = ""
    commutative: ClassVar[bool] = True

    @property
    def size(self) -> int:
        return popcount(self.ground)

    def split(self, a1: SubsetMask, a2: SubsetMask) -> Optional[Tuple["BasisElement", "BasisElement"]]:
        """Coproduct component at (a1, a2); None when it is zero."""
        raise NotImplementedError

    def merge(self, other: "BasisElement") -> "BasisElement":
        """Product with an element over a disjoint ground set."""
        raise NotImplementedError

    def relabel(self, sigma: Sequence[int]) -> "BasisElement":
        """Transport along the bijection i -> sigma[i] of [n]."""
        raise NotImplementedError

    def mu_delta(self, parts: SetComposition) -> Optional["BasisElement"]:
        """
        Iterated coproduct along ``parts`` followed by the product, or None when the coproduct vanishes.
        No checks are made on ``parts``.
        """
        raise NotImplementedError

    def data(self) -> Any:
        """1-based JSON data"""
        raise NotImplementedError

    def validate(self) -> "BasisElement":
        if self.ground & ~full_mask(self.n):
            raise ValueError(f"ground set {elements(self.ground)} is not inside [{self.n}]")
        return self

    def to_json(self) -> Dict[str, Any]:
        return {"monoid": self.monoid, "n": self.n, "data": self.data()}

    def _check_merge(self, other: "BasisElement") -> None:
        if type(other) is not type(self):
            raise MonoidMismatchError(f"cannot multiply {self.monoid} by {other.monoid}")
        if other.n != self.n:
            raise ValueError(f"ambient sizes differ: {self.n} != {other.n}")
        if other.ground & self.ground:
            raise ValueError("product is only defined over disjoint ground sets")


# -----------------------------------------------------------------------------
# L: linear orders
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Order(BasisElement):
    seq: Tuple[int, ...] = ()

    monoid: ClassVar[str] = "l"
    commutative: ClassVar[bool] = False

    def restrict(self, mask: SubsetMask) -> "Order":
        return Order(self.n, mask & self.ground, tuple(v for v in self.seq if mask >> v & 1))

    def split(self, a1, a2):
        return self.restrict(a1), self.restrict(a2)

    def merge(self, other):
        self._check_merge(other)
        return Order(self.n, self.ground | other.ground, self.seq + other.seq)

    def relabel(self, sigma):
        return Order(self.n, _relabel_mask(self.ground, sigma), tuple(sigma[v] for v in self.seq))

    def mu_delta(self, parts):
        return Order(self.n, self.ground, tuple(v for p in parts for v in self.seq if p >> v & 1))

    def data(self):
        return [v + 1 for v in self.seq]

    def validate(self):
        super().validate()
        if len(set(self.seq)) != len(self.seq) or mask_of(self.seq) != self.ground:
            raise ValueError(f"{self.data()} is not a linear order of its ground set")
        return self


def identity_order(n: int, ground: Optional[SubsetMask] = None) -> Order:
    """The order 1 < 2 < ... restricted to ``ground``."""
    ground = full_mask(n) if ground is None else ground
    return Order(n, ground, tuple(elements(ground)))


# -----------------------------------------------------------------------------
# Pi: set partitions
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Partition(BasisElement):
    blocks: SetPartition = ()

    monoid: ClassVar[str] = "pi"

    def split(self, a1, a2):
        left, right = [], []
        for b in self.blocks:
            if b & ~a1 == 0:
                left.append(b)
            elif b & ~a2 == 0:
                right.append(b)
            else:
                return None
        return Partition(self.n, a1, tuple(left)), Partition(self.n, a2, tuple(right))

    def merge(self, other):
        self._check_merge(other)
        return Partition(self.n, self.ground | other.ground, tuple(sorted(self.blocks + other.blocks, key=_block_key)))

    def relabel(self, sigma):
        blocks = tuple(sorted((_relabel_mask(b, sigma) for b in self.blocks), key=_block_key))
        return Partition(self.n, _relabel_mask(self.ground, sigma), blocks)

    def mu_delta(self, parts):
        for b in self.blocks:
            if not any(b & ~p == 0 for p in parts):
                return None
        return self

    def classes(self) -> SetPartition:
        return self.blocks

    def data(self):
        return [[v + 1 for v in elements(b)] for b in self.blocks]

    def validate(self):
        super().validate()
        if not is_set_composition(self.blocks, self.ground):
            raise ValueError(f"{self.data()} is not a set partition of its ground set")
        if list(self.blocks) != sorted(self.blocks, key=_block_key):
            raise ValueError("partition blocks must be sorted by smallest element")
        return self


# -----------------------------------------------------------------------------
# HG and its submonoids: hyperedges are masks of size >= 2, kept sorted
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class Hypergraph(BasisElement):
    edges: Tuple[SubsetMask, ...] = ()

    monoid: ClassVar[str] = "hg"

    def _with_edges(self, ground: SubsetMask, edges: Tuple[SubsetMask, ...]) -> "Hypergraph":
        return type(self)(self.n, ground, edges)

    def restrict(self, mask: SubsetMask) -> "Hypergraph":
        return self._with_edges(mask & self.ground, tuple(e for e in self.edges if e & ~mask == 0))

    def split(self, a1, a2):
        return self.restrict(a1), self.restrict(a2)

    def merge(self, other):
        self._check_merge(other)
        return self._with_edges(self.ground | other.ground, tuple(sorted(self.edges + other.edges)))

    def relabel(self, sigma):
        edges = tuple(sorted(_relabel_mask(e, sigma) for e in self.edges))
        return self._with_edges(_relabel_mask(self.ground, sigma), edges)

    def mu_delta(self, parts):
        kept = tuple(e for e in self.edges if any(e & ~p == 0 for p in parts))
        if len(kept) == len(self.edges):
            return self
        return self._with_edges(self.ground, kept)

    def classes(self) -> SetPartition:
        """Connected components of the vertex set, sorted by smallest element."""
        uf = UnionFind(elements(self.ground))
        for e in self.edges:
            uf.union(*elements(e))
        return tuple(sorted((mask_of(c) for c in uf.to_sets()), key=_block_key))

    def data(self):
        return sorted([v + 1 for v in elements(e)] for e in self.edges)

    def validate(self):
        super().validate()
        for e in self.edges:
            if e & ~self.ground or popcount(e) < 2:
                raise ValueError(f"hyperedge {[v + 1 for v in elements(e)]} is invalid for this ground set")
        if len(set(self.edges)) != len(self.edges) or list(self.edges) != sorted(self.edges):
            raise ValueError("hyperedges must be distinct and sorted")
        return self


@dataclass(frozen=True)
class Graph(Hypergraph):
    monoid: ClassVar[str] = "g"

    def validate(self):
        super().validate()
        if any(popcount(e) != 2 for e in self.edges):
            raise ValueError("graph edges must have exactly two vertices")
        return self


@dataclass(frozen=True)
class SimplicialComplex(Hypergraph):
    """Faces of size >= 2 of a simplicial complex, every vertex of the ground set is a face."""

    monoid: ClassVar[str] = "sc"

    def validate(self):
        super().validate()
        faces = set(self.edges)
        for e in self.edges:
            if popcount(e) > 2 and any(e ^ (1 << v) not in faces for v in elements(e)):
                raise ValueError(f"face {[v + 1 for v in elements(e)]} is missing one of its facets")
        return self


def is_hyperforest(edges: Sequence[SubsetMask]) -> bool:
    """
    A hypergraph has no cycle, in the sense where two hyperedges sharing two vertices already form one,
    exactly when its vertex-hyperedge incidence graph is a forest.
    """
    if not edges:
        return True
    incidence = nx.Graph()
    for idx, e in enumerate(edges):
        incidence.add_edges_from((("edge", idx), v) for v in elements(e))
    return nx.is_forest(incidence)


@dataclass(frozen=True)
class Hyperforest(Hypergraph):
    monoid: ClassVar[str] = "hf"

    def merge(self, other):
        merged = super().merge(other)
        if not is_hyperforest(merged.edges):
            raise ValueError("product of hyperforests is not a hyperforest")
        return merged

    def validate(self):
        super().validate()
        if not is_hyperforest(self.edges):
            raise ValueError(f"{self.data()} contains a cycle")
        return self


# -----------------------------------------------------------------------------
# L x H
# -----------------------------------------------------------------------------
@dataclass(frozen=True)
class HadamardPair(BasisElement):
    order: Optional[Order] = None
    inner: Optional[BasisElement] = None

    monoid: ClassVar[str] = "lxh"
    commutative: ClassVar[bool] = False

    @classmethod
    def of(cls, order: Order, inner: BasisElement) -> "HadamardPair":
        if not isinstance(order, Order):
            raise MonoidMismatchError("first component of a Hadamard pair must be a linear order")
        if isinstance(inner, HadamardPair):
            raise MonoidMismatchError("nested Hadamard products are not supported")
        if order.n != inner.n or order.ground != inner.ground:
            raise ValueError("both components of a Hadamard pair must live over the same set")
        return cls(order.n, order.ground, order, inner)

    def split(self, a1, a2):
        inner = self.inner.split(a1, a2)
        if inner is None:
            return None
        o1, o2 = self.order.split(a1, a2)
        return HadamardPair(self.n, a1, o1, inner[0]), HadamardPair(self.n, a2, o2, inner[1])

    def merge(self, other):
        self._check_merge(other)
        if type(other.inner) is not type(self.inner):
            raise MonoidMismatchError(f"cannot multiply L x {self.inner.monoid} by L x {other.inner.monoid}")
        return HadamardPair(
            self.n, self.ground | other.ground, self.order.merge(other.order), self.inner.merge(other.inner)
        )

    def relabel(self, sigma):
        return HadamardPair(
            self.n, _relabel_mask(self.ground, sigma), self.order.relabel(sigma), self.inner.relabel(sigma)
        )

    def mu_delta(self, parts):
        inner = self.inner.mu_delta(parts)
        if inner is None:
            return None
        return HadamardPair(self.n, self.ground, self.order.mu_delta(parts), inner)

    def data(self):
        return [self.order.data(), self.inner.data()]

    def to_json(self):
        return {"monoid": self.monoid, "inner": self.inner.monoid, "n": self.n, "data": self.data()}

    def validate(self):
        super().validate()
        self.order.validate()
        self.inner.validate()
        return self


MONOIDS: Dict[str, Type[BasisElement]] = {
    "l": Order,
    "pi": Partition,
    "g": Graph,
    "hg": Hypergraph,
    "sc": SimplicialComplex,
    "hf": Hyperforest,
    "lxh": HadamardPair,
}


def element_from_data(monoid: str, data: Any, n: int, inner: Optional[str] = None) -> BasisElement:
    """
    Builds and validates an element over the full set [n] from 1-based JSON data.

    :param monoid: key of MONOIDS
    :param data: 1-based data as produced by ``BasisElement.data()``
    :param n: ambient size
    :param inner: monoid of the second component, for 'lxh' only
    :return: validated basis element
    """
    if monoid not in MONOIDS:
        raise ValueError(f"unknown monoid '{monoid}', expected one of {sorted(MONOIDS)}")
    ground = full_mask(n)

    def _mask(items) -> SubsetMask:
        items = list(items)
        if any(not isinstance(v, int) or v < 1 or v > n for v in items):
            raise ValueError(f"{items} is not a subset of [{n}]")
        if len(set(items)) != len(items):
            raise ValueError(f"{items} has repeated entries")
        return mask_of(v - 1 for v in items)

    if monoid == "l":
        seq = tuple(v - 1 for v in data)
        _mask(data)
        if not is_permutation(seq, n):
            raise ValueError(f"{list(data)} is not a linear order of [{n}]")
        return Order(n, ground, seq).validate()
    if monoid == "pi":
        blocks = tuple(sorted((_mask(b) for b in data), key=_block_key))
        return Partition(n, ground, blocks).validate()
    if monoid == "lxh":
        if inner is None or inner == "lxh":
            raise ValueError("an L x H element needs the inner monoid")
        order_data, inner_data = data
        order = element_from_data("l", order_data, n)
        return HadamardPair.of(order, element_from_data(inner, inner_data, n)).validate()

    edges = tuple(sorted(_mask(e) for e in data))
    return MONOIDS[monoid](n, ground, edges).validate()


# -----------------------------------------------------------------------------
# Operations
# -----------------------------------------------------------------------------
def product(x: BasisElement, y: BasisElement) -> BasisElement:
    """mu(x (x) y) for x, y over disjoint ground sets"""
    return x.merge(y)


def coproduct(x: BasisElement, a1: SubsetMask, a2: SubsetMask) -> Optional[Tuple[BasisElement, BasisElement]]:
    """
    Delta_{A1,A2}(x), or None when the monoid has no such component.

    :param x: basis element over I
    :param a1: first block
    :param a2: second block, I = A1 disjoint union A2
    :return: pair (x|A1, x/A1) or None
    """
    if a1 & a2 or a1 | a2 != x.ground:
        raise ValueError("coproduct blocks must be disjoint with union the ground set")
    return x.split(a1, a2)


def delta_pieces(x: BasisElement, parts: SetComposition) -> Optional[List[BasisElement]]:
    """
    The iterated coproduct along a set composition, as the list of its k tensor factors.

    :param x: basis element over I
    :param parts: set composition of I
    :return: list of elements, or None when the coproduct vanishes
    """
    if not is_set_composition(parts, x.ground):
        raise ValueError("not a set composition of the ground set")
    pieces = []
    rest = x
    for part in parts[:-1]:
        halves = rest.split(part, rest.ground & ~part)
        if halves is None:
            return None
        pieces.append(halves[0])
        rest = halves[1]
    pieces.append(rest)
    return pieces


def mu_delta(x: BasisElement, parts: SetComposition) -> Optional[BasisElement]:
    """x_A: the product of the tensor factors of Delta_A(x)"""
    if not is_set_composition(parts, x.ground):
        raise ValueError("not a set composition of the ground set")
    return x.mu_delta(parts)


def relabel(x: BasisElement, sigma: Sequence[int]) -> BasisElement:
    if not is_permutation(sigma, x.n):
        raise ValueError(f"{tuple(sigma)} is not a bijection of [{x.n}]")
    return x.relabel(tuple(sigma))


def connectivity_classes(x: BasisElement) -> SetPartition:
    """
    Connected components of a (hyper)graph, or the blocks of a partition.
    """
    if isinstance(x, (Hypergraph, Partition)):
        return x.classes()
    raise MonoidMismatchError(f"connectivity classes are not defined for {x.monoid}")


def restriction_of(x: BasisElement, mask: SubsetMask) -> BasisElement:
    """x|A for monoids where it always exists; partitions need A to be a union of blocks."""
    halves = x.split(mask, x.ground & ~mask)
    if halves is None:
        raise ValueError(f"{x.data()} does not restrict to {[v + 1 for v in elements(mask)]}")
    return halves[0]
