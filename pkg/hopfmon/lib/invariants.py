"""
Characters, the morphism Psi into quasisymmetric functions and the chromatic polynomials it produces.

A character zeta sends basis elements to 0 or 1 multiplicatively. Psi(x) is the sum over set compositions A
on which zeta is 1 on every tensor factor of Delta_A(x), of M_{type(A)}; quasisymmetric functions are kept
as FormalSums keyed by integer compositions. Evaluating M_a at t gives binom(t, l(a)).
"""
import itertools
import logging
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, FrozenSet, List, Optional, Sequence, Tuple, Union

import sympy

from hopfmon.lib.compositions import (
    IntComposition,
    LinearOrder,
    composition_type,
    compositions_of_type,
    elements,
    enumerate_set_partitions,
    full_mask,
    iter_compositions,
    mask_of,
    popcount,
    standardize,
    submasks,
)
from hopfmon.lib.errors import MonoidMismatchError
from hopfmon.lib.formal_sum import FormalSum
from hopfmon.lib.lxh import d_count
from hopfmon.lib.monoids import (
    BasisElement,
    Graph,
    Hyperforest,
    Hypergraph,
    Order,
    SimplicialComplex,
    delta_pieces,
    is_hyperforest,
)
from hopfmon.lib.utils import check_guard, setting


# -----------------------------------------------------------------------------
# Characters
# -----------------------------------------------------------------------------
def global_ascent_factorization(alpha: Union[Order, Sequence[int]]) -> List[LinearOrder]:
    """
    Cuts alpha after every position i where the first i entries are the i smallest ones. Factors are
    standardized and have no global ascent of their own.
    """
    seq = standardize(alpha.seq if isinstance(alpha, Order) else alpha)
    factors, start, top = [], 0, -1
    for i, v in enumerate(seq):
        top = max(top, v)
        if top == i:
            factors.append(standardize(seq[start : i + 1]))
            start = i + 1
    return factors


def _random_order(size: int, rng: random.Random, generators: Optional[FrozenSet[LinearOrder]]) -> List[int]:
    if generators and rng.random() < 0.5:
        seq: List[int] = []
        while len(seq) < size:
            fits = sorted(g for g in generators if len(g) <= size - len(seq))
            if not fits:
                break
            g = rng.choice(fits)
            base = len(seq)
            seq.extend(base + v for v in g)
        if len(seq) == size:
            return seq
    seq = list(range(size))
    rng.shuffle(seq)
    return seq


_HYPERGRAPH_KINDS = (Graph, Hypergraph, SimplicialComplex, Hyperforest)


def _random_hypergraph(kind: type, n: int, mask: int, rng: random.Random) -> Hypergraph:
    """Random element of G, HG, SC or HF over ``mask``, edgeless half of the time."""
    if rng.random() < 0.5:
        return kind(n, mask, ())
    sizes = (2,) if kind is Graph else range(2, popcount(mask) + 1)
    candidates = [mask_of(c) for s in sizes for c in itertools.combinations(elements(mask), s)]
    chosen = [e for e in candidates if rng.random() < 0.4]
    if kind is SimplicialComplex:
        closed = set()
        for e in chosen:
            members = elements(e)
            for s in range(2, len(members) + 1):
                closed.update(mask_of(c) for c in itertools.combinations(members, s))
        chosen = list(closed)
    elif kind is Hyperforest:
        forest: List[int] = []
        for e in chosen:
            if is_hyperforest(forest + [e]):
                forest.append(e)
        chosen = forest
    return kind(n, mask, tuple(sorted(chosen)))


class Character:
    """
    A multiplicative 0/1 valued map on a family of basis elements. Multiplicativity is spot checked on random
    products when the character is built.

    :param name: display name
    :param predicate: basis element -> bool
    :param family: 'hypergraph' (G, HG, SC, HF) or 'permutation' (K(L))
    :param generators: free generators on which a permutation character is 1, used to bias the samples
    :param check: run the multiplicativity check
    """

    def __init__(
        self,
        name: str,
        predicate: Callable[[BasisElement], bool],
        family: str,
        generators: Optional[FrozenSet[LinearOrder]] = None,
        check: bool = True,
    ):
        if family not in ("hypergraph", "permutation"):
            raise ValueError(f"unknown character family '{family}'")
        self.name = name
        self.predicate = predicate
        self.family = family
        self.generators = generators
        if check:
            self.check_multiplicative(
                setting("character_samples"), setting("character_max_degree"), setting("character_seed")
            )

    def __call__(self, x: BasisElement) -> int:
        return 1 if self.predicate(x) else 0

    def __repr__(self):
        return f"Character({self.name})"

    def _sample(self, p: int, q: int, rng: random.Random) -> Tuple[BasisElement, BasisElement]:
        n = p + q
        left, right = full_mask(p), full_mask(n) ^ full_mask(p)
        if self.family == "permutation":
            a = _random_order(p, rng, self.generators)
            b = _random_order(q, rng, self.generators)
            return Order(n, left, tuple(a)), Order(n, right, tuple(p + v for v in b))

        kind = rng.choice(_HYPERGRAPH_KINDS)
        return _random_hypergraph(kind, n, left, rng), _random_hypergraph(kind, n, right, rng)

    def check_multiplicative(self, samples: int, max_degree: int, seed: int) -> None:
        """
        Raises ValueError when zeta(x1 x2) != zeta(x1) zeta(x2) on one of the random pairs.
        """
        rng = random.Random(seed)
        for degree in range(2, max_degree + 1):
            for _ in range(samples):
                p = rng.randint(1, degree - 1)
                x1, x2 = self._sample(p, degree - p, rng)
                if self(x1.merge(x2)) != self(x1) * self(x2):
                    raise ValueError(f"character {self.name} is not multiplicative on {x1.data()}, {x2.data()}")
        logging.debug(f"character {self.name} passed the multiplicativity check")


def _discrete(x: BasisElement) -> bool:
    if not isinstance(x, Hypergraph):
        raise MonoidMismatchError(f"the discrete character is defined on g, hg, sc, hf, not {x.monoid}")
    return not x.edges


class _GeneratorPredicate:
    def __init__(self, generators: FrozenSet[LinearOrder]):
        self.generators = generators

    def __call__(self, x: BasisElement) -> bool:
        if not isinstance(x, Order):
            raise MonoidMismatchError(f"permutation characters are defined on K(L), not {x.monoid}")
        return all(f in self.generators for f in global_ascent_factorization(x.seq))


def generator_character(name: str, generators, check: bool = True) -> Character:
    """
    Character of K(L) equal to 1 exactly on products of the given free generators (orders without global
    ascent), and on the empty order.

    :param name: display name
    :param generators: 0-based permutations in one-line notation
    :return: Character
    """
    gens = frozenset(tuple(g) for g in generators)
    for g in gens:
        if len(global_ascent_factorization(g)) != 1:
            raise ValueError(f"{[v + 1 for v in g]} has a global ascent and is not a free generator")
    return Character(name, _GeneratorPredicate(gens), "permutation", generators=gens, check=check)


@lru_cache(maxsize=None)
def zeta_discrete() -> Character:
    """1 on graphs and hypergraphs without edges"""
    return Character("discrete", _discrete, "hypergraph")


@lru_cache(maxsize=None)
def zeta_epsilon() -> Character:
    """1 on the identity orders 12...n"""
    return generator_character("epsilon", [(0,)])


@lru_cache(maxsize=None)
def zeta_21() -> Character:
    """1 on 2143...(2k)(2k-1) and on the empty order"""
    return generator_character("21", [(1, 0)])


CHARACTERS = {"discrete": zeta_discrete, "epsilon": zeta_epsilon, "21": zeta_21}


# -----------------------------------------------------------------------------
# Psi and chromatic polynomials
# -----------------------------------------------------------------------------
def psi(x: BasisElement, zeta: Character, limit: Optional[int] = None) -> FormalSum:
    """
    Psi(x) in the monomial basis.

    :param x: basis element in degree n >= 1
    :param zeta: character
    :param limit: overrides the enumeration guard
    :return: FormalSum integer composition -> coefficient
    """
    n = popcount(x.ground)
    if n < 1:
        raise ValueError("Psi is computed in positive degree")
    check_guard(n, limit)
    out = FormalSum()
    for parts in iter_compositions(x.ground):
        pieces = delta_pieces(x, parts)
        if pieces is not None and all(zeta(p) for p in pieces):
            out.iadd_term(composition_type(parts), 1)
    return out


@dataclass(frozen=True)
class BinomialPolynomial:
    """sum of c_l binom(t, l), integer coefficients"""

    coefficients: Tuple[int, ...]

    def __call__(self, t: int) -> int:
        return int(sum(c * sympy.binomial(t, l) for l, c in enumerate(self.coefficients) if c))

    @property
    def degree(self) -> int:
        nonzero = [l for l, c in enumerate(self.coefficients) if c]
        return nonzero[-1] if nonzero else -1

    def to_sympy(self, symbol: str = "t") -> sympy.Expr:
        t = sympy.Symbol(symbol)
        return sympy.expand(sum(c * sympy.expand_func(sympy.binomial(t, l)) for l, c in enumerate(self.coefficients)))

    def to_json(self):
        return {"binomial": list(self.coefficients), "monomial": str(self.to_sympy())}


def chromatic_poly(x: BasisElement, zeta: Character, limit: Optional[int] = None) -> BinomialPolynomial:
    """
    chi_x(t): the principal specialization of Psi(x), c_l collecting the coefficients of all M_a with l parts.
    """
    n = popcount(x.ground)
    coefficients = [0] * (n + 1)
    for a, c in psi(x, zeta, limit).items():
        coefficients[len(a)] += c
    return BinomialPolynomial(tuple(coefficients))


def coloring_count_oracle(x: Union[Graph, Order], t: int) -> int:
    """
    Colourings with t colours, by trying them all: proper colourings of a graph, or colourings of the entries
    of a permutation where every colour class is an increasing subsequence.
    """
    if t > 5 or popcount(x.ground) > 7:
        raise ValueError("brute force colouring is limited to t <= 5 colours and 7 vertices")
    if isinstance(x, Order):
        count = 0
        for colors in itertools.product(range(t), repeat=len(x.seq)):
            classes = [[v for v, c in zip(x.seq, colors) if c == k] for k in range(t)]
            count += all(_increasing(cls) for cls in classes)
        return count
    if not isinstance(x, Hypergraph):
        raise MonoidMismatchError(f"colourings are counted on graphs and permutations, not {x.monoid}")
    vertices = elements(x.ground)
    index = {v: i for i, v in enumerate(vertices)}
    edges = [[index[v] for v in elements(e)] for e in x.edges]
    count = 0
    for colors in itertools.product(range(t), repeat=len(vertices)):
        if all(len({colors[v] for v in e}) > 1 for e in edges):
            count += 1
    return count


def _subsequence(seq: Sequence[int], part: int) -> List[int]:
    return [v for v in seq if part >> v & 1]


def increasing_decomposition_count(alpha: Order, a: IntComposition) -> int:
    """
    Number of set compositions of type a whose parts all carry increasing subsequences of alpha.
    """
    return sum(
        all(_increasing(_subsequence(alpha.seq, p)) for p in parts)
        for parts in compositions_of_type(alpha.ground, a)
    )


def _increasing(seq: Sequence[int]) -> bool:
    return all(u < v for u, v in zip(seq, seq[1:]))


def pattern21(size: int) -> LinearOrder:
    """2143...(size)(size-1), 0-based"""
    if size % 2:
        raise ValueError(f"the pattern 2143... has even length, got {size}")
    return tuple(v for i in range(0, size, 2) for v in (i + 1, i))


def pattern21_decomposition_count(alpha: Order, a: IntComposition) -> int:
    """
    Number of set compositions of type a whose parts all carry subsequences of alpha in the pattern 2143...
    """
    if any(size % 2 for size in a):
        raise ValueError(f"parts of {tuple(a)} must all be even")
    return sum(
        all(standardize(_subsequence(alpha.seq, p)) == pattern21(popcount(p)) for p in parts)
        for parts in compositions_of_type(alpha.ground, a)
    )


def incomparability_graph(alpha: Order) -> Graph:
    """
    Graph on the values of alpha with an edge for every inversion. Its proper colourings are the colourings of
    alpha whose colour classes are increasing subsequences.
    """
    seq = alpha.seq
    edges = {
        (1 << seq[i]) | (1 << seq[j]) for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
    }
    return Graph(alpha.n, alpha.ground, tuple(sorted(edges)))


def reciprocity_check(x: BasisElement, zeta: Character, s: FormalSum) -> Tuple[int, int]:
    """
    (chi_x(-1), zeta(S(x))), which agree when s is the antipode of x.
    """
    return chromatic_poly(x, zeta)(-1), sum(c * zeta(key) for key, c in s.items())


# -----------------------------------------------------------------------------
# Primitive basis of graphs
# -----------------------------------------------------------------------------
def gbar(x: Graph, limit: Optional[int] = None) -> FormalSum:
    """
    Primitive element attached to a connected graph x,

        sum over set partitions P of (-1)^{|P|-1} (|P|-1)! x_P,

    and the product over connected components otherwise.
    """
    if not isinstance(x, Graph):
        raise MonoidMismatchError(f"gbar is defined on graphs, not {x.monoid}")
    check_guard(popcount(x.ground), limit)
    classes = x.classes()
    if len(classes) > 1:
        out = gbar(x.restrict(classes[0]), limit)
        for block in classes[1:]:
            out = out.product(gbar(x.restrict(block), limit))
        return out

    out = FormalSum()
    for blocks in enumerate_set_partitions(x.ground):
        k = len(blocks)
        out.iadd_term(x.mu_delta(blocks), (-1) ** (k - 1) * math.factorial(k - 1))
    return out


def primitivity_check(xbar: FormalSum) -> bool:
    """True when every two-part coproduct of xbar vanishes."""
    if not xbar:
        return True
    ground = next(iter(xbar)).ground
    for a1 in submasks(ground):
        if a1 != ground and xbar.coproduct(a1, ground ^ a1):
            return False
    return True


def psi21_identity_check(alpha: Order) -> Tuple[int, int]:
    """
    Both sides of

        sum over a of (-1)^{l(a)} c'_a(alpha) = (-1)^{n/2} d_{alpha, 2143...}

    where c'_a are the coefficients of Psi(alpha) for the character zeta_21. Odd n gives (0, 0).
    """
    n = popcount(alpha.ground)
    if n % 2:
        return 0, 0
    left = sum(c * (-1) ** len(a) for a, c in psi(alpha, zeta_21()).items())
    right = (-1) ** (n // 2) * d_count(alpha.seq, pattern21(n))
    return left, right
