"""
Takeuchi's formula

    S_I(x) = sum over set compositions A of I of (-1)^{l(A)} x_A

computed by brute force. Every other antipode in hopfmon is checked against this one.
"""
import logging
from functools import partial
from typing import Callable, Dict, Optional

from tqdm import tqdm

from hopfmon.lib.compositions import (
    compositions_with_first_part,
    iter_compositions,
    ordered_bell,
    popcount,
    submasks,
)
from hopfmon.lib.errors import MonoidMismatchError
from hopfmon.lib.formal_sum import FormalSum
from hopfmon.lib.monoids import BasisElement, HadamardPair, identity_order
from hopfmon.lib.mp_utils import merge_counts, parallel_map
from hopfmon.lib.utils import check_guard


def _sweep_chunk(x: BasisElement, first: Optional[int]) -> Dict[BasisElement, int]:
    counts: Dict[BasisElement, int] = {}
    comps = iter_compositions(x.ground) if first is None else compositions_with_first_part(x.ground, first)
    for parts in comps:
        z = x.mu_delta(parts)
        if z is not None:
            counts[z] = counts.get(z, 0) + (-1 if len(parts) % 2 else 1)
    return counts


def composition_sweep(
    x: BasisElement, jobs: int = 1, limit: Optional[int] = None, progress: bool = False
) -> Dict[BasisElement, int]:
    """
    Buckets all set compositions A of the ground set by x_A and sums (-1)^{l(A)} in each bucket. Buckets
    that sum to zero are kept, so the keys are exactly the elements reachable as some x_A.

    :param x: basis element
    :param jobs: worker processes, the work is split by first part of the composition
    :param limit: overrides the enumeration guard
    :param progress: show a tqdm progress bar
    :return: dict element -> signed count
    """
    n = popcount(x.ground)
    check_guard(n, limit)
    logging.debug(f"sweeping {ordered_bell(n)} set compositions of a {n}-set for {x.monoid}")

    if n == 0:
        return _sweep_chunk(x, None)
    firsts = list(submasks(x.ground))
    if jobs > 1:
        return merge_counts(parallel_map(partial(_sweep_chunk, x), firsts, jobs))

    chunks = tqdm(firsts, desc="compositions", leave=False) if progress else firsts
    return merge_counts(_sweep_chunk(x, f) for f in chunks)


def takeuchi_antipode(
    x: BasisElement, jobs: int = 1, limit: Optional[int] = None, progress: bool = False
) -> FormalSum:
    """
    Antipode of x by Takeuchi's formula. Works for every monoid in hopfmon.

    :param x: basis element
    :param jobs: worker processes
    :param limit: overrides the enumeration guard
    :return: S(x) with all cancellations carried out
    """
    return FormalSum(composition_sweep(x, jobs=jobs, limit=limit, progress=progress))


def antipode_axiom_check(
    x: BasisElement,
    s: FormalSum,
    antipode: Callable[[BasisElement], FormalSum] = takeuchi_antipode,
) -> FormalSum:
    """
    Left hand side of the antipode recursion

        sum over A1 disjoint union A2 = I of mu(S_{A1} (x) id)(Delta_{A1,A2}(x))

    with ``s`` standing in for S_I(x) and ``antipode`` for the proper parts. The result is zero when ``s``
    is the antipode of x.

    :param x: basis element over a nonempty set I
    :param s: candidate for S_I(x)
    :param antipode: antipode used on proper subsets
    :return: the residual formal sum
    """
    for key in s:
        if type(key) is not type(x) or key.ground != x.ground:
            raise ValueError(f"{key.data()} does not live in the same component as {x.data()}")

    ground = x.ground
    total = FormalSum({x: 1})  # A1 empty: S_empty(1) x
    for a1 in submasks(ground):
        halves = x.split(a1, ground ^ a1)
        if halves is None:
            continue
        x1, x2 = halves
        s1 = s if a1 == ground else antipode(x1)
        total += s1.product(x2)
    return total


def kh_antipode_takeuchi(x: BasisElement, jobs: int = 1, limit: Optional[int] = None) -> FormalSum:
    """
    Antipode of x in the Hopf algebra K(H): the antipode of (identity order, x) in L x H, pushed down
    along (beta, y) -> beta^{-1} . y.

    :param x: element over the whole of [n]
    :return: S(x) in K(H), keys are elements of H over [n]
    """
    if isinstance(x, HadamardPair):
        raise MonoidMismatchError("K(H) expects an element of H, not of L x H")
    if popcount(x.ground) != x.n:
        raise ValueError("K(H) antipodes are taken on elements over the whole of [n]")
    pair = HadamardPair.of(identity_order(x.n), x)
    return takeuchi_antipode(pair, jobs=jobs, limit=limit).map(collapse_pair)


def collapse_pair(pair: HadamardPair) -> BasisElement:
    """(beta, y) -> relabelling of y by beta^{-1}, so that beta becomes 1 < 2 < ... < n"""
    sigma = [0] * pair.n
    for i, b in enumerate(pair.order.seq):
        sigma[b] = i
    return pair.inner.relabel(sigma)


def double_antipode_check(x: BasisElement, jobs: int = 1, limit: Optional[int] = None) -> FormalSum:
    """S(S(x)) - x, zero for the (co)commutative monoids in hopfmon"""
    s = takeuchi_antipode(x, jobs=jobs, limit=limit)
    return s.apply(partial(takeuchi_antipode, jobs=jobs, limit=limit)) - FormalSum({x: 1})
