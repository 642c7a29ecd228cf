"""
Cancellation-free antipodes in the Hadamard product L x H and in K(L).

For a target (beta, y) the set C of compositions A with (alpha_A, x_A) = (beta, y) has a finest element Lambda.
Merging consecutive parts of Lambda is recorded in the conflict graph, a non-nesting graph on the parts, and
the coefficient of (beta, y) in S(alpha, x) is c of that graph.
"""
import itertools
import logging
from functools import lru_cache, partial
from typing import List, Optional, Sequence, Tuple

from hopfmon.lib.compositions import (
    SetComposition,
    compose,
    full_mask,
    interval_splits,
    is_permutation,
    join_linear_orders,
    mask_of,
    refines,
)
from hopfmon.lib.errors import MonoidMismatchError, VerificationError
from hopfmon.lib.formal_sum import FormalSum, key_string
from hopfmon.lib.monoids import BasisElement, HadamardPair, Order, identity_order
from hopfmon.lib.mp_utils import parallel_map
from hopfmon.lib.nonnesting import NonNestingGraph, c_graph_fast
from hopfmon.lib.takeuchi import collapse_pair, composition_sweep, kh_antipode_takeuchi
from hopfmon.lib.utils import check_guard


def _pairs(alpha: Order, x: BasisElement, beta: Order, y: BasisElement) -> Tuple[HadamardPair, HadamardPair]:
    if type(x) is not type(y):
        raise MonoidMismatchError(f"{x.monoid} and {y.monoid} elements cannot be compared")
    source, target = HadamardPair.of(alpha, x), HadamardPair.of(beta, y)
    if source.n != target.n or source.ground != target.ground:
        raise ValueError("source and target must live over the same set")
    return source, target


def minimal_lambda(alpha: Order, x: BasisElement, beta: Order, y: BasisElement) -> Optional[SetComposition]:
    """
    Finest set composition A with (alpha_A, x_A) = (beta, y). Since alpha_A = beta forces the parts of A to be
    consecutive in beta, only the interval splits of beta are candidates.

    :param alpha: linear order
    :param x: element of H
    :param beta: target linear order
    :param y: target element of H
    :return: Lambda as a tuple of masks, or None when no composition reaches the target
    """
    source, target = _pairs(alpha, x, beta, y)
    valid = []
    for split in interval_splits(beta.seq):
        parts = tuple(mask_of(seg) for seg in split)
        if source.mu_delta(parts) == target:
            valid.append(parts)
    if not valid:
        return None
    finest = max(valid, key=len)
    assert all(refines(finest, other) for other in valid), f"no finest composition reaches {key_string(target)}"
    return finest


def conflict_graph(
    alpha: Order, x: BasisElement, beta: Order, y: BasisElement, lam: SetComposition
) -> NonNestingGraph:
    """
    Graph on the parts 1..m of Lambda. There is an arc (a, b) when merging parts a..b leaves the target while
    merging a..r and r..b stays on it for every a < r < b.

    :param lam: the minimal composition for the target
    :return: the conflict graph
    """
    source, target = _pairs(alpha, x, beta, y)
    if source.mu_delta(lam) != target:
        raise ValueError("Lambda does not reach the target")
    m = len(lam)

    @lru_cache(maxsize=None)
    def valid(a: int, b: int) -> bool:
        merged = 0
        for part in lam[a - 1 : b]:
            merged |= part
        parts = lam[: a - 1] + (merged,) + lam[b:]
        return source.mu_delta(parts) == target

    arcs = []
    for a in range(1, m + 1):
        for b in range(a + 1, m + 1):
            if valid(a, b):
                continue
            if all(valid(a, r) and valid(r, b) for r in range(a + 1, b)):
                arcs.append((a, b))
    return NonNestingGraph(m, tuple(arcs))


def coefficient_lxh(alpha: Order, x: BasisElement, beta: Order, y: BasisElement) -> int:
    """Coefficient of (beta, y) in S(alpha, x)"""
    lam = minimal_lambda(alpha, x, beta, y)
    if lam is None:
        return 0
    return c_graph_fast(conflict_graph(alpha, x, beta, y, lam))


def _bucket_coefficient(source: HadamardPair, target: HadamardPair) -> int:
    return coefficient_lxh(source.order, source.inner, target.order, target.inner)


def antipode_lxh(alpha: Order, x: BasisElement, jobs: int = 1, limit: Optional[int] = None) -> FormalSum:
    """
    S(alpha, x) in L x H with every coefficient in {-1, 0, 1}. Targets come from one sweep over set
    compositions, each coefficient is computed from its conflict graph and checked against the sweep.

    :param alpha: linear order
    :param x: element of H over the same set
    :param jobs: worker processes
    :param limit: overrides the enumeration guard
    :return: S(alpha, x), keys are HadamardPair elements
    """
    source = HadamardPair.of(alpha, x)
    buckets = composition_sweep(source, jobs=jobs, limit=limit)
    targets = sorted(buckets, key=key_string)
    coefficients = parallel_map(partial(_bucket_coefficient, source), targets, jobs)

    result = FormalSum()
    for target, c in zip(targets, coefficients):
        if c != buckets[target]:
            raise VerificationError(
                f"conflict graph gives {c} but the sweep gives {buckets[target]} for {key_string(target)}"
            )
        result.iadd_term(target, c)
    logging.info(f"L x {x.monoid}: {len(targets)} targets, {len(result)} with nonzero coefficient")
    return result


# -----------------------------------------------------------------------------
# K(L)
# -----------------------------------------------------------------------------
def _segments(beta: Sequence[int], lam: SetComposition) -> List[Tuple[int, ...]]:
    out, start = [], 0
    for part in lam:
        size = part.bit_count()
        out.append(tuple(beta[start : start + size]))
        start += size
    return out


def _increasing(seq: Sequence[int]) -> bool:
    return all(a < b for a, b in zip(seq, seq[1:]))


def d_count(alpha: Sequence[int], gamma: Sequence[int], limit: Optional[int] = None) -> int:
    """
    Number of permutations beta such that, with Lambda = beta v (beta o gamma):

        (i)   beta is increasing on every part of Lambda
        (ii)  beta o gamma is increasing in the alpha order on every part of Lambda
        (iii) consecutive parts L, L' have max L > min L' or max_alpha L >_alpha min_alpha L'

    :param alpha: permutation of [n] in one-line notation, 0-based
    :param gamma: permutation of [n], 0-based
    :return: d_{alpha, gamma}
    """
    n = len(alpha)
    if not is_permutation(alpha, n) or not is_permutation(gamma, n):
        raise ValueError("d is only defined for two permutations of the same [n]")
    check_guard(n, limit)
    pos = {v: i for i, v in enumerate(alpha)}

    count = 0
    for beta in itertools.permutations(range(n)):
        bg = compose(beta, gamma)
        lam = join_linear_orders(beta, bg)
        seg_b = _segments(beta, lam)
        if not all(_increasing(s) for s in seg_b):
            continue
        if not all(_increasing([pos[v] for v in s]) for s in _segments(bg, lam)):
            continue
        ok = True
        for left, right in zip(seg_b, seg_b[1:]):
            if max(left) > min(right):
                continue
            if max(pos[v] for v in left) > min(pos[v] for v in right):
                continue
            ok = False
            break
        if ok:
            count += 1
    return count


def pr_antipode(alpha: Order, limit: Optional[int] = None) -> FormalSum:
    """
    S(alpha) in K(L) as sum over gamma of (-1)^{l(epsilon v gamma)} d_{alpha,gamma} gamma. No cancellation
    happens between terms.

    :param alpha: linear order over the whole of [n]
    :return: formal sum of Order elements
    """
    n = alpha.n
    if alpha.ground != full_mask(n):
        raise ValueError("K(L) antipodes are taken on orders of the whole of [n]")
    check_guard(n, limit)
    result = FormalSum()
    for gamma in itertools.permutations(range(n)):
        d = d_count(alpha.seq, gamma, limit)
        if d:
            length = len(join_linear_orders(tuple(range(n)), gamma))
            result.iadd_term(Order(n, alpha.ground, gamma), -d if length % 2 else d)
    return result


def kh_antipode(x: BasisElement, method: str = "takeuchi", jobs: int = 1, limit: Optional[int] = None) -> FormalSum:
    """
    Antipode in K(H) of an element x of H over [n].

    :param x: element over the whole of [n]
    :param method: 'takeuchi' or 'lxh' (collapse of S(identity, x)), or 'pr' for linear orders
    :return: S(x) in K(H)
    """
    if method == "takeuchi":
        return kh_antipode_takeuchi(x, jobs=jobs, limit=limit)
    if method == "lxh":
        if x.ground != full_mask(x.n):
            raise ValueError("K(H) antipodes are taken on elements over the whole of [n]")
        return antipode_lxh(identity_order(x.n), x, jobs=jobs, limit=limit).map(collapse_pair)
    if method == "pr":
        if not isinstance(x, Order):
            raise MonoidMismatchError(f"the d-count formula is for K(L), not K({x.monoid})")
        return pr_antipode(x, limit=limit)
    raise ValueError(f"unknown K(H) method '{method}'")
