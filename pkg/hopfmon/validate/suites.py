"""
Verification suites. Every suite compares two independent computations of the same quantity over exhaustive
small cases and seeded random ones, and reports one CaseResult per group of instances.
"""
import itertools
import json
import logging
import random
from dataclasses import asdict, dataclass
from typing import Callable, Dict, Iterable, List, Optional, Sequence

import networkx as nx
from tabulate import tabulate
from termcolor import colored
from tqdm import tqdm
from yacs.config import CfgNode

from hopfmon.lib.cocommutative import (
    antipode_cocommutative,
    coefficient_via_orientations,
    enumerate_acyclic_orientations,
    flats_antipode,
    hyperforest_coefficient,
    minimal_support_partition,
    orientation_composition,
    permutation_contributions,
    quotient_hypergraph,
    support_length_profile,
)
from hopfmon.lib.compositions import elements, full_mask, mask_of, popcount
from hopfmon.lib.errors import GuardExceededError, VerificationError
from hopfmon.lib.formal_sum import FormalSum, key_string
from hopfmon.lib.invariants import (
    chromatic_poly,
    coloring_count_oracle,
    gbar,
    incomparability_graph,
    primitivity_check,
    psi21_identity_check,
    reciprocity_check,
    zeta_discrete,
    zeta_epsilon,
)
from hopfmon.lib.lxh import (
    antipode_lxh,
    coefficient_lxh,
    conflict_graph,
    d_count,
    kh_antipode,
    minimal_lambda,
    pr_antipode,
)
from hopfmon.lib.monoids import (
    BasisElement,
    Graph,
    HadamardPair,
    Hypergraph,
    Order,
    element_from_data,
    identity_order,
)
from hopfmon.lib.nonnesting import (
    NonNestingGraph,
    c_graph_bruteforce,
    c_graph_fast,
    c_graph_fixed_points,
    enumerate_non_nested_graphs,
    members,
    phi_step,
)
from hopfmon.lib.takeuchi import (
    antipode_axiom_check,
    double_antipode_check,
    kh_antipode_takeuchi,
    takeuchi_antipode,
)
from hopfmon.utils.io import composition_label
from hopfmon.validate.generators import (
    all_elements,
    all_orders,
    random_graph,
    random_hyperforest,
    random_hypergraph,
    random_permutation,
    random_set_composition,
)

Check = Callable[[object], Optional[str]]


@dataclass
class CaseResult:
    suite: str
    case: str
    passed: bool
    checked: int = 0
    detail: str = ""


def _run_group(suite: str, case: str, items: Iterable, check: Check, progress: bool = False) -> CaseResult:
    """
    Runs ``check`` on every item and stops at the first failure. A check returns None on success and a short
    description otherwise; VerificationError and AssertionError raised inside it count as failures.
    """
    checked = 0
    for item in tqdm(items, desc=f"{suite} {case}", disable=not progress, leave=False):
        checked += 1
        try:
            failure = check(item)
        except (VerificationError, AssertionError) as e:
            failure = str(e)
        if failure:
            logging.warning(f"{suite} / {case}: {failure}")
            return CaseResult(suite, case, False, checked, failure)
    logging.info(f"{suite} / {case}: {checked} instances passed")
    return CaseResult(suite, case, True, checked)


def _single(suite: str, case: str, check: Callable[[], Optional[str]]) -> CaseResult:
    return _run_group(suite, case, [None], lambda _: check())


def _mismatch(what: str, got, expected) -> Optional[str]:
    if got == expected:
        return None
    return f"{what}: got {got!r}, expected {expected!r}"


def _nx_graph(x: Hypergraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(elements(x.ground))
    g.add_edges_from(tuple(elements(e)) for e in x.edges)
    return g


def _acyclic_orientations(g: nx.Graph) -> int:
    """|chi_g(-1)| from the networkx chromatic polynomial"""
    poly = nx.chromatic_polynomial(g)
    return abs(int(poly.subs({s: -1 for s in poly.free_symbols})))


def _edgeless(x: BasisElement) -> BasisElement:
    return type(x)(x.n, x.ground, ())


# -----------------------------------------------------------------------------
# antipode-axiom
# -----------------------------------------------------------------------------
def _axiom(x: BasisElement) -> Optional[str]:
    residual = antipode_axiom_check(x, takeuchi_antipode(x))
    if residual:
        return f"{key_string(x)} leaves {json.dumps(residual.to_json(), sort_keys=True)}"
    return None


def _involution(x: BasisElement) -> Optional[str]:
    residual = double_antipode_check(x)
    if residual:
        return f"S(S({key_string(x)})) differs from it by {json.dumps(residual.to_json(), sort_keys=True)}"
    return None


def suite_antipode_axiom(cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    v = cfg.VALIDATE
    results = []
    for monoid in ("l", "pi", "g", "hg", "sc", "hf"):
        for n in range(1, v.AXIOM_MAX_N + 1):
            results.append(
                _run_group("antipode-axiom", f"{monoid} n={n}", all_elements(monoid, n), _axiom, progress)
            )

    rng = random.Random(v.SEED)
    n = v.AXIOM_RANDOM_HG_N
    samples = [random_hypergraph(n, rng) for _ in range(v.AXIOM_RANDOM_SAMPLES)]
    results.append(_run_group("antipode-axiom", f"hg random n={n}", samples, _axiom, progress))

    for monoid in ("l", "pi", "g", "sc", "hf"):
        for n in range(1, v.DOUBLE_ANTIPODE_MAX_N + 1):
            results.append(
                _run_group("antipode-axiom", f"S^2 = id {monoid} n={n}", all_elements(monoid, n), _involution, progress)
            )
    return results


# -----------------------------------------------------------------------------
# oracle-equivalence
# -----------------------------------------------------------------------------
def _reversal(alpha: Order) -> Optional[str]:
    n = popcount(alpha.ground)
    expected = FormalSum().iadd_term(Order(alpha.n, alpha.ground, alpha.seq[::-1]), (-1) ** n)
    return _mismatch(f"S({key_string(alpha)})", takeuchi_antipode(alpha), expected)


def _partition_sign(x: BasisElement) -> Optional[str]:
    expected = FormalSum().iadd_term(x, (-1) ** len(x.blocks))
    return _mismatch(f"S({key_string(x)})", takeuchi_antipode(x), expected)


def _lxh_pair(pair: Sequence[BasisElement]) -> Optional[str]:
    alpha, x = pair
    s = antipode_lxh(alpha, x)
    if any(c not in (-1, 1) for c in s.values()):
        return f"S({key_string(alpha)}, {key_string(x)}) has a coefficient outside of -1, 0, 1"
    return _mismatch(f"S({key_string(alpha)}, {key_string(x)})", s, takeuchi_antipode(HadamardPair.of(alpha, x)))


def _cgraph(g: NonNestingGraph) -> Optional[str]:
    brute = c_graph_bruteforce(g)
    fast = c_graph_fast(g)
    if fast not in (-1, 0, 1):
        return f"c = {fast} for arcs {list(g.arcs)}"
    failure = _mismatch(f"c(G) for arcs {list(g.arcs)} on {g.m}", fast, brute) or _mismatch(
        f"fixed points for arcs {list(g.arcs)} on {g.m}", c_graph_fixed_points(g), brute
    )
    if failure:
        return failure
    for split in members(g):
        image = phi_step(g, split)
        if phi_step(g, image) != split:
            return f"phi is not an involution at {split} for arcs {list(g.arcs)}"
        if image != split and len(image) % 2 == len(split) % 2:
            return f"phi keeps the sign at {split} for arcs {list(g.arcs)}"
    return None


def _kh_collapse(x: BasisElement) -> Optional[str]:
    s = kh_antipode(x, "lxh")
    return _mismatch(f"K({x.monoid}) antipode of {key_string(x)}", s, kh_antipode_takeuchi(x))


def _cocommutative(method: str) -> Check:
    def check(x: BasisElement) -> Optional[str]:
        return _mismatch(f"{method} S({key_string(x)})", antipode_cocommutative(x, method), takeuchi_antipode(x))

    return check


def _flats(x: BasisElement) -> Optional[str]:
    return _mismatch(f"flats S({key_string(x)})", flats_antipode(x), takeuchi_antipode(x))


def _edgeless_coefficient(x: Graph) -> Optional[str]:
    n = popcount(x.ground)
    expected = (-1) ** n * _acyclic_orientations(_nx_graph(x))
    return _mismatch(f"edgeless coefficient of S({key_string(x)})", takeuchi_antipode(x)[_edgeless(x)], expected)


def suite_oracle_equivalence(cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    v = cfg.VALIDATE
    suite = "oracle-equivalence"
    results = []
    for n in range(1, v.ORDER_MAX_N + 1):
        results.append(_run_group(suite, f"l reversal n={n}", all_orders(n), _reversal, progress))
    for n in range(1, v.PARTITION_MAX_N + 1):
        results.append(_run_group(suite, f"pi sign n={n}", all_elements("pi", n), _partition_sign, progress))

    for n in range(1, v.LXG_MAX_N + 1):
        pairs = itertools.product(all_orders(n), list(all_elements("g", n)))
        results.append(_run_group(suite, f"l x g n={n}", pairs, _lxh_pair, progress))
    rng = random.Random(v.SEED)
    n = v.LXG_RANDOM_N
    pairs = [(random_permutation(n, rng), random_graph(n, rng)) for _ in range(v.LXG_RANDOM_SAMPLES)]
    results.append(_run_group(suite, f"l x g random n={n}", pairs, _lxh_pair, progress))
    for inner in ("l", "pi", "hg", "sc", "hf"):
        for n in range(1, v.LXH_INNER_MAX_N + 1):
            pairs = itertools.product(all_orders(n), list(all_elements(inner, n)))
            results.append(_run_group(suite, f"l x {inner} n={n}", pairs, _lxh_pair, progress))

    for m in range(1, v.CGRAPH_MAX_M + 1):
        results.append(_run_group(suite, f"c(G) m={m}", enumerate_non_nested_graphs(m), _cgraph, progress))

    for monoid in ("l", "pi", "g"):
        for n in range(1, v.KH_MAX_N + 1):
            results.append(_run_group(suite, f"K({monoid}) n={n}", all_elements(monoid, n), _kh_collapse, progress))

    for monoid in ("pi", "g", "hg", "sc", "hf"):
        # HG is exhaustive only up to its own bound
        top = min(v.COCOMMUTATIVE_MAX_N, v.COCOMMUTATIVE_HG_MAX_N) if monoid == "hg" else v.COCOMMUTATIVE_MAX_N
        for n in range(1, top + 1):
            results.append(
                _run_group(
                    suite, f"orientations {monoid} n={n}", all_elements(monoid, n), _cocommutative("orientations"),
                    progress,
                )
            )
        for n in range(1, min(top, v.PERMUTATION_METHOD_MAX_N) + 1):
            results.append(
                _run_group(
                    suite, f"permutations {monoid} n={n}", all_elements(monoid, n), _cocommutative("permutations"),
                    progress,
                )
            )
    for monoid in ("g", "sc"):
        for n in range(1, v.COCOMMUTATIVE_MAX_N + 1):
            results.append(_run_group(suite, f"flats {monoid} n={n}", all_elements(monoid, n), _flats, progress))

    for n in range(1, v.GRAPH_MAX_N + 1):
        results.append(
            _run_group(suite, f"g edgeless coefficient n={n}", all_elements("g", n), _edgeless_coefficient, progress)
        )
    return results


# -----------------------------------------------------------------------------
# pr-reciprocity
# -----------------------------------------------------------------------------
def _pr(alpha: Order) -> Optional[str]:
    return _mismatch(f"K(l) antipode of {key_string(alpha)}", pr_antipode(alpha), kh_antipode_takeuchi(alpha))


def _graph_chromatic(max_t: int) -> Check:
    def check(x: Graph) -> Optional[str]:
        chi = chromatic_poly(x, zeta_discrete())
        for t in range(1, max_t + 1):
            failure = _mismatch(f"chi({t}) of {key_string(x)}", chi(t), coloring_count_oracle(x, t))
            if failure:
                return failure
        left, right = reciprocity_check(x, zeta_discrete(), takeuchi_antipode(x))
        orientations = (-1) ** popcount(x.ground) * _acyclic_orientations(_nx_graph(x))
        return _mismatch(f"chi(-1), zeta(S) for {key_string(x)}", (left, right), (orientations, orientations))

    return check


def _permutation_chromatic(alpha: Order) -> Optional[str]:
    n = popcount(alpha.ground)
    poly = chromatic_poly(alpha, zeta_epsilon())
    for m in (1, 2, 3):
        failure = _mismatch(f"chi({m}) of {key_string(alpha)}", poly(m), coloring_count_oracle(alpha, m))
        if failure:
            return failure
    chi = poly(-1)
    d = (-1) ** n * d_count(alpha.seq, tuple(range(n)))
    ao = (-1) ** n * _acyclic_orientations(_nx_graph(incomparability_graph(alpha)))
    return _mismatch(f"chi(-1), d, orientations for {key_string(alpha)}", (chi, d, ao), (chi, chi, chi))


def _psi21(alpha: Order) -> Optional[str]:
    left, right = psi21_identity_check(alpha)
    return _mismatch(f"Psi_21 identity for {key_string(alpha)}", left, right)


def suite_pr_reciprocity(cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    v = cfg.VALIDATE
    suite = "pr-reciprocity"
    results = []
    for n in range(1, v.PR_MAX_N + 1):
        results.append(_run_group(suite, f"pr antipode n={n}", all_orders(n), _pr, progress))
    for n in range(1, v.GRAPH_MAX_N + 1):
        results.append(
            _run_group(suite, f"g chromatic n={n}", all_elements("g", n), _graph_chromatic(v.COLORING_MAX_T), progress)
        )
    for n in range(1, v.CHROMATIC_PERMUTATION_MAX_N + 1):
        results.append(_run_group(suite, f"l chromatic n={n}", all_orders(n), _permutation_chromatic, progress))
    for n in v.PSI21_EXHAUSTIVE_N:
        results.append(_run_group(suite, f"psi21 n={n}", all_orders(n), _psi21, progress))
    rng = random.Random(v.SEED)
    n = v.PSI21_RANDOM_N
    samples = [random_permutation(n, rng) for _ in range(v.PSI21_RANDOM_SAMPLES)]
    results.append(_run_group(suite, f"psi21 random n={n}", samples, _psi21, progress))
    return results


# -----------------------------------------------------------------------------
# hyperforest
# -----------------------------------------------------------------------------
def suite_hyperforest(cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    v = cfg.VALIDATE
    rng = random.Random(v.SEED)
    instances = []
    for _ in range(v.HYPERFOREST_SAMPLES):
        f = random_hyperforest(rng, v.HYPERFOREST_MAX_VERTICES, v.HYPERFOREST_MAX_EDGES)
        instances.append((f, f.mu_delta(random_set_composition(f.ground, rng))))
        instances.append((f, _edgeless(f)))

    odd = []

    def check(pair) -> Optional[str]:
        f, h = pair
        closed = hyperforest_coefficient(f, h)
        summed = coefficient_via_orientations(f, h)
        lam = minimal_support_partition(f, h)
        if any(popcount(e) % 2 for e in quotient_hypergraph(f, h, lam).hyperedges):
            odd.append(pair)
        return _mismatch(f"coefficient of {key_string(h)} in S({key_string(f)})", closed, summed)

    result = _run_group("hyperforest", "closed form", instances, check, progress)
    result.detail = result.detail or f"{len(odd)} instances with an odd hyperedge"
    return [result]


# -----------------------------------------------------------------------------
# worked-examples
# -----------------------------------------------------------------------------
_TWO_TRIANGLES = [[1, 2, 4], [2, 3, 4]]

_ORIENTATION_COMPOSITIONS = [
    "(4,3,2,1)", "(3,4,2,1)", "(34,2,1)", "(3,2,4,1)",
    "(2,4,3,1)", "(23,4,1)", "(1,4,3,2)", "(3,1,4,2)",
    "(1,2,4,3)", "(1,23,4)", "(1,24,3)", "(1,34,2)",
    "(3,12,4)", "(12,4,3)", "(123,4)", "(14,3,2)",
    "(3,14,2)", "(134,2)", "(3,24,1)", "(24,3,1)",
]


def _masks(parts: Sequence[Sequence[int]]) -> tuple:
    return tuple(mask_of(v - 1 for v in part) for part in parts)


def _two_triangles_antipode() -> Optional[str]:
    x = element_from_data("hg", _TWO_TRIANGLES, 4)
    expected = FormalSum(
        [
            (x, -1),
            (element_from_data("hg", [[1, 2, 4]], 4), 2),
            (element_from_data("hg", [[2, 3, 4]], 4), 2),
            (_edgeless(x), -2),
        ]
    )
    return (
        _mismatch("takeuchi", takeuchi_antipode(x), expected)
        or _mismatch("orientations", antipode_cocommutative(x, "orientations"), expected)
        or _mismatch("permutations", antipode_cocommutative(x, "permutations"), expected)
    )


def _two_triangles_orientations() -> Optional[str]:
    x = element_from_data("hg", _TWO_TRIANGLES, 4)
    y = _edgeless(x)
    h = quotient_hypergraph(x, y, minimal_support_partition(x, y))
    found = [orientation_composition(h, o) for o in enumerate_acyclic_orientations(h)]
    even = sum(1 for parts in found if len(parts) % 2 == 0)
    return _mismatch("A_O compositions", [composition_label(p) for p in found], _ORIENTATION_COMPOSITIONS) or _mismatch(
        "even and odd lengths", (even, len(found) - even), (9, 11)
    )


def _conflict_graph_example() -> Optional[str]:
    alpha = identity_order(8)
    x = element_from_data("g", [[1, 3], [2, 7], [6, 8], [5, 7], [2, 5], [2, 4]], 8)
    y = element_from_data("g", [[2, 5], [2, 4]], 8)
    beta = element_from_data("l", [1, 2, 4, 5, 6, 7, 8, 3], 8)
    lam = minimal_lambda(alpha, x, beta, y)
    failure = _mismatch("Lambda", lam, _masks([[1], [2, 4, 5], [6], [7], [8], [3]]))
    if failure:
        return failure
    return _mismatch("arcs", conflict_graph(alpha, x, beta, y, lam).arcs, ((2, 4), (3, 5), (5, 6))) or _mismatch(
        "coefficient", coefficient_lxh(alpha, x, beta, y), 0
    )


def _quotient_example() -> Optional[str]:
    x = element_from_data("hg", [[2, 3], [1, 2, 5], [1, 4, 5], [2, 3, 5]], 5)
    y = element_from_data("hg", [[2, 3]], 5)
    lam = minimal_support_partition(x, y)
    failure = _mismatch("Lambda", lam, _masks([[1], [2, 3], [4], [5]]))
    if failure:
        return failure
    h = quotient_hypergraph(x, y, lam)
    return (
        _mismatch("quotient", h.data()["hyperedges"], [[1, 3, 4], [2, 4]])
        or _mismatch("profile", support_length_profile(x, y), {2: 6, 3: 30, 4: 24})
        or _mismatch("coefficient", coefficient_via_orientations(x, y), 0)
    )


def _permutation_sum_example() -> Optional[str]:
    x = element_from_data("hg", _TWO_TRIANGLES, 4)
    contributions = {tau: c for tau, c in permutation_contributions(x, _edgeless(x)).items() if c}
    expected = {(0, 1, 3, 2): -1, (1, 2, 3, 0): -1, (2, 0, 1, 3): -1, (3, 2, 1, 0): 1}
    failure = _mismatch("contributing orderings", contributions, expected)
    if failure:
        return failure
    hx = Hypergraph(4, full_mask(4), x.edges)
    tau = (0, 1, 3, 2)
    g = conflict_graph(identity_order(4), hx, Order(4, full_mask(4), tau), _edgeless(hx), tuple(1 << t for t in tau))
    return _mismatch("conflict graph of 1243", g.arcs, ((1, 3), (3, 4)))


def _small_antipodes() -> Optional[str]:
    pi = element_from_data("pi", [[1, 2], [3]], 3)
    order = element_from_data("l", [2, 1], 2)
    e12 = identity_order(2)
    e21 = element_from_data("l", [2, 1], 2)
    return (
        _mismatch("S(12/3)", takeuchi_antipode(pi), FormalSum({pi: 1}))
        or _mismatch("S(21)", takeuchi_antipode(order), FormalSum({e12: 1}))
        or _mismatch("S(12, 12)", antipode_lxh(e12, e12), FormalSum({HadamardPair.of(e21, e21): 1}))
        or _mismatch("K(l) S(12)", kh_antipode(e12, "pr"), FormalSum({e12: 1}))
        or _mismatch("K(l) S(12) by takeuchi", kh_antipode_takeuchi(e12), FormalSum({e12: 1}))
    )


def _permutation_invariants() -> Optional[str]:
    alpha = element_from_data("l", [2, 1, 4, 3], 4)
    return (
        _mismatch("d(21, 12)", d_count((1, 0), (0, 1)), 2)
        or _mismatch("d(21, 21)", d_count((1, 0), (1, 0)), 1)
        or _mismatch("incomparability graph of 2143", incomparability_graph(alpha).data(), [[1, 2], [3, 4]])
        or _mismatch("chi_2143(-1)", chromatic_poly(alpha, zeta_epsilon())(-1), 4)
        or _mismatch("d(2143, 1234)", d_count(alpha.seq, (0, 1, 2, 3)), 4)
        or _mismatch("Psi_21 identity for 21", psi21_identity_check(element_from_data("l", [2, 1], 2)), (-1, -1))
    )


def _gbar_path() -> Optional[str]:
    x = element_from_data("g", [[1, 2], [2, 3]], 3)
    expected = FormalSum(
        [
            (x, 1),
            (element_from_data("g", [[1, 2]], 3), -1),
            (element_from_data("g", [[2, 3]], 3), -1),
            (_edgeless(x), 1),
        ]
    )
    return _mismatch("gbar(1-2-3)", gbar(x), expected)


def _cgraph_example() -> Optional[str]:
    g = NonNestingGraph(6, ((2, 4), (3, 5), (5, 6)))
    return _mismatch("c(G)", (c_graph_fast(g), c_graph_bruteforce(g)), (0, 0))


WORKED_EXAMPLES: Dict[str, Callable[[], Optional[str]]] = {
    "antipode of two triangles": _two_triangles_antipode,
    "20 acyclic orientations": _two_triangles_orientations,
    "conflict graph on 8 points": _conflict_graph_example,
    "quotient hypergraph on 5 points": _quotient_example,
    "permutation sum of two triangles": _permutation_sum_example,
    "small antipodes": _small_antipodes,
    "permutation invariants": _permutation_invariants,
    "gbar of a path": _gbar_path,
    "c(G) on 6 vertices": _cgraph_example,
}


def suite_worked_examples(cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    return [_single("worked-examples", name, check) for name, check in WORKED_EXAMPLES.items()]


# -----------------------------------------------------------------------------
# primitivity
# -----------------------------------------------------------------------------
def _primitive(x: Graph) -> Optional[str]:
    if primitivity_check(gbar(x)):
        return None
    return f"gbar({key_string(x)}) is not primitive"


def suite_primitivity(cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    results = []
    for n in range(1, cfg.VALIDATE.PRIMITIVITY_MAX_N + 1):
        connected = (x for x in all_elements("g", n) if len(x.classes()) == 1)
        results.append(_run_group("primitivity", f"connected g n={n}", connected, _primitive, progress))
    return results


SUITES: Dict[str, Callable[[CfgNode, bool], List[CaseResult]]] = {
    "antipode-axiom": suite_antipode_axiom,
    "oracle-equivalence": suite_oracle_equivalence,
    "pr-reciprocity": suite_pr_reciprocity,
    "hyperforest": suite_hyperforest,
    "worked-examples": suite_worked_examples,
    "primitivity": suite_primitivity,
}

# names accepted on the command line next to the keys of SUITES
SUITE_ALIASES: Dict[str, str] = {"paper-examples": "worked-examples"}


def _identity_axiom(n: int, cfg: CfgNode, progress: bool) -> List[CaseResult]:
    return [
        _run_group("antipode-axiom", f"{monoid} n={n}", all_elements(monoid, n), _axiom, progress)
        for monoid in ("l", "pi", "g", "hg", "sc", "hf")
    ]


def _identity_pr(n: int, cfg: CfgNode, progress: bool) -> List[CaseResult]:
    return [
        _run_group("pr-reciprocity", f"pr antipode n={n}", all_orders(n), _pr, progress),
        _run_group("pr-reciprocity", f"l chromatic n={n}", all_orders(n), _permutation_chromatic, progress),
    ]


def _identity_lxg(n: int, cfg: CfgNode, progress: bool) -> List[CaseResult]:
    pairs = itertools.product(all_orders(n), list(all_elements("g", n)))
    return [_run_group("oracle-equivalence", f"l x g n={n}", pairs, _lxh_pair, progress)]


def _identity_cgraph(n: int, cfg: CfgNode, progress: bool) -> List[CaseResult]:
    return [_run_group("oracle-equivalence", f"c(G) m={n}", enumerate_non_nested_graphs(n), _cgraph, progress)]


def _identity_chromatic(n: int, cfg: CfgNode, progress: bool) -> List[CaseResult]:
    check = _graph_chromatic(cfg.VALIDATE.COLORING_MAX_T)
    return [_run_group("pr-reciprocity", f"g chromatic n={n}", all_elements("g", n), check, progress)]


def _identity_psi21(n: int, cfg: CfgNode, progress: bool) -> List[CaseResult]:
    return [_run_group("pr-reciprocity", f"psi21 n={n}", all_orders(n), _psi21, progress)]


def _identity_primitivity(n: int, cfg: CfgNode, progress: bool) -> List[CaseResult]:
    connected = (x for x in all_elements("g", n) if len(x.classes()) == 1)
    return [_run_group("primitivity", f"connected g n={n}", connected, _primitive, progress)]


# one identity at a single size, for verify --identity
IDENTITIES: Dict[str, Callable[[int, CfgNode, bool], List[CaseResult]]] = {
    "antipode-axiom": _identity_axiom,
    "pr-reciprocity": _identity_pr,
    "lxg": _identity_lxg,
    "cgraph": _identity_cgraph,
    "chromatic": _identity_chromatic,
    "psi21": _identity_psi21,
    "primitivity": _identity_primitivity,
}


def run_identity(name: str, n: int, cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    if name not in IDENTITIES:
        raise ValueError(f"unknown identity '{name}', expected one of {sorted(IDENTITIES)}")
    if n < 1:
        raise ValueError("identities are checked for n >= 1")
    return IDENTITIES[name](n, cfg, progress)


def run_suites(names: Sequence[str], cfg: CfgNode, progress: bool = False) -> List[CaseResult]:
    """
    :param names: suite names, 'all' for every suite
    :param cfg: config with the VALIDATE section
    :param progress: tqdm bars on stderr
    :return: results in suite order
    """
    if "all" in names:
        names = list(SUITES)
    names = [SUITE_ALIASES.get(name, name) for name in names]
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suites {unknown}, expected some of {sorted(SUITES)} or 'all'")
    results = []
    for name in names:
        logging.info(f"running suite {name}")
        try:
            results.extend(SUITES[name](cfg, progress))
        except GuardExceededError as e:
            results.append(CaseResult(name, "guard", False, 0, str(e)))
    return results


def render_report(results: Sequence[CaseResult], fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps([asdict(r) for r in results], sort_keys=True)
    rows = [
        [r.suite, r.case, r.checked, colored("PASS", "green") if r.passed else colored("FAIL", "red"), r.detail]
        for r in results
    ]
    return tabulate(rows, headers=["suite", "case", "checked", "status", "detail"])
