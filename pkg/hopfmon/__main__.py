import argparse
import json
import logging
import sys
from typing import Callable, Dict, List

from yacs.config import CfgNode

from hopfmon.config import get_cfg_defaults, load_cfg_from_file
from hopfmon.lib.cocommutative import (
    QuotientHypergraph,
    antipode_cocommutative,
    enumerate_acyclic_orientations,
    flats_antipode,
    orientation_composition,
    orientation_count,
    quotient_digraph,
)
from hopfmon.lib.compositions import elements
from hopfmon.lib.errors import (
    CoefficientOverflowError,
    GuardExceededError,
    MonoidMismatchError,
    VerificationError,
)
from hopfmon.lib.formal_sum import FormalSum
from hopfmon.lib.invariants import CHARACTERS, chromatic_poly, psi
from hopfmon.lib.lxh import antipode_lxh, kh_antipode
from hopfmon.lib.monoids import BasisElement, HadamardPair
from hopfmon.lib.nonnesting import NonNestingGraph, c_graph_bruteforce, c_graph_fast, c_graph_fixed_points
from hopfmon.lib.takeuchi import takeuchi_antipode
from hopfmon.lib.utils import configure
from hopfmon.utils.io import (
    composition_label,
    int_composition_label,
    parse_arcs,
    parse_element,
    render_sum,
    render_table,
)
from hopfmon.validate.suites import IDENTITIES, SUITE_ALIASES, SUITES, render_report, run_identity, run_suites

_log_map = [
    logging.DEBUG,
    logging.INFO,
    logging.WARNING,
    logging.ERROR,
    logging.CRITICAL,
]

# methods that apply to each monoid, the first one is the default
METHODS: Dict[str, List[str]] = {
    "l": ["takeuchi"],
    "pi": ["takeuchi", "orientations", "permutations"],
    "g": ["takeuchi", "orientations", "permutations", "flats"],
    "hg": ["takeuchi", "orientations", "permutations"],
    "sc": ["takeuchi", "orientations", "permutations", "flats"],
    "hf": ["takeuchi", "orientations", "permutations"],
    "lxh": ["takeuchi", "lxh"],
    "kl": ["takeuchi", "lxh", "pr"],
}


# -----------------------------------------------------------------------------
# antipode
# -----------------------------------------------------------------------------
def compute_antipode(monoid: str, x: BasisElement, method: str, jobs: int = 1) -> FormalSum:
    if method not in METHODS[monoid]:
        raise MonoidMismatchError(f"method '{method}' does not apply to '{monoid}', use one of {METHODS[monoid]}")
    if monoid == "kl":
        return kh_antipode(x, method, jobs=jobs)
    if method == "takeuchi":
        return takeuchi_antipode(x, jobs=jobs)
    if method == "lxh":
        return antipode_lxh(x.order, x.inner, jobs=jobs)
    if method == "flats":
        return flats_antipode(x, jobs=jobs)
    return antipode_cocommutative(x, method, jobs=jobs)


def cmd_antipode(args: argparse.Namespace, cfg: CfgNode) -> int:
    monoid = args.monoid
    if monoid == "lxh" and args.inner is None:
        raise ValueError("--inner is needed with --monoid lxh")
    x = parse_element("l" if monoid == "kl" else monoid, args.element, args.n, args.inner)
    if isinstance(x, HadamardPair) and monoid != "lxh":
        raise MonoidMismatchError(f"an L x H element was given for --monoid {monoid}")

    method = args.method or METHODS[monoid][0]
    s = compute_antipode(monoid, x, method, args.jobs)
    if args.verify:
        for other in METHODS[monoid]:
            if other == method:
                continue
            t = compute_antipode(monoid, x, other, args.jobs)
            if t != s:
                raise VerificationError(f"methods '{method}' and '{other}' disagree")
            logging.info(f"'{other}' agrees with '{method}'")
    print(render_sum(s, args.format))
    return 0


# -----------------------------------------------------------------------------
# cgraph
# -----------------------------------------------------------------------------
_CGRAPH: Dict[str, Callable[[NonNestingGraph], int]] = {
    "fast": c_graph_fast,
    "bruteforce": c_graph_bruteforce,
    "fixed-points": c_graph_fixed_points,
}


def cmd_cgraph(args: argparse.Namespace, cfg: CfgNode) -> int:
    g = NonNestingGraph.from_arcs(args.m, parse_arcs(args.arcs))
    print(_CGRAPH[args.method](g))
    return 0


# -----------------------------------------------------------------------------
# orientations
# -----------------------------------------------------------------------------
def _orientation_label(arcs) -> str:
    def block(mask: int) -> str:
        return "".join(str(v + 1) for v in elements(mask))

    return " ".join(f"{block(head)}>{block(tail)}" for head, tail in arcs)


def cmd_orientations(args: argparse.Namespace, cfg: CfgNode) -> int:
    x = parse_element("hg", args.hyperedges, args.n)
    h = QuotientHypergraph(x.n, tuple(sorted(x.edges, key=elements)), tuple(1 << v for v in range(x.n)))
    acyclic = enumerate_acyclic_orientations(h)
    logging.info(f"{len(acyclic)} of {orientation_count(h)} orientations are acyclic")

    if args.list:
        rows = []
        for o in acyclic:
            parts = orientation_composition(h, o)
            rows.append([_orientation_label(o.arcs), composition_label(parts), len(parts)])
        print(render_table(rows, ["orientation", "composition", "length"], args.format))
    elif args.sum:
        print(sum(-1 if quotient_digraph(h, o).number_of_nodes() % 2 else 1 for o in acyclic))
    else:
        print(len(acyclic))
    return 0


# -----------------------------------------------------------------------------
# chromatic
# -----------------------------------------------------------------------------
def cmd_chromatic(args: argparse.Namespace, cfg: CfgNode) -> int:
    if args.permutation is not None:
        x = parse_element("l", args.permutation)
        character = args.character or "epsilon"
    else:
        x = parse_element("g", args.graph, args.n)
        character = args.character or "discrete"
    zeta = CHARACTERS[character]()

    if args.table:
        rows = [[int_composition_label(a), c] for a, c in sorted(psi(x, zeta).items())]
        print(render_table(rows, ["composition", "coefficient"], args.format))
        return 0

    chi = chromatic_poly(x, zeta)
    if args.eval is not None:
        print(chi(args.eval))
    elif args.format == "json":
        print(json.dumps(chi.to_json(), sort_keys=True))
    else:
        print(chi.to_json()["monomial"])
    return 0


# -----------------------------------------------------------------------------
# verify
# -----------------------------------------------------------------------------
def cmd_verify(args: argparse.Namespace, cfg: CfgNode) -> int:
    if args.seed is not None:
        cfg.defrost()
        cfg.VALIDATE.SEED = args.seed
        cfg.freeze()
    if args.identity is not None:
        if args.n is None:
            raise ValueError("--identity needs --n")
        results = run_identity(args.identity, args.n, cfg, args.progress)
    else:
        results = run_suites(args.suite or ["all"], cfg, args.progress)
    print(render_report(results, args.format))
    return 0 if all(r.passed for r in results) else 5


COMMANDS = {
    "antipode": cmd_antipode,
    "cgraph": cmd_cgraph,
    "orientations": cmd_orientations,
    "chromatic": cmd_chromatic,
    "verify": cmd_verify,
}


def _general_arguments() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    general = common.add_argument_group("general arguments")
    general.add_argument(
        "--log",
        type=int,
        default=3,
        help="Log Level: 0-Debug, 1-Info, 2-Warning, 3-Error, 4-Critical",
    )
    general.add_argument("--config-file", type=str, help="YAML file merged over the default config")
    general.add_argument(
        "--limit",
        type=int,
        help="raise the enumeration guard to this ground set size",
    )
    general.add_argument("--jobs", type=int, help="worker processes, default SYSTEM.NUM_WORKERS")
    general.add_argument("--format", choices=["json", "text"], default="json", help="output format")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _general_arguments()
    parser = argparse.ArgumentParser(
        prog="hopfmon",
        description="exact antipodes of linearized Hopf monoids",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    antipode = commands.add_parser("antipode", parents=[common], help="antipode of a basis element")
    antipode_args = antipode.add_argument_group("antipode arguments")
    antipode_args.add_argument("--monoid", choices=sorted(METHODS), required=True)
    antipode_args.add_argument("--element", type=str, required=True, help="JSON data or shorthand, 1-based")
    antipode_args.add_argument("--n", type=int, help="ground set size, default is the largest label")
    antipode_args.add_argument(
        "--inner", choices=["l", "pi", "g", "hg", "sc", "hf"], help="second factor H of L x H"
    )
    antipode_args.add_argument(
        "--method", choices=["takeuchi", "lxh", "orientations", "permutations", "pr", "flats"]
    )
    antipode_args.add_argument(
        "--verify", action="store_true", help="run every applicable method and compare"
    )

    cgraph = commands.add_parser("cgraph", parents=[common], help="signed count c(G) of a non-nesting graph")
    cgraph_args = cgraph.add_argument_group("cgraph arguments")
    cgraph_args.add_argument("--m", type=int, required=True, help="number of vertices")
    cgraph_args.add_argument("--arcs", type=str, default="", help="arcs as a-b,c-d")
    cgraph_args.add_argument("--method", choices=sorted(_CGRAPH), default="fast")

    orientations = commands.add_parser("orientations", parents=[common], help="acyclic orientations of a hypergraph")
    orientation_args = orientations.add_argument_group("orientation arguments")
    orientation_args.add_argument("--hyperedges", type=str, required=True, help="hyperedges as 1,2,4/2,3,4")
    orientation_args.add_argument("--n", type=int, help="number of vertices, default is the largest label")
    mode = orientation_args.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true", help="number of acyclic orientations (default)")
    mode.add_argument("--list", action="store_true", help="acyclic orientations with their compositions")
    mode.add_argument("--sum", action="store_true", help="signed sum over acyclic orientations")

    chromatic = commands.add_parser("chromatic", parents=[common], help="chromatic polynomials from characters")
    chromatic_args = chromatic.add_argument_group("chromatic arguments")
    source = chromatic_args.add_mutually_exclusive_group(required=True)
    source.add_argument("--permutation", type=str, help="permutation in one-line notation")
    source.add_argument("--graph", type=str, help="graph as 1-2,2-3")
    chromatic_args.add_argument("--n", type=int, help="number of vertices of the graph")
    chromatic_args.add_argument("--character", choices=sorted(CHARACTERS))
    chromatic_args.add_argument("--eval", type=int, help="evaluate chi at this integer")
    chromatic_args.add_argument("--poly", action="store_true", help="print the polynomial (default)")
    chromatic_args.add_argument("--table", action="store_true", help="print the coefficients of Psi")

    verify = commands.add_parser("verify", parents=[common], help="verification suites")
    verify_args = verify.add_argument_group("verify arguments")
    target = verify_args.add_mutually_exclusive_group()
    target.add_argument("--suite", action="append", choices=sorted(SUITES) + sorted(SUITE_ALIASES) + ["all"])
    target.add_argument("--identity", choices=sorted(IDENTITIES))
    verify_args.add_argument("--n", type=int, help="size for --identity")
    verify_args.add_argument("--seed", type=int, help="overrides VALIDATE.SEED")
    verify_args.add_argument("--progress", action="store_true", help="show progress bars")
    return parser


def _configure(args: argparse.Namespace) -> CfgNode:
    cfg = load_cfg_from_file(args.config_file) if args.config_file else get_cfg_defaults()
    cfg.defrost()
    if args.limit is not None:
        print(
            f"hopfmon: enumeration guard raised from {cfg.COMBINATORICS.ENUMERATION_GUARD} to {args.limit}",
            file=sys.stderr,
        )
        cfg.COMBINATORICS.ENUMERATION_GUARD = args.limit
    if args.jobs is None:
        args.jobs = cfg.SYSTEM.NUM_WORKERS
    cfg.freeze()
    configure(cfg)
    return cfg


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=_log_map[args.log],
        format="[%(asctime)s] hopfmon [%(levelname)s]: %(message)s",
    )

    try:
        cfg = _configure(args)
        return COMMANDS[args.command](args, cfg)
    except (GuardExceededError, CoefficientOverflowError) as e:
        print(f"hopfmon: {e}", file=sys.stderr)
        return 3
    except MonoidMismatchError as e:
        print(f"hopfmon: {e}", file=sys.stderr)
        return 4
    except VerificationError as e:
        print(f"hopfmon: {e}", file=sys.stderr)
        return 5
    except (ValueError, TypeError) as e:
        # malformed element data reaches the constructors as a TypeError
        print(f"hopfmon: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
