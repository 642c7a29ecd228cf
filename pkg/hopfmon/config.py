import os.path

from yacs.config import CfgNode as CN

# -----------------------------------------------------------------------------
# Config definition
# -----------------------------------------------------------------------------
_C = CN()

# -----------------------------------------------------------------------------
# System
# -----------------------------------------------------------------------------
_C.SYSTEM = CN()
_C.SYSTEM.NUM_WORKERS = 1

# Enumeration limits. Everything downstream iterates 2^n subsets, all set
# compositions, all orientations or all permutations of the quotient.
_C.COMBINATORICS = CN()
_C.COMBINATORICS.ENUMERATION_GUARD = 16
_C.COMBINATORICS.ORIENTATION_GUARD = 1_000_000
_C.COMBINATORICS.PERMUTATION_GUARD = 8

_C.FORMAL_SUM = CN()
_C.FORMAL_SUM.MAX_ABS_COEFFICIENT = 2**63 - 1

# Characters are spot checked for multiplicativity when they are built
_C.INVARIANTS = CN()
_C.INVARIANTS.CHARACTER_SAMPLES = 100
_C.INVARIANTS.CHARACTER_MAX_DEGREE = 5
_C.INVARIANTS.SEED = 0

# -----------------------------------------------------------------------------
# Verification suites
# -----------------------------------------------------------------------------
_C.VALIDATE = CN()
_C.VALIDATE.SEED = 0

_C.VALIDATE.AXIOM_MAX_N = 4
_C.VALIDATE.AXIOM_RANDOM_HG_N = 5
_C.VALIDATE.AXIOM_RANDOM_SAMPLES = 50
_C.VALIDATE.DOUBLE_ANTIPODE_MAX_N = 4

_C.VALIDATE.ORDER_MAX_N = 6
_C.VALIDATE.PARTITION_MAX_N = 6
_C.VALIDATE.LXG_MAX_N = 4
_C.VALIDATE.LXG_RANDOM_N = 5
_C.VALIDATE.LXG_RANDOM_SAMPLES = 50
_C.VALIDATE.LXH_INNER_MAX_N = 4
_C.VALIDATE.CGRAPH_MAX_M = 7
_C.VALIDATE.COCOMMUTATIVE_MAX_N = 5
_C.VALIDATE.COCOMMUTATIVE_HG_MAX_N = 4
_C.VALIDATE.PERMUTATION_METHOD_MAX_N = 5
_C.VALIDATE.KH_MAX_N = 4

_C.VALIDATE.GRAPH_MAX_N = 5
_C.VALIDATE.COLORING_MAX_T = 4

_C.VALIDATE.HYPERFOREST_SAMPLES = 100
_C.VALIDATE.HYPERFOREST_MAX_VERTICES = 8
_C.VALIDATE.HYPERFOREST_MAX_EDGES = 4

_C.VALIDATE.PR_MAX_N = 5
_C.VALIDATE.CHROMATIC_PERMUTATION_MAX_N = 6
_C.VALIDATE.PSI21_EXHAUSTIVE_N = [2, 4]
_C.VALIDATE.PSI21_RANDOM_N = 6
_C.VALIDATE.PSI21_RANDOM_SAMPLES = 50

_C.VALIDATE.PRIMITIVITY_MAX_N = 5


def get_cfg_defaults():
    r"""Get a yacs CfgNode object with default values for hopfmon."""
    # Return a clone so that the defaults will not be altered
    return _C.clone()


def load_cfg_from_file(path: str):
    """Load configurations from a YAML file on top of the defaults."""
    cfg = get_cfg_defaults()
    if os.path.exists(path):
        cfg.merge_from_file(path)
    else:
        raise ValueError("Could not find config file from path!")
    cfg.freeze()

    return cfg
