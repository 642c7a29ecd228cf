import pytest

from hopfmon.config import get_cfg_defaults
from hopfmon.lib.utils import configure


@pytest.fixture(autouse=True)
def default_limits():
    configure(get_cfg_defaults())
    yield
    configure(get_cfg_defaults())


@pytest.fixture
def small_cfg():
    """Verification config small enough for the test suite."""
    cfg = get_cfg_defaults()
    cfg.merge_from_list(
        [
            "VALIDATE.AXIOM_MAX_N", 2,
            "VALIDATE.AXIOM_RANDOM_HG_N", 3,
            "VALIDATE.AXIOM_RANDOM_SAMPLES", 3,
            "VALIDATE.DOUBLE_ANTIPODE_MAX_N", 2,
            "VALIDATE.ORDER_MAX_N", 3,
            "VALIDATE.PARTITION_MAX_N", 3,
            "VALIDATE.LXG_MAX_N", 2,
            "VALIDATE.LXG_RANDOM_N", 3,
            "VALIDATE.LXG_RANDOM_SAMPLES", 3,
            "VALIDATE.LXH_INNER_MAX_N", 2,
            "VALIDATE.CGRAPH_MAX_M", 4,
            "VALIDATE.COCOMMUTATIVE_MAX_N", 2,
            "VALIDATE.COCOMMUTATIVE_HG_MAX_N", 2,
            "VALIDATE.PERMUTATION_METHOD_MAX_N", 2,
            "VALIDATE.KH_MAX_N", 2,
            "VALIDATE.GRAPH_MAX_N", 3,
            "VALIDATE.COLORING_MAX_T", 3,
            "VALIDATE.HYPERFOREST_SAMPLES", 10,
            "VALIDATE.HYPERFOREST_MAX_VERTICES", 5,
            "VALIDATE.HYPERFOREST_MAX_EDGES", 3,
            "VALIDATE.PR_MAX_N", 3,
            "VALIDATE.CHROMATIC_PERMUTATION_MAX_N", 3,
            "VALIDATE.PSI21_EXHAUSTIVE_N", [2],
            "VALIDATE.PSI21_RANDOM_N", 4,
            "VALIDATE.PSI21_RANDOM_SAMPLES", 3,
            "VALIDATE.PRIMITIVITY_MAX_N", 3,
        ]
    )
    cfg.freeze()
    return cfg
