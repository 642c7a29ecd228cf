import logging
from typing import Dict, Optional

from yacs.config import CfgNode

from hopfmon.config import get_cfg_defaults
from hopfmon.lib.errors import GuardExceededError

_LIMITS: Dict[str, int] = {}


def configure(cfg: CfgNode) -> None:
    """
    Installs the limits of a config as the active ones for this process.

    :param cfg: hopfmon config
    :return: None
    """
    _LIMITS["enumeration"] = cfg.COMBINATORICS.ENUMERATION_GUARD
    _LIMITS["orientation"] = cfg.COMBINATORICS.ORIENTATION_GUARD
    _LIMITS["permutation"] = cfg.COMBINATORICS.PERMUTATION_GUARD
    _LIMITS["coefficient"] = cfg.FORMAL_SUM.MAX_ABS_COEFFICIENT
    _LIMITS["character_samples"] = cfg.INVARIANTS.CHARACTER_SAMPLES
    _LIMITS["character_max_degree"] = cfg.INVARIANTS.CHARACTER_MAX_DEGREE
    _LIMITS["character_seed"] = cfg.INVARIANTS.SEED
    logging.debug(f"active limits: {_LIMITS}")


def active_limits() -> Dict[str, int]:
    return dict(_LIMITS)


def set_limits(limits: Dict[str, int]) -> None:
    """used by worker processes to inherit the parent's limits"""
    _LIMITS.update(limits)


def max_coefficient() -> int:
    return _LIMITS["coefficient"]


def setting(key: str) -> int:
    return _LIMITS[key]


def check_guard(size: int, limit: Optional[int] = None, kind: str = "enumeration") -> None:
    """
    Raises if an enumeration of the given size is over its limit.

    :param size: ground set size, orientation count or quotient size
    :param limit: explicit limit, overrides the configured one
    :param kind: one of 'enumeration', 'orientation', 'permutation'
    :return: None
    """
    bound = _LIMITS[kind] if limit is None else limit
    if size > bound:
        raise GuardExceededError(
            f"{kind} size {size} exceeds the limit {bound}; pass --limit to raise it"
        )


configure(get_cfg_defaults())
