import argparse
import logging
import sys

from hopfmon.config import get_cfg_defaults, load_cfg_from_file
from hopfmon.lib.utils import configure
from hopfmon.validate.suites import SUITE_ALIASES, SUITES, render_report, run_suites


def main() -> int:
    """
    Runs the verification suites and prints one line per group of instances. Exits with 5 when a group fails.
    """
    parser = argparse.ArgumentParser(description="hopfmon verification suites")
    parser.add_argument(
        "--suite",
        action="append",
        choices=sorted(SUITES) + sorted(SUITE_ALIASES) + ["all"],
        help="suite to run, may be repeated; default is every suite",
    )
    parser.add_argument("--config-file", type=str, help="YAML file merged over the default config")
    parser.add_argument("--seed", type=int, help="overrides VALIDATE.SEED")
    parser.add_argument("--format", choices=["json", "text"], default="text")
    parser.add_argument("--progress", action="store_true", help="show progress bars")
    parser.add_argument(
        "--log",
        type=int,
        default=3,
        help="Log Level: 0-Debug, 1-Info, 2-Warning, 3-Error, 4-Critical",
    )
    args = parser.parse_args()

    _log_map = [
        logging.DEBUG,
        logging.INFO,
        logging.WARNING,
        logging.ERROR,
        logging.CRITICAL,
    ]
    logging.basicConfig(
        level=_log_map[args.log],
        format="[%(asctime)s] hopfmon-validate [%(levelname)s]: %(message)s",
    )

    try:
        cfg = load_cfg_from_file(args.config_file) if args.config_file else get_cfg_defaults()
    except ValueError as e:
        print(f"hopfmon-validate: {e}", file=sys.stderr)
        return 2
    if args.seed is not None:
        cfg.defrost()
        cfg.VALIDATE.SEED = args.seed
    cfg.freeze()
    configure(cfg)

    results = run_suites(args.suite or ["all"], cfg, args.progress)
    print(render_report(results, args.format))

    failed = [r for r in results if not r.passed]
    logging.info(f"{len(results) - len(failed)} of {len(results)} groups passed")
    return 5 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
