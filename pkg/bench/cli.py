"""Command-line entry point: ``vc-bench --instance FILE [--method M ...]``."""

import argparse
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv
from pydantic import ValidationError

from bench.config import BenchConfig
from bench.report import emit_report, write_report
from bench.runner import run_batch
from graphs.io import GraphFormatError
from solver.config import Method, SolverConfig, get_solver_config

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_CONFIG_ERROR = 2


def build_parser(settings: dict) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vc-bench",
        description="Balanced vertex cover benchmark over the VertexCover propagator variants.",
    )
    parser.add_argument(
        "--instance", action="append", required=True, metavar="PATH",
        help="Instance file (repeatable)",
    )
    parser.add_argument("--format", choices=["dimacs", "edgelist"], default="dimacs")
    parser.add_argument(
        "--method", action="append", choices=[m.value for m in Method],
        help="Method variant (repeatable; default: all five)",
    )
    balance = parser.add_mutually_exclusive_group()
    balance.add_argument("--balance", type=int, metavar="B", help="Absolute tolerance b")
    balance.add_argument(
        "--balance-ratio", type=float, metavar="R", help="Tolerance as round(R * n)"
    )
    parser.add_argument("--seed", type=int, default=0, help="Partition seed")
    parser.add_argument(
        "--time-limit", type=float, default=settings["time_limit"], metavar="SECS"
    )
    parser.add_argument(
        "--lambda", dest="node_limit", type=int, default=settings["node_limit"],
        metavar="N", help="Witness branch & bound node budget",
    )
    parser.add_argument("--out", metavar="CSV", help="Write the CSV report here")
    parser.add_argument("--workers", type=int, default=settings["workers"])
    parser.add_argument(
        "--log-level", default=settings["log_level"],
        choices=["DEBUG", "INFO", "WARNING", "ERROR"],
    )
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    load_dotenv()
    settings = get_solver_config()
    args = build_parser(settings).parse_args(argv)

    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    )

    if args.balance is None and args.balance_ratio is None:
        args.balance = SolverConfig.DEFAULT_BALANCE
    methods = args.method or [m.value for m in Method]

    try:
        configs = [
            BenchConfig(
                instance=instance,
                format=args.format,
                method=method,
                balance=args.balance,
                balance_ratio=args.balance_ratio,
                seed=args.seed,
                time_limit=args.time_limit,
                node_limit=args.node_limit,
                out=args.out,
            )
            for instance in args.instance
            for method in methods
        ]
    except ValidationError as exc:
        logger.error(f"Invalid configuration: {exc}")
        return EXIT_CONFIG_ERROR

    try:
        records = run_batch(configs, workers=max(1, args.workers))
    except (GraphFormatError, ValueError, OSError) as exc:
        logger.error(f"Cannot run instance: {exc}")
        return EXIT_INPUT_ERROR

    csv_text, table = emit_report(records)
    print(table)
    if args.out:
        write_report(records, args.out)
    else:
        print(csv_text, end="")
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
