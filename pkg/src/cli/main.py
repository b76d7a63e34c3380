"""
Command-line front end.

Sub-commands:
    enumerate  stream every connected induced k-subgraph, one per line
    verify     build the supergraph and check connectivity and diameter
    bench      measure enumeration delay, CSV or key=value output

Exit codes:
    0  success (including zero solutions)
    1  parse, validation or usage error
    2  solution dictionary cap exceeded
    3  verification failed
"""

import argparse
import sys
from typing import List, Optional

from ..benchmark.delay import ALGORITHMS, reports_to_csv
from ..orchestration.runner import EnumerationRunner
from ..utils.config import DICTIONARY_BACKENDS, TRAVERSAL_ORDERS, Config
from ..utils.errors import DictionaryCapExceeded, EnumerationError
from ..utils.logging_config import bind_run_context, clear_run_context, get_logger, setup_logging

EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_DICTIONARY_CAP = 2
EXIT_VERIFICATION_FAILED = 3


class UsageError(Exception):
    """Command-line arguments were rejected."""


class CliArgumentParser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message: str) -> None:
        self.print_usage(sys.stderr)
        raise UsageError(message)


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument(
        "--input",
        type=str,
        help="Edge-list file, or '-' for standard input"
    )
    source.add_argument(
        "--recipe",
        type=str,
        help="Generated graph family:n[:p:seed], e.g. gnp:8:0.4:7"
    )
    parser.add_argument(
        "--relabel",
        action="store_true",
        help="Remap sparse vertex labels densely; output restores the originals"
    )
    parser.add_argument(
        "--k",
        type=int,
        required=True,
        help="Order of the enumerated subgraphs"
    )


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all sub-commands."""
    parser = CliArgumentParser(
        description="Enumerate connected induced subgraphs of order k"
    )
    parser.add_argument("--config", type=str, default=None, help="Path to config YAML file")
    parser.add_argument("--env", type=str, default=None, help="Path to .env file")
    parser.add_argument(
        "--log-level",
        type=str,
        choices=["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"],
        default=None,
        help="Logging level (defaults to the configured level)"
    )
    parser.add_argument("--json-logs", action="store_true", help="Output logs in JSON format")

    commands = parser.add_subparsers(dest="command", required=True)

    enumerate_cmd = commands.add_parser("enumerate", help="Stream all solutions")
    _add_graph_source(enumerate_cmd)
    enumerate_cmd.add_argument("--algorithm", choices=ALGORITHMS, default="irwd")
    enumerate_cmd.add_argument(
        "--count-only",
        action="store_true",
        help="Print only the number of solutions"
    )
    enumerate_cmd.add_argument(
        "--max-dict",
        type=int,
        default=None,
        help="Solution dictionary cap (0 = unlimited)"
    )
    enumerate_cmd.add_argument("--traversal", choices=TRAVERSAL_ORDERS, default=None)
    enumerate_cmd.add_argument("--dictionary", choices=DICTIONARY_BACKENDS, default=None)
    enumerate_cmd.add_argument(
        "--no-flush",
        action="store_true",
        help="Do not flush after every solution"
    )

    verify_cmd = commands.add_parser("verify", help="Check supergraph connectivity and diameter")
    _add_graph_source(verify_cmd)
    verify_cmd.add_argument("--operator", choices=("irwd", "rwd"), default="irwd")
    verify_cmd.add_argument("--format", choices=("text", "kv"), default="text")
    verify_cmd.add_argument(
        "--connectivity-only",
        action="store_true",
        help="Exit status depends on supergraph connectivity alone, not the diameter bound"
    )
    verify_cmd.add_argument(
        "--check-operator",
        action="store_true",
        help="Also compare generated neighbors with the definition"
    )

    bench_cmd = commands.add_parser("bench", help="Measure enumeration delay")
    _add_graph_source(bench_cmd)
    bench_cmd.add_argument("--algorithm", choices=ALGORITHMS, default="irwd")
    bench_cmd.add_argument("--repeat", type=int, default=None, help="Number of runs")
    bench_cmd.add_argument("--format", choices=("csv", "kv"), default="csv")
    bench_cmd.add_argument("--graph-id", type=str, default=None, help="Label for the report")
    bench_cmd.add_argument("--max-dict", type=int, default=None)

    return parser


def cmd_enumerate(args: argparse.Namespace, runner: EnumerationRunner) -> int:
    graph, _ = runner.load_graph(args.input, args.recipe, args.relabel)
    out = sys.stdout
    flush = runner.config.flush_output and not args.no_flush
    label = graph.label

    if args.count_only:
        def sink(solution):
            pass
    else:
        def sink(solution):
            out.write(" ".join(str(label(v)) for v in solution) + "\n")
            if flush:
                out.flush()

    count = runner.enumerate(
        graph,
        args.k,
        args.algorithm,
        sink,
        max_dict_entries=args.max_dict,
        traversal=args.traversal,
        dictionary_backend=args.dictionary,
    )

    if args.count_only:
        print(count, file=out)
    else:
        out.flush()
        print(f"count={count}", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, runner: EnumerationRunner) -> int:
    graph, _ = runner.load_graph(args.input, args.recipe, args.relabel)
    report, mismatches = runner.verify(graph, args.k, args.operator, args.check_operator)

    if args.format == "kv":
        sys.stdout.write(report.to_key_value())
        if args.check_operator:
            sys.stdout.write(f"operator_mismatches={len(mismatches)}\n")
    else:
        sys.stdout.write(report.to_text())
        if args.check_operator:
            sys.stdout.write(f"  generator mismatches: {len(mismatches)}\n")

    ok = report.connected if args.connectivity_only else report.passed
    if not ok or mismatches:
        return EXIT_VERIFICATION_FAILED
    return EXIT_OK


def cmd_bench(args: argparse.Namespace, runner: EnumerationRunner) -> int:
    graph, graph_id = runner.load_graph(args.input, args.recipe, args.relabel)
    reports = runner.bench(
        graph,
        args.k,
        args.algorithm,
        graph_id=args.graph_id or graph_id,
        repeat=args.repeat,
        max_dict_entries=args.max_dict,
    )
    if args.format == "kv":
        sys.stdout.write("\n".join(report.to_key_value() for report in reports))
    else:
        sys.stdout.write(reports_to_csv(reports))
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "verify": cmd_verify,
    "bench": cmd_bench,
}


def main(argv: Optional[List[str]] = None) -> int:
    """Parse arguments, run the sub-command and map failures to exit codes."""
    try:
        args = build_parser().parse_args(argv)
    except UsageError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    try:
        config = Config(config_path=args.config, env_path=args.env)
        setup_logging(
            log_level=args.log_level or config.log_level,
            json_logs=args.json_logs or config.json_logs,
        )
    except EnumerationError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

    # every log line of this invocation carries the command and order
    clear_run_context()
    bind_run_context(command=args.command, k=args.k)
    logger = get_logger(__name__)
    logger.debug("Command started")

    try:
        return COMMANDS[args.command](args, EnumerationRunner(config))
    except DictionaryCapExceeded as e:
        logger.error("Dictionary cap exceeded", cap=e.cap)
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_DICTIONARY_CAP
    except (EnumerationError, OSError) as e:
        logger.error("Command failed", command=args.command, error=str(e))
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
