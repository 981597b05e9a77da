"""
Main Module
Entry point for the Circle Trace Engine.
Parses the command line, configures logging, runs the selected command and
prints its report.
"""

import logging
import sys
from pathlib import Path

# Add src to path
sys.path.insert(0, str(Path(__file__).parent))

from src.cli import EXIT_INPUT, build_parser, execute, render


def configure_logging(verbose: bool) -> None:
    """
    Send library logs to stderr.

    Args:
        verbose (bool): DEBUG when set, WARNING otherwise
    """
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr
    )


def banner(title: str) -> None:
    print("=" * 60, file=sys.stderr)
    print(title, file=sys.stderr)
    print("=" * 60, file=sys.stderr)


def main():
    """
    Main function with CLI argument parsing.
    """
    parser = build_parser()
    args = parser.parse_args()
    configure_logging(args.verbose)

    if not args.json:
        banner(f"CIRCLE TRACE ENGINE: {args.command.upper()}")

    try:
        report = execute(args)
    except KeyboardInterrupt:
        print("\n❌ Interrupted", file=sys.stderr)
        sys.exit(EXIT_INPUT)

    print(render(report, args.json))

    if not args.json:
        print("\n" + "=" * 60, file=sys.stderr)
        if report.status == "pass":
            print(f"✓ {args.command} passed in {report.wall_time_seconds}s", file=sys.stderr)
        else:
            print(f"❌ {args.command}: {report.status} ({len(report.failures)} failures)", file=sys.stderr)
        print("=" * 60, file=sys.stderr)

    sys.exit(report.exit_code)


if __name__ == "__main__":
    main()
