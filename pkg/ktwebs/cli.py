#!/usr/bin/env python3
"""
Command-line interface for ktwebs.
"""

import argparse
import json
import os
import sys

from . import __version__
from .commands import COMMANDS, Options
from .core import Config, MalformedInput
from .execution import run_batch, run_single_document
from .inputs import read_input, split_documents
from .reporting import dumps, report_batch_summary, report_item, status


def load_config(config_file="ktwebs.json"):
    """
    Load configuration from a JSON file if present, else use defaults.

    Args:
        config_file: Path to the configuration file

    Returns:
        Config object containing configuration settings
    """
    try:
        if os.path.exists(config_file):
            with open(config_file, "r", encoding="utf-8") as f:
                data = json.load(f)
            config = Config(data)
            status(f"📄 Loaded configuration from {config_file}", config)
            return config
        status(f"📄 No configuration file found at {config_file}, using defaults")
        return Config()
    except json.JSONDecodeError as e:
        status(f"⚠️ Error parsing configuration file {config_file}: {e}")
        status("📄 Using default configuration")
        return Config()
    except Exception as e:
        status(f"⚠️ Error loading configuration file {config_file}: {e}")
        status("📄 Using default configuration")
        return Config()


def parse_region(text):
    """Parse 'x0,y0,x1,y1' into a tuple of floats."""
    try:
        values = tuple(float(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"region must be x0,y0,x1,y1, got {text!r}")
    if len(values) != 4:
        raise argparse.ArgumentTypeError(f"region must have four numbers, got {text!r}")
    if values[0] >= values[2] or values[1] >= values[3]:
        raise argparse.ArgumentTypeError(f"region must satisfy x0 < x1 and y0 < y1, got {text!r}")
    return values


def create_argument_parser():
    """
    Create and configure the argument parser.

    Returns:
        Configured ArgumentParser object
    """
    parser = argparse.ArgumentParser(
        prog="ktwebs",
        description="Classify Killing tensors on the Euclidean plane, compute moving frames and separable webs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  echo '{"alpha": [1, -6, 2, 0, 0, 0]}' | ktwebs classify
  ktwebs equivalent --in pair.json
  ktwebs frame --in tensor.json
  ktwebs separate --in yatsun.json
  ktwebs render --in tensor.json --format svg --out web.svg --region -2,-2,2,2 --curves 9
  ktwebs classify --in batch.jsonl --jobs 4
        """,
    )
    parser.add_argument("command", choices=sorted(COMMANDS), help="Operation to run")
    parser.add_argument("--in", dest="input", default="-",
                        help="Input document or batch file (default: stdin)")
    parser.add_argument("--out", default=None, help="Output file for render (SVG or CSV)")
    parser.add_argument("--tol", type=float, default=None,
                        help="Equivalence tolerance for float leaf labels")
    parser.add_argument("--region", type=parse_region, default=None,
                        help="Render region x0,y0,x1,y1")
    parser.add_argument("--curves", type=int, default=None, help="Curves per family for render")
    parser.add_argument("--samples", type=int, default=None, help="Samples per curve for render")
    parser.add_argument("--format", dest="fmt", choices=["svg", "csv", "json"], default=None,
                        help="Render output format (default: svg with --out, else json)")
    parser.add_argument("--jobs", type=int, default=None, help="Worker processes for batch input")
    parser.add_argument("--config", default="ktwebs.json",
                        help="Configuration file path (default: ktwebs.json)")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    return parser


def main(args=None):
    """
    Main entry point for the ktwebs CLI.

    Args:
        args: Command line arguments (uses sys.argv if None)

    Returns:
        Exit code (0 success, 2 domain error, 1 malformed input or IO failure)
    """
    if args is None:
        args = sys.argv[1:]

    parser = create_argument_parser()
    try:
        parsed_args = parser.parse_args(args)
    except SystemExit as e:
        # argparse usage errors count as malformed input
        return 1 if e.code == 2 else e.code

    config = load_config(parsed_args.config)
    if parsed_args.tol is not None:
        if parsed_args.tol < 0:
            status("❌ --tol must be non-negative", config)
            return 1
        config = config.with_overrides({"equivalence": parsed_args.tol})

    fmt = parsed_args.fmt or ("svg" if parsed_args.out else "json")
    options = Options(
        out=parsed_args.out,
        region=parsed_args.region,
        curves=parsed_args.curves,
        samples=parsed_args.samples,
        fmt=fmt,
    )

    try:
        documents, is_batch = split_documents(read_input(parsed_args.input))
    except MalformedInput as e:
        status(f"❌ {e}", config)
        print(dumps(e.to_dict()))
        return 1
    except OSError as e:
        status(f"❌ {e}", config)
        print(dumps({"error": "IOError", "message": str(e)}))
        return 1

    if not is_batch:
        result = run_single_document(parsed_args.command, documents[0], config, options)
        if result.status != "ok":
            status(f"❌ {result.error['error']}: {result.error['message']}", config)
        print(dumps(result.output()))
        return result.exit_code

    jobs = parsed_args.jobs if parsed_args.jobs is not None else config.jobs
    if config.verbose:
        status(f"🔍 Running {parsed_args.command} on {len(documents)} documents with {jobs} job(s)", config)
    batch = run_batch(parsed_args.command, documents, config, options, jobs)
    for result in batch.results:
        if config.verbose:
            report_item(result, config)
        print(dumps(result.output()))
    report_batch_summary(batch, config)
    return batch.exit_code


if __name__ == "__main__":
    sys.exit(main())
