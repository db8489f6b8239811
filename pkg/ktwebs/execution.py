#!/usr/bin/env python3
"""
Document execution for the ktwebs command line: single documents and
line-per-document batches.
"""

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace

from .commands import COMMANDS, Options
from .core import DEFAULT_CONFIG, KTWebsError, MalformedInput
from .inputs import parse_document

EXIT_CODES = {"ok": 0, "malformed": 1, "domain_error": 2}


class DocumentResult:
    """
    Represents the result of running one command on one document.
    """
    def __init__(self, index, status, duration, payload=None, error=None):
        self.index = index
        self.status = status  # "ok", "domain_error" or "malformed"
        self.duration = duration
        self.payload = payload
        self.error = error

    @property
    def exit_code(self):
        return EXIT_CODES[self.status]

    def output(self):
        """The JSON-ready object written to stdout for this document."""
        return self.payload if self.status == "ok" else self.error

    def __str__(self):
        return f"document {self.index} ... {self.status.upper()}"

    def __repr__(self):
        return f"DocumentResult(index={self.index}, status='{self.status}', duration={self.duration})"


class BatchResult:
    """
    Container for batch results.
    """
    def __init__(self):
        self.total = 0
        self.ok = 0
        self.domain_errors = 0
        self.malformed = 0
        self.results = []
        self.duration = 0.0
        self.start_time = None

    def add_result(self, result):
        self.results.append(result)
        self.total += 1
        if result.status == "ok":
            self.ok += 1
        elif result.status == "domain_error":
            self.domain_errors += 1
        else:
            self.malformed += 1

    def start_timing(self):
        self.start_time = time.time()

    def stop_timing(self):
        if self.start_time:
            self.duration = time.time() - self.start_time

    @property
    def exit_code(self):
        """Worst item code: malformed input beats domain errors."""
        codes = {r.exit_code for r in self.results}
        if 1 in codes:
            return 1
        return 2 if 2 in codes else 0

    def __str__(self):
        return f"BatchResult(total={self.total}, ok={self.ok}, domain_errors={self.domain_errors}, malformed={self.malformed})"


def indexed_path(path, index):
    """out.svg -> out-3.svg for batch item 3."""
    if not path:
        return path
    stem, ext = os.path.splitext(path)
    return f"{stem}-{index}{ext}"


def run_single_document(command, raw, config=DEFAULT_CONFIG, options=Options(), index=0):
    """
    Run a command on one raw document and collect its result.

    Args:
        command: Subcommand name
        raw: JSON text or decoded object
        config: Config object
        options: Options from the command line
        index: Position in the batch

    Returns:
        DocumentResult; failures are captured, never raised
    """
    start_time = time.time()
    try:
        doc = parse_document(raw, config.max_degree)
        doc_config = config.with_overrides(doc.tolerance) if doc.tolerance else config
        payload = COMMANDS[command](doc, doc_config, options)
        return DocumentResult(index, "ok", time.time() - start_time, payload=payload)
    except MalformedInput as e:
        return DocumentResult(index, "malformed", time.time() - start_time, error=e.to_dict())
    except KTWebsError as e:
        return DocumentResult(index, "domain_error", time.time() - start_time, error=e.to_dict())
    except ArithmeticError as e:
        # numbers outside the float range
        error = {"error": type(e).__name__, "message": str(e)}
        return DocumentResult(index, "domain_error", time.time() - start_time, error=error)
    except (OSError, ValueError, TypeError) as e:
        error = {"error": type(e).__name__, "message": str(e)}
        return DocumentResult(index, "malformed", time.time() - start_time, error=error)


def _run_indexed(args):
    command, raw, config, options, index = args
    return run_single_document(command, raw, config, options, index)


def run_batch(command, raws, config=DEFAULT_CONFIG, options=Options(), jobs=1):
    """
    Run a command over many documents.

    Items are independent; with jobs > 1 they run in worker processes and
    results keep input order.

    Returns:
        BatchResult
    """
    batch = BatchResult()
    batch.start_timing()
    work = [
        (command, raw, config, replace(options, out=indexed_path(options.out, i)), i)
        for i, raw in enumerate(raws)
    ]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_indexed, work))
    else:
        results = [_run_indexed(item) for item in work]
    for result in results:
        batch.add_result(result)
    batch.stop_timing()
    return batch
