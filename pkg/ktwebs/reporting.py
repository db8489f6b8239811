#!/usr/bin/env python3
"""
Reporting for ktwebs: console status lines, deterministic JSON and
SVG/CSV emission of coordinate webs.
"""

import csv
import json
import math
import sys
from enum import Enum
from fractions import Fraction

import numpy as np

from .core import DEFAULT_CONFIG, GroupElement, KTParams, Point2, SymMat2
from .polynomial import Poly2

SVG_WIDTH = 800
FAMILY_COLOURS = ("#1f77b4", "#d62728")


def status(message, config=DEFAULT_CONFIG, stream=None):
    """
    Print a human status line to stderr.

    stdout is reserved for machine-readable output.
    """
    if not config.emoji_output:
        head, _, rest = message.partition(" ")
        if head and not any(ch.isascii() for ch in head):
            message = rest
    print(message, file=stream or sys.stderr)


# ---------------------------------------------------------------------------
# JSON
# ---------------------------------------------------------------------------

def to_jsonable(value):
    """
    Convert ktwebs values into plain JSON structures.

    Fractions become integers when integral and "p/q" strings otherwise.
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value)
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, KTParams):
        return [to_jsonable(c) for c in value.coeffs]
    if isinstance(value, GroupElement):
        return list(value.as_tuple())
    if isinstance(value, Point2):
        return [to_jsonable(value.x1), to_jsonable(value.x2)]
    if isinstance(value, SymMat2):
        return [[to_jsonable(v) for v in row] for row in value.rows()]
    if isinstance(value, Poly2):
        return [[i, j, to_jsonable(c)] for i, j, c in value.to_list()]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    raise TypeError(f"Cannot serialize {type(value).__name__}")


def _encode(value):
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"Cannot serialize non-finite float {value}")
        text = f"{value:.17g}"
        # integral floats keep a float marker
        return text if any(ch in text for ch in ".e") else text + ".0"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_encode(v)}" for k, v in value.items()) + "}"
    if isinstance(value, list):
        return "[" + ", ".join(_encode(v) for v in value) + "]"
    return json.dumps(value)


def dumps(value):
    """
    Deterministic JSON text: key order as built, floats with 17 significant digits.
    """
    return _encode(to_jsonable(value))


# ---------------------------------------------------------------------------
# Batch summaries
# ---------------------------------------------------------------------------

def report_batch_summary(batch, config=DEFAULT_CONFIG):
    """
    Display a summary of a batch run on stderr.

    Args:
        batch: BatchResult
        config: Config controlling emoji output
    """
    status("=" * 60, config)
    status("🧮 BATCH SUMMARY", config)
    status("=" * 60, config)
    status(f"✅ Ok:            {batch.ok}", config)
    status(f"⚠️ Domain errors: {batch.domain_errors}", config)
    status(f"💥 Malformed:     {batch.malformed}", config)
    status(f"📊 Total:         {batch.total}", config)
    status(f"⏱️ Execution Time: {batch.duration:.2f} seconds", config)


def report_item(result, config=DEFAULT_CONFIG):
    """One progress line for a processed document."""
    emoji = {"ok": "✅", "domain_error": "⚠️", "malformed": "💥"}[result.status]
    detail = f": {result.error['message']}" if result.error else ""
    status(f"{emoji} document {result.index} ... {result.status.upper()} ({result.duration:.3f}s){detail}", config)


# ---------------------------------------------------------------------------
# Web plots
# ---------------------------------------------------------------------------

def _svg_mapper(region):
    x0, y0, x1, y1 = region
    scale = SVG_WIDTH / (x1 - x0)
    height = (y1 - y0) * scale

    def to_svg(point):
        x, y = point.as_floats()
        return (x - x0) * scale, (y1 - y) * scale

    return to_svg, height


def emit_svg(plot, path):
    """
    Write a web plot as an SVG 1.1 document.

    One path per polyline with a stroke class per family, and a circle
    per singular point.
    """
    to_svg, height = _svg_mapper(plot.region)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{SVG_WIDTH}" height="{height:.0f}" viewBox="0 0 {SVG_WIDTH} {height:.4f}">',
        "<style>",
        f"  .family-0 {{ fill: none; stroke: {FAMILY_COLOURS[0]}; stroke-width: 1.2; }}",
        f"  .family-1 {{ fill: none; stroke: {FAMILY_COLOURS[1]}; stroke-width: 1.2; }}",
        "  .singular { fill: black; }",
        "</style>",
    ]
    for family in (0, 1):
        for polyline in plot.polylines(family):
            coords = [to_svg(pt) for pt in polyline]
            d = "M " + " L ".join(f"{x:.4f} {y:.4f}" for x, y in coords)
            lines.append(f'<path class="family-{family}" d="{d}"/>')
    for point in plot.annotations:
        cx, cy = to_svg(point)
        lines.append(f'<circle class="singular" cx="{cx:.4f}" cy="{cy:.4f}" r="4"/>')
    lines.append("</svg>")
    with open(path, "w", encoding="utf-8", newline="\n") as f:
        f.write("\n".join(lines) + "\n")


def emit_csv(plot, path):
    """Write the polylines as rows family,curve_index,x1,x2."""
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(["family", "curve_index", "x1", "x2"])
        for family in (0, 1):
            for index, polyline in enumerate(plot.polylines(family)):
                for point in polyline:
                    x, y = point.as_floats()
                    writer.writerow([family, index, repr(x), repr(y)])


def plot_to_dict(plot):
    """JSON form of a plot for --format json."""
    return {
        "web": plot.web,
        "region": list(plot.region),
        "families": [
            [curve.points for curve in plot.families[0]],
            [curve.points for curve in plot.families[1]],
        ],
        "singular_points": plot.annotations,
    }
