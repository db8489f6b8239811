#!/usr/bin/env python3
"""
Command implementations behind the ktwebs subcommands.

Each command takes a parsed Document, a Config and the command-line
options and returns a JSON-ready dict.
"""

import os
from dataclasses import dataclass
from typing import Optional, Tuple

from .core import DEFAULT_CONFIG, MalformedInput
from .frames import moving_frame, singular_points
from .leaves import equivalent, leaf_label
from .reporting import emit_csv, emit_svg, plot_to_dict
from .separation import compatible, separate
from .strata import WEB_BY_STRATUM
from .webs import web_curves


@dataclass(frozen=True)
class Options:
    """Command-line options shared by all commands."""

    out: Optional[str] = None
    region: Optional[Tuple[float, float, float, float]] = None
    curves: Optional[int] = None
    samples: Optional[int] = None
    fmt: str = "json"


def _label_dict(label):
    return {
        "stratum": label.stratum.stratum.value,
        "web": WEB_BY_STRATUM[label.stratum.stratum],
        "leaf": list(label.invariants),
    }


def cmd_classify(doc, config=DEFAULT_CONFIG, options=Options()):
    label = leaf_label(doc.require_alpha(), config)
    report = _label_dict(label)
    report["deltas"] = list(label.stratum.deltas)
    report["orbit_dimension"] = label.stratum.orbit_dimension
    report["submanifold_dimension"] = label.stratum.submanifold_dimension
    if label.flags:
        report["flags"] = list(label.flags)
    return report


def cmd_equivalent(doc, config=DEFAULT_CONFIG, options=Options()):
    p, q = doc.require_pair()
    return {
        "equivalent": equivalent(p, q, config=config),
        "labels": [_label_dict(leaf_label(p, config)), _label_dict(leaf_label(q, config))],
    }


def cmd_frame(doc, config=DEFAULT_CONFIG, options=Options()):
    result = moving_frame(doc.require_alpha(), config)
    return {
        "stratum": result.stratum.value,
        "chart": result.chart,
        "frame": result.frame,
        "canonical": result.canonical,
    }


def cmd_canonical(doc, config=DEFAULT_CONFIG, options=Options()):
    p = doc.require_alpha()
    result = moving_frame(p, config)
    return {
        "web": WEB_BY_STRATUM[result.stratum],
        "chart": result.chart,
        "canonical": result.canonical,
        "singular_points": singular_points(p, config),
    }


def cmd_separate(doc, config=DEFAULT_CONFIG, options=Options()):
    p, potential = doc.require_alpha(), doc.require_potential()
    report = separate(p, potential, config)
    return {
        "web": report.web,
        "chart": report.chart,
        "frame": report.frame,
        "canonical": report.canonical_kt,
        "compatible": compatible(p, potential, config),
        "transformed_potential": report.transformed_potential,
        "first_integral_potential": report.first_integral_potential,
        "approximate": report.approximate,
    }


def cmd_render(doc, config=DEFAULT_CONFIG, options=Options()):
    plot = web_curves(doc.require_alpha(), options.region, options.curves, options.samples, config)
    if options.fmt == "json":
        return plot_to_dict(plot)
    if not options.out:
        raise MalformedInput(f"--out is required for --format {options.fmt}")
    emitter = emit_svg if options.fmt == "svg" else emit_csv
    emitter(plot, options.out)
    return {
        "web": plot.web,
        "format": options.fmt,
        "path": os.path.abspath(options.out),
        "curves": [len(plot.families[0]), len(plot.families[1])],
        "singular_points": plot.annotations,
    }


COMMANDS = {
    "classify": cmd_classify,
    "equivalent": cmd_equivalent,
    "frame": cmd_frame,
    "canonical": cmd_canonical,
    "separate": cmd_separate,
    "render": cmd_render,
}
