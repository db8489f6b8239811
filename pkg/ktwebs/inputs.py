#!/usr/bin/env python3
"""
Input documents for the command-line front end.

A document is a JSON object::

    {"alpha": [1, -6, 2, 0, 0, 0],
     "potential": [[2, 0, "1"], [0, 2, "1"]],
     "tolerance": {"equivalence": 1e-6}}

``pair`` (two alpha arrays) replaces ``alpha`` for the equivalence
command. A file holds either one document, a JSON array of documents, or
one document per line.
"""

import json
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from .core import DEFAULT_TOLERANCES, KTParams, MalformedInput
from .polynomial import DEFAULT_MAX_DEGREE, Poly2


@dataclass
class Document:
    """A parsed input document."""

    alpha: Optional[KTParams] = None
    pair: Optional[Tuple[KTParams, KTParams]] = None
    potential: Optional[Poly2] = None
    tolerance: Dict[str, float] = field(default_factory=dict)
    extra: Dict[str, Any] = field(default_factory=dict)

    def require_alpha(self):
        if self.alpha is None:
            raise MalformedInput("Document needs an 'alpha' field with six parameters")
        return self.alpha

    def require_pair(self):
        if self.pair is None:
            raise MalformedInput("Document needs a 'pair' field with two parameter arrays")
        return self.pair

    def require_potential(self):
        if self.potential is None:
            raise MalformedInput("Document needs a 'potential' field of [i, j, coefficient] monomials")
        return self.potential


def _parse_alpha(raw, name):
    if not isinstance(raw, list):
        raise MalformedInput(f"'{name}' must be an array of six numbers")
    return KTParams.of(*raw)


def _parse_tolerance(raw):
    if raw is None:
        return {}
    if isinstance(raw, (int, float)) and not isinstance(raw, bool):
        raw = {"equivalence": raw}
    if not isinstance(raw, dict):
        raise MalformedInput("'tolerance' must be a number or an object")
    tolerances = {}
    for key, value in raw.items():
        if key not in DEFAULT_TOLERANCES:
            raise MalformedInput(f"Unknown tolerance '{key}'")
        if isinstance(value, bool) or not isinstance(value, (int, float)) or value < 0:
            raise MalformedInput(f"Tolerance '{key}' must be a non-negative number")
        tolerances[key] = float(value)
    return tolerances


def parse_document(raw, max_degree=DEFAULT_MAX_DEGREE):
    """
    Parse one document from JSON text or an already decoded object.

    Args:
        raw: str or dict
        max_degree: Degree bound for the potential

    Returns:
        Document

    Raises:
        MalformedInput: on invalid JSON or fields
    """
    if isinstance(raw, str):
        try:
            raw = json.loads(raw)
        except json.JSONDecodeError as e:
            raise MalformedInput(f"Invalid JSON: {e}")
    if not isinstance(raw, dict):
        raise MalformedInput("Input document must be a JSON object")

    doc = Document()
    if "alpha" in raw:
        doc.alpha = _parse_alpha(raw["alpha"], "alpha")
    if "pair" in raw:
        pair = raw["pair"]
        if not isinstance(pair, list) or len(pair) != 2:
            raise MalformedInput("'pair' must hold exactly two parameter arrays")
        doc.pair = (_parse_alpha(pair[0], "pair[0]"), _parse_alpha(pair[1], "pair[1]"))
    if "potential" in raw:
        if not isinstance(raw["potential"], list):
            raise MalformedInput("'potential' must be a list of [i, j, coefficient] monomials")
        doc.potential = Poly2.from_monomials(raw["potential"], max_degree)
    doc.tolerance = _parse_tolerance(raw.get("tolerance"))
    doc.extra = {k: v for k, v in raw.items() if k not in ("alpha", "pair", "potential", "tolerance")}
    return doc


def split_documents(text):
    """
    Split input text into raw documents.

    Returns:
        Tuple (documents, is_batch); documents are str or decoded objects
    """
    stripped = text.strip()
    if not stripped:
        raise MalformedInput("Empty input")
    try:
        whole = json.loads(stripped)
    except json.JSONDecodeError:
        lines = [line for line in stripped.splitlines() if line.strip()]
        if len(lines) < 2:
            raise MalformedInput(f"Invalid JSON document: {stripped[:60]!r}")
        return lines, True
    if isinstance(whole, list):
        return whole, True
    return [whole], False


def read_input(path):
    """Read input text from a file, or stdin when path is '-' or None."""
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise OSError(f"Cannot read input file {path}: {e.strerror}")
