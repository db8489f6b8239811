#!/usr/bin/env python3
"""
Integration tests for the classification, separation and rendering
pipeline. These tests verify that the modules work together correctly.
"""

import csv
import json
import os
import shutil
import tempfile
import unittest
from fractions import Fraction

from ktwebs.action import induced_action
from ktwebs.commands import Options
from ktwebs.core import Config, GroupElement, KTParams
from ktwebs.execution import run_batch, run_single_document
from ktwebs.frames import moving_frame
from ktwebs.inputs import parse_document, split_documents
from ktwebs.leaves import equivalent
from ktwebs.reporting import dumps, emit_csv, emit_svg
from ktwebs.separation import compatible, first_integral_potential, separate, yatsun_potential
from ktwebs.webs import web_curves

YATSUN_DOC = (
    '{"alpha": ["3/4", 0, 0, 0, "-1/2", 1], '
    '"potential": [[4, 0, -2], [2, 2, -4], [0, 4, -2], [3, 0, 4], [1, 2, 4], [2, 0, -2], [0, 2, -2]]}'
)


class TestDocumentToReport(unittest.TestCase):
    """Documents flow through parsing, commands and JSON output."""

    def test_yatsun_separation_report(self):
        result = run_single_document("separate", YATSUN_DOC)
        report = json.loads(dumps(result.output()))
        self.assertEqual(report["web"], "EllipticHyperbolic")
        self.assertEqual(report["chart"], "E3EH:U1")
        self.assertEqual(report["frame"], [0.0, -0.5, 0.0])
        self.assertEqual(report["canonical"], ["3/4", "-1/4", 0, 0, 0, 1])
        self.assertTrue(report["compatible"])
        self.assertFalse(report["approximate"])

    def test_transformed_potential_fits_canonical_tensor(self):
        doc = parse_document(YATSUN_DOC)
        report = separate(doc.alpha, doc.potential)
        self.assertTrue(compatible(report.canonical_kt, report.transformed_potential))
        # the first integral is unchanged by rigid motions up to the frame
        u = first_integral_potential(report.canonical_kt, report.transformed_potential)
        self.assertEqual(u.diff(1).diff(2), u.diff(2).diff(1))

    def test_classify_example(self):
        result = run_single_document("classify", '{"alpha": [1, -6, 2, 0, 0, 0]}')
        report = json.loads(dumps(result.output()))
        self.assertEqual((report["stratum"], report["web"], report["leaf"]), ("E1", "Cartesian", [-5, 10]))

    def test_equivalent_polar_points(self):
        raw = '{"pair": [[2, 1, "2/3", 1, 2, -3], [1, -3, "8/3", 2, 4, -3]]}'
        report = json.loads(dumps(run_single_document("equivalent", raw).output()))
        self.assertTrue(report["equivalent"])
        self.assertEqual(report["labels"][0]["leaf"], [-7, -3])

    def test_frame_output_round_trips_through_action(self):
        report = json.loads(dumps(run_single_document("frame", '{"alpha": [2, 1, 0, 1, 1, 4]}').output()))
        frame = GroupElement(*report["frame"])
        moved = induced_action(frame, KTParams.of(2, 1, 0, 1, 1, 4))
        for got, want in zip(moved.values, report["canonical"]):
            self.assertAlmostEqual(got, want, places=9)


class TestOrbitConsistency(unittest.TestCase):
    """Moving a tensor and its potential together changes nothing observable."""

    def test_moved_yatsun_system(self):
        p = KTParams.of("3/4", 0, 0, 0, "-1/2", 1)
        g = GroupElement(0.0, Fraction(5, 2), Fraction(-1, 3))
        q = induced_action(g, p)
        v = yatsun_potential().compose_affine(GroupElement(0.0, Fraction(-5, 2), Fraction(1, 3)))
        self.assertTrue(equivalent(p, q))
        self.assertTrue(compatible(q, v))
        self.assertEqual(moving_frame(q).canonical, moving_frame(p).canonical)
        report = separate(q, v)
        self.assertEqual(report.transformed_potential, separate(p, yatsun_potential()).transformed_potential)

    def test_web_moves_with_the_tensor(self):
        p = KTParams.of(2, 1, 0, 1, 1, 4)
        q = induced_action(GroupElement(0.0, Fraction(1), Fraction(0)), p)
        foci_p = web_curves(p, n_per_family=2, samples_per_curve=5).annotations
        foci_q = web_curves(q, n_per_family=2, samples_per_curve=5).annotations
        for a, b in zip(foci_p, foci_q):
            self.assertAlmostEqual(float(b.x1), float(a.x1) + 1.0, places=9)
            self.assertAlmostEqual(float(b.x2), float(a.x2), places=9)


class TestRenderFiles(unittest.TestCase):
    """Rendering writes consistent SVG and CSV files."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def test_svg_and_csv_agree(self):
        plot = web_curves(KTParams.of(1, -3, 5, 1, 2, 0), (-3, -3, 3, 3), 5, 30)
        svg_path = os.path.join(self.temp_dir, "web.svg")
        csv_path = os.path.join(self.temp_dir, "web.csv")
        emit_svg(plot, svg_path)
        emit_csv(plot, csv_path)
        with open(svg_path) as f:
            paths = f.read().count("<path ")
        with open(csv_path, newline="") as f:
            rows = list(csv.DictReader(f))
        curves = {(row["family"], row["curve_index"]) for row in rows}
        self.assertEqual(paths, len(curves))
        self.assertEqual(paths, plot.curve_count())

    def test_batch_render_from_lines(self):
        text = '{"alpha": [1, 2, 0, 0, 0, 0]}\n{"alpha": [1, 1, 0, 0, 0, 0]}\n{"alpha": [1, 1, 0, 0, 0, 1]}\n'
        docs, is_batch = split_documents(text)
        self.assertTrue(is_batch)
        options = Options(out=os.path.join(self.temp_dir, "web.csv"), fmt="csv", curves=2, samples=5)
        batch = run_batch("render", docs, Config(), options, jobs=1)
        self.assertEqual([r.status for r in batch.results], ["ok", "domain_error", "ok"])
        self.assertEqual(batch.exit_code, 2)
        self.assertTrue(os.path.exists(os.path.join(self.temp_dir, "web-0.csv")))
        self.assertFalse(os.path.exists(os.path.join(self.temp_dir, "web-1.csv")))
        self.assertTrue(os.path.exists(os.path.join(self.temp_dir, "web-2.csv")))


if __name__ == "__main__":
    unittest.main()
