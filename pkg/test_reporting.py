#!/usr/bin/env python3
"""
Unit tests for JSON serialization, status lines and SVG/CSV emission.
"""

import io
import os
import shutil
import tempfile
import unittest
from fractions import Fraction

import numpy as np

from ktwebs.core import Config, GroupElement, KTParams, Point2
from ktwebs.polynomial import Poly2
from ktwebs.reporting import dumps, emit_csv, emit_svg, plot_to_dict, status, to_jsonable
from ktwebs.strata import WebType
from ktwebs.webs import WebPlot, web_curves

YATSUN_KT = KTParams.of("3/4", 0, 0, 0, "-1/2", 1)


class TestJson(unittest.TestCase):
    """Test deterministic JSON output."""

    def test_exact_values(self):
        self.assertEqual(to_jsonable(Fraction(3, 4)), "3/4")
        self.assertEqual(to_jsonable(Fraction(-6)), -6)
        self.assertEqual(to_jsonable(YATSUN_KT), ["3/4", 0, 0, 0, "-1/2", 1])

    def test_float_formatting(self):
        self.assertEqual(dumps(3.0), "3.0")
        self.assertEqual(dumps(0.5), "0.5")
        self.assertEqual(dumps(0.1), "0.10000000000000001")
        self.assertEqual(dumps(np.float64(2.0)), "2.0")
        self.assertEqual(dumps(1e16), "10000000000000000.0")

    def test_structures(self):
        value = {"b": 1, "a": [0.5, Fraction(3, 4), True, None], "web": WebType.POLAR}
        self.assertEqual(dumps(value), '{"b": 1, "a": [0.5, "3/4", true, null], "web": "Polar"}')

    def test_domain_objects(self):
        self.assertEqual(dumps(GroupElement(0.0, Fraction(-1, 2), Fraction(0))), "[0.0, -0.5, 0.0]")
        self.assertEqual(dumps(Point2(Fraction(3, 2), Fraction(0))), '["3/2", 0]')
        self.assertEqual(dumps(Poly2({(2, 0): Fraction(1, 2), (0, 0): 1})), '[[0, 0, 1], [2, 0, "1/2"]]')

    def test_repeatable(self):
        plot = web_curves(YATSUN_KT, (-2, -2, 2, 2), 3, 20)
        self.assertEqual(dumps(plot_to_dict(plot)), dumps(plot_to_dict(web_curves(YATSUN_KT, (-2, -2, 2, 2), 3, 20))))

    def test_rejects_non_finite(self):
        with self.assertRaises(ValueError):
            dumps(float("nan"))

    def test_rejects_unknown_types(self):
        with self.assertRaises(TypeError):
            to_jsonable(object())


class TestStatus(unittest.TestCase):
    """Test human status lines."""

    def test_keeps_emoji_by_default(self):
        stream = io.StringIO()
        status("✅ done", stream=stream)
        self.assertEqual(stream.getvalue(), "✅ done\n")

    def test_strips_emoji(self):
        config = Config({"reporting": {"emoji_output": False}})
        stream = io.StringIO()
        status("⚠️ Domain errors: 2", config, stream)
        status("==== plain", config, stream)
        self.assertEqual(stream.getvalue(), "Domain errors: 2\n==== plain\n")


class TestPlotFiles(unittest.TestCase):
    """Test SVG and CSV output files."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()
        self.plot = web_curves(YATSUN_KT, (-2, -2, 2, 2), 4, 25)

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def read(self, name, mode="r"):
        with open(os.path.join(self.temp_dir, name), mode) as f:
            return f.read()

    def test_svg(self):
        emit_svg(self.plot, os.path.join(self.temp_dir, "web.svg"))
        text = self.read("web.svg")
        self.assertTrue(text.startswith('<?xml version="1.0"'))
        self.assertIn('version="1.1"', text)
        self.assertIn('width="800"', text)
        self.assertEqual(text.count('class="family-0"'), len(self.plot.families[0]))
        self.assertEqual(text.count('class="family-1"'), len(self.plot.families[1]))
        self.assertEqual(text.count('<circle class="singular"'), 2)
        self.assertTrue(text.endswith("</svg>\n"))

    def test_svg_flips_y_axis(self):
        plot = WebPlot(annotations=[Point2(-1.0, 1.0)], region=(-1.0, -1.0, 1.0, 1.0))
        emit_svg(plot, os.path.join(self.temp_dir, "corner.svg"))
        self.assertIn('cx="0.0000" cy="0.0000"', self.read("corner.svg"))

    def test_empty_plot(self):
        emit_svg(WebPlot(), os.path.join(self.temp_dir, "empty.svg"))
        text = self.read("empty.svg")
        self.assertNotIn("<path", text)
        self.assertNotIn("<circle", text)

    def test_csv(self):
        emit_csv(self.plot, os.path.join(self.temp_dir, "web.csv"))
        raw = self.read("web.csv", "rb")
        self.assertNotIn(b"\r\n", raw)
        lines = raw.decode("utf-8").splitlines()
        self.assertEqual(lines[0], "family,curve_index,x1,x2")
        self.assertEqual(len(lines) - 1, 25 * self.plot.curve_count())
        family, index, x1, x2 = lines[1].split(",")
        self.assertEqual((family, index), ("0", "0"))
        self.assertEqual(float(x1), self.plot.families[0][0].points[0].x1)
        self.assertEqual(float(x2), self.plot.families[0][0].points[0].x2)


if __name__ == "__main__":
    unittest.main()
