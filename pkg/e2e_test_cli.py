#!/usr/bin/env python3
"""
End-to-end tests for the ktwebs command line.
These tests run the installed module in a subprocess, the way users do.
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile
import unittest

ROOT = os.path.dirname(os.path.abspath(__file__))


class TestCommandLine(unittest.TestCase):
    """Run python -m ktwebs with real files and pipes."""

    def setUp(self):
        """Set up test environment."""
        self.temp_dir = tempfile.mkdtemp()
        self.config_file = os.path.join(self.temp_dir, "ktwebs.json")
        with open(self.config_file, "w") as f:
            json.dump({"reporting": {"verbose": False, "emoji_output": False}}, f)

    def tearDown(self):
        """Clean up test environment."""
        shutil.rmtree(self.temp_dir)

    def ktwebs(self, *args, stdin=None):
        return subprocess.run(
            [sys.executable, "-m", "ktwebs", *args, "--config", self.config_file],
            input=stdin,
            capture_output=True,
            text=True,
            cwd=ROOT,
            timeout=120,
        )

    def test_classify_from_stdin(self):
        result = self.ktwebs("classify", stdin='{"alpha": [1, -6, 2, 0, 0, 0]}')
        self.assertEqual(result.returncode, 0, msg=result.stderr)
        report = json.loads(result.stdout)
        self.assertEqual(report["stratum"], "E1")
        self.assertEqual(report["web"], "Cartesian")
        self.assertEqual(report["leaf"], [-5, 10])

    def test_output_is_deterministic(self):
        doc = '{"alpha": [2, 1, 0, 1, 1, 4]}'
        first = self.ktwebs("frame", stdin=doc)
        second = self.ktwebs("frame", stdin=doc)
        self.assertEqual(first.returncode, 0, msg=first.stderr)
        self.assertEqual(first.stdout, second.stdout)

    def test_separate_yatsun(self):
        path = os.path.join(self.temp_dir, "yatsun.json")
        with open(path, "w") as f:
            json.dump({
                "alpha": ["3/4", 0, 0, 0, "-1/2", 1],
                "potential": [[4, 0, -2], [2, 2, -4], [0, 4, -2], [3, 0, 4], [1, 2, 4], [2, 0, -2], [0, 2, -2]],
            }, f)
        result = self.ktwebs("separate", "--in", path)
        self.assertEqual(result.returncode, 0, msg=result.stderr)
        report = json.loads(result.stdout)
        self.assertEqual(report["frame"], [0.0, -0.5, 0.0])
        self.assertEqual(report["web"], "EllipticHyperbolic")

    def test_exit_codes(self):
        self.assertEqual(self.ktwebs("classify", stdin='{"alpha": [1, 2]}').returncode, 1)
        incompatible = '{"alpha": [1, 2, 0, 0, 0, 0], "potential": [[1, 1, 1]]}'
        result = self.ktwebs("separate", stdin=incompatible)
        self.assertEqual(result.returncode, 2)
        self.assertEqual(json.loads(result.stdout)["error"], "Incompatible")
        self.assertEqual(self.ktwebs("classify", "--in", os.path.join(self.temp_dir, "nope.json")).returncode, 1)

    def test_render_svg_file(self):
        out = os.path.join(self.temp_dir, "web.svg")
        result = self.ktwebs("render", "--out", out, "--region=-2,-2,2,2", "--curves", "4",
                             stdin='{"alpha": ["3/4", 0, 0, 0, "-1/2", 1]}')
        self.assertEqual(result.returncode, 0, msg=result.stderr)
        with open(out) as f:
            svg = f.read()
        self.assertEqual(svg.count('<circle class="singular"'), 2)

    def test_batch_with_jobs(self):
        lines = "\n".join([
            '{"alpha": [1, -6, 2, 0, 0, 0]}',
            '{"alpha": [2, 1, "2/3", 1, 2, -3]}',
            '{"alpha": [1, -3, 5, 1, 2, 0]}',
            '{"alpha": [2, 1, 0, 1, 1, 4]}',
        ])
        result = self.ktwebs("classify", "--jobs", "2", stdin=lines)
        self.assertEqual(result.returncode, 0, msg=result.stderr)
        strata = [json.loads(line)["stratum"] for line in result.stdout.splitlines()]
        self.assertEqual(strata, ["E1", "E2", "E3P", "E3EH"])
        self.assertIn("BATCH SUMMARY", result.stderr)

    def test_version(self):
        result = self.ktwebs("--version")
        self.assertEqual(result.returncode, 0)
        self.assertIn("ktwebs", result.stdout)


if __name__ == "__main__":
    unittest.main()
