#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import os
import unittest
from pathlib import Path
from tempfile import TemporaryDirectory

from torchvortex.cli.config import parse_config
from torchvortex.cli.field_io import read_field, write_field
from torchvortex.cli.pipeline import run_pipeline
from torchvortex.cli.report import load_report, strip_volatile, summarize_reports
from torchvortex.core.errors import ConfigurationError, SolverError, VerificationError

PLANE_WAVE = """
[grid]
n = 65

[family]
kind = plane_wave
c1 = 1
c2 = 0.5
R = 4
"""

SMALL_SOLVE = """
[grid]
n = 61

[solve]
M = 0.25
R = 3
eps = 0.4
vortex = 0+0i : 2

[reconstruct]
M1 = 0.25
M2 = 0.25
"""


def _tamper(directory: str, name: str) -> None:
    path = Path(directory, f"{name}.vortx").as_posix()
    f = read_field(path)
    x0, _ = f.mask.grid.coordinates()
    write_field(f.with_values(f.filled() * (1.5 + 0.125 * x0)), path)


class GenerateVerifyTest(unittest.TestCase):
    def test_generate_writes_fields_and_report(self) -> None:
        with TemporaryDirectory() as tmpdir:
            report = run_pipeline(parse_config(PLANE_WAVE), "generate", tmpdir)
            self.assertEqual(report["status"], "ok")
            self.assertEqual(
                sorted(report["files"]), ["A0.vortx", "A1.vortx", "psi1.vortx", "psi2.vortx"]
            )
            for name in report["files"]:
                self.assertTrue(os.path.exists(os.path.join(tmpdir, name)))
            saved = load_report(os.path.join(tmpdir, "generate_report.json"))
            self.assertEqual(saved["schema_version"], 1)
            self.assertEqual(saved["grid"]["n"], 65)
            self.assertLess(saved["results"]["residual_maineq"]["relative"], 1e-2)
            self.assertEqual(saved["results"]["divisor"]["degree"], 0)
            self.assertEqual(saved["results"]["envelope"]["verdict"], "degenerate")
            self.assertEqual(parse_config(saved["config"]), parse_config(PLANE_WAVE))

    def test_verify_passes_on_generated_fields(self) -> None:
        with TemporaryDirectory() as tmpdir:
            run_pipeline(parse_config(PLANE_WAVE), "generate", tmpdir)
            report = run_pipeline(parse_config(PLANE_WAVE), "verify", tmpdir)
            self.assertTrue(report["results"]["threshold"]["passed"])

    def test_verify_rejects_tampered_fields(self) -> None:
        with TemporaryDirectory() as tmpdir:
            run_pipeline(parse_config(PLANE_WAVE), "generate", tmpdir)
            _tamper(tmpdir, "psi2")
            with self.assertRaisesRegex(VerificationError, "exceeds tol_main"):
                run_pipeline(parse_config(PLANE_WAVE), "verify", tmpdir)
            saved = load_report(os.path.join(tmpdir, "verify_report.json"))
            self.assertEqual(saved["status"], "failed")
            self.assertEqual(saved["error"]["type"], "VerificationError")
            self.assertEqual(saved["error"]["stage"], "threshold")

    def test_reports_are_deterministic(self) -> None:
        with TemporaryDirectory() as first, TemporaryDirectory() as second:
            run_pipeline(parse_config(PLANE_WAVE), "generate", first)
            run_pipeline(parse_config(PLANE_WAVE), "generate", second)
            a = load_report(os.path.join(first, "generate_report.json"))
            b = load_report(os.path.join(second, "generate_report.json"))
            self.assertEqual(strip_volatile(a), strip_volatile(b))
            self.assertIn("timing", a)
            self.assertIn("created", a)

    def test_summary_lists_reports(self) -> None:
        with TemporaryDirectory() as tmpdir:
            self.assertIn("No reports", summarize_reports(tmpdir))
            run_pipeline(parse_config(PLANE_WAVE), "generate", tmpdir)
            summary = summarize_reports(tmpdir)
            self.assertIn("generate", summary)
            self.assertIn("ok", summary)

    def test_unknown_command(self) -> None:
        with TemporaryDirectory() as tmpdir:
            with self.assertRaisesRegex(ConfigurationError, "Unknown command 'plot'"):
                run_pipeline(parse_config(PLANE_WAVE), "plot", tmpdir)


class SolvePipelineTest(unittest.TestCase):
    def test_solve_and_reconstruct(self) -> None:
        with TemporaryDirectory() as tmpdir:
            report = run_pipeline(parse_config(SMALL_SOLVE), "solve", tmpdir)
            results = report["results"]
            self.assertLessEqual(results["solve"]["residual_sup"], 1e-9)
            self.assertTrue(results["charge"]["available"])
            self.assertEqual(results["charge"]["multiplicities"], [2])
            self.assertFalse(results["reconstruct"]["parameter_mismatch"])
            self.assertIn("ordered_pair", results["barrier"])
            for name in ("v.vortx", "u.vortx", "A0.vortx", "psi2.vortx"):
                self.assertIn(name, report["files"])
            self.assertTrue(os.path.exists(os.path.join(tmpdir, "solve_history.csv")))

    def test_solver_failure_is_reported(self) -> None:
        cfg = parse_config(SMALL_SOLVE.replace("eps = 0.4", "eps = 0.4\nmax_steps_per_stage = 1"))
        with TemporaryDirectory() as tmpdir:
            with self.assertRaises(SolverError):
                run_pipeline(cfg, "solve", tmpdir)
            saved = load_report(os.path.join(tmpdir, "solve_report.json"))
            self.assertEqual(saved["status"], "failed")
            self.assertEqual(saved["error"]["stage"], "solve")


class EnergyPipelineTest(unittest.TestCase):
    def test_energy(self) -> None:
        cfg = parse_config("[grid]\nn = 65\n[energy]\ncount = 3\n")
        with TemporaryDirectory() as tmpdir:
            results = run_pipeline(cfg, "energy", tmpdir)["results"]
        self.assertEqual(len(results["bogomolny"]["samples"]), 3)
        self.assertLessEqual(results["bogomolny"]["max_relative_defect"], 1e-6)
        self.assertAlmostEqual(
            results["flux_tube"]["flux_over_2pi"], results["flux_tube"]["expected_over_2pi"], delta=1e-2
        )
