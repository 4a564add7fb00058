#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest
from typing import List

import torch
from parameterized import parameterized
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import ConfigurationError
from torchvortex.sinh_gordon.problem import SinhGordonProblem
from torchvortex.sinh_gordon.refinement import CompactWindow, nested_refinement


class CompactWindowTest(unittest.TestCase):
    def test_contains(self) -> None:
        window = CompactWindow(2.0, 0.5, center=1j)
        z = torch.tensor([1j, 1.0 + 1j, 3.5j, 0.2 + 1j], dtype=torch.complex128)
        self.assertEqual(window.contains(z).tolist(), [False, True, False, False])

    @parameterized.expand([(1.0, 1.0), (1.0, -0.1), (0.0, 0.0)])
    def test_invalid(self, outer: float, inner: float) -> None:
        with self.assertRaisesRegex(ConfigurationError, "0 <= inner < outer"):
            CompactWindow(outer, inner)


class NestedRefinementTest(unittest.TestCase):
    def setUp(self) -> None:
        self.problem = SinhGordonProblem.on_disk(
            VortexDivisor.from_pairs([(0, 2)]), 0.25, 3.0, 61, eps=0.4
        )
        self.window = CompactWindow(2.0, 0.8)

    def test_eps_schedule(self) -> None:
        report = nested_refinement(self.problem, [0.4, 0.3, 0.2], [3.0], self.window)
        self.assertTrue(report.completed)
        self.assertEqual(report.levels, [(0.4, 3.0, 61), (0.3, 3.0, 61), (0.2, 3.0, 61)])
        self.assertEqual(len(report.differences), 2)
        self.assertGreater(report.window_nodes, 0)
        for residual in report.residuals:
            self.assertLessEqual(residual, self.problem.tol_newton)
        a, b = report.differences
        self.assertEqual(report.non_increasing, b <= a * (1.0 + 1e-12) + 1e-14)
        self.assertEqual(report.to_dict()["failure"], None)

    def test_grid_follows_eps(self) -> None:
        report = nested_refinement(self.problem, [0.4, 0.3], [3.0, 3.5], self.window)
        # spacing stays at 0.1, so [-3.5, 3.5] needs 71 nodes
        self.assertEqual(report.levels, [(0.4, 3.0, 61), (0.3, 3.5, 71)])

    def test_failed_solve_ends_study(self) -> None:
        report = nested_refinement(
            self.problem, [0.4, 0.3], [3.0], self.window, max_steps_per_stage=1
        )
        self.assertFalse(report.completed)
        self.assertEqual(report.levels, [])
        self.assertIn("eps=0.4", report.failure or "")

    @parameterized.expand(
        [
            ([0.2, 0.4], [3.0], "non-increasing"),
            ([0.4, 0.3], [3.0, 2.5], "non-increasing"),
            ([0.4, 0.3], [3.0, 4.0, 5.0], "lengths"),
            ([], [3.0], "must not be empty"),
        ]
    )
    def test_invalid_schedule(self, eps: List[float], R: List[float], message: str) -> None:
        with self.assertRaisesRegex(ConfigurationError, message):
            nested_refinement(self.problem, eps, R, self.window)

    def test_invalid_window(self) -> None:
        with self.assertRaisesRegex(ConfigurationError, "is not inside the disk"):
            nested_refinement(self.problem, [0.4], [3.0], CompactWindow(2.9))
        with self.assertRaisesRegex(ConfigurationError, "meets the puncture"):
            nested_refinement(self.problem, [0.4], [3.0], CompactWindow(2.0, 0.3))
