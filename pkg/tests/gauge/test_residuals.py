#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest

import torch
from torchvortex.core.errors import ParameterError
from torchvortex.core.fields import Field
from torchvortex.core.grid import build_mask, GridSpec
from torchvortex.explicit.families import generate_plane_wave
from torchvortex.gauge.residuals import residual_higgs, residual_maineq, residual_taubes


class TaubesResidualTest(unittest.TestCase):
    def setUp(self) -> None:
        self.mask = build_mask(GridSpec(2.0, 41), 2.0)

    def test_zero_configuration(self) -> None:
        zero = Field.constant(self.mask, 0.0)
        r = residual_taubes(zero, zero, zero)
        self.assertEqual(r.r1, 0.0)
        self.assertEqual(r.r2, 2.0)

    def test_vacuum(self) -> None:
        zero = Field.constant(self.mask, 0.0)
        one = Field.constant(self.mask, 1.0)
        self.assertEqual(tuple(residual_taubes(zero, zero, one)), (0.0, 0.0))

    def test_region(self) -> None:
        zero = Field.constant(self.mask, 0.0)
        phi = Field.from_function(self.mask, lambda z: (z.abs() >= 0.5).to(torch.float64))
        outside = self.mask.grid.z().abs() > 1.0
        self.assertEqual(residual_taubes(zero, zero, phi, outside).r2, 0.0)
        self.assertEqual(residual_taubes(zero, zero, phi).r2, 2.0)


class MainResidualTest(unittest.TestCase):
    def test_region_restricts_sup(self) -> None:
        mask = build_mask(GridSpec(4.0, 129), 4.0)
        s = generate_plane_wave(mask, 2.0, 0.5)
        full = residual_maineq(s)
        inner = residual_maineq(s, mask.grid.z().abs() < 1.0)
        for a, b in zip(inner, full):
            self.assertLessEqual(a, b)

    def test_higgs_needs_higgs_field(self) -> None:
        mask = build_mask(GridSpec(2.0, 33), 2.0)
        with self.assertRaisesRegex(ParameterError, "needs a solution with a Higgs field"):
            residual_higgs(generate_plane_wave(mask, 1.0, 0.5))
