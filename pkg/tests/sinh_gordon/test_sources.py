#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import math
import unittest

from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import ConfigurationError
from torchvortex.core.grid import build_mask, GridSpec
from torchvortex.core.stencils import laplacian
from torchvortex.sinh_gordon.sources import build_G, build_r


class SourcesTest(unittest.TestCase):
    def setUp(self) -> None:
        self.grid = GridSpec(3.0, 121)
        self.mask = build_mask(self.grid, 3.0)
        self.vortex = self.grid.point(50, 60)
        self.divisor = VortexDivisor.from_pairs([(self.vortex, 2), (1.0 + 0.5j, 3)])

    def test_G_values(self) -> None:
        G = build_G(self.divisor, self.mask)
        self.assertLessEqual(G.values[G.support].max().item(), 0.0)
        i, j = self.grid.index_of(2.0 - 2.0j)
        d1 = abs(self.grid.point(i, j) - self.vortex)
        d2 = abs(self.grid.point(i, j) - (1.0 + 0.5j))
        expected = -math.log1p(d1**-2) - math.log1p(d2**-3)
        self.assertAlmostEqual(G.values[i, j].item(), expected, places=12)
        # the vortex node is left off the support
        self.assertFalse(bool(G.support[50, 60]))

    def test_r_is_laplacian_of_G(self) -> None:
        G = build_G(self.divisor, self.mask)
        r = build_r(self.divisor, self.mask)
        lap = laplacian(G)
        z = self.grid.z()
        away = ((z - self.vortex).abs() > 1.0) & ((z - (1.0 + 0.5j)).abs() > 1.0)
        where = lap.support & self.mask.interior & away
        self.assertLess((lap.values[where] - r.values[where]).abs().max().item(), 2e-2)

    def test_r_requires_double_vortices(self) -> None:
        with self.assertRaisesRegex(ConfigurationError, "at least 2"):
            build_r(VortexDivisor.from_pairs([(0, 1)]), self.mask)

    def test_empty_divisor(self) -> None:
        self.assertEqual(build_G(VortexDivisor(), self.mask).sup(), 0.0)
        self.assertEqual(build_r(VortexDivisor(), self.mask).sup(), 0.0)
