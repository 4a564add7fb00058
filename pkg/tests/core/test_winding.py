#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest
from typing import Callable, Dict, List, Tuple

import torch
from parameterized import parameterized
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.grid import build_mask, GridSpec
from torchvortex.core.winding import count_zeros_winding


class CountZerosWindingTest(unittest.TestCase):
    def setUp(self) -> None:
        self.grid = GridSpec(extent=1.2, n=121)
        self.mask = build_mask(self.grid, 1.0)
        self.h = self.grid.h

    def _windings_near(
        self, locations: List[Tuple[complex, int]], zeros: List[complex]
    ) -> Dict[complex, int]:
        totals = {z: 0 for z in zeros}
        for position, winding in locations:
            nearest = min(zeros, key=lambda z: abs(position - z))
            self.assertLess(abs(position - nearest), 3 * self.h)
            totals[nearest] += winding
        return totals

    def test_holomorphic_zeros(self) -> None:
        a, b = 0.3 + 0.0j, -0.4j
        w = Field.from_function(self.mask, lambda z: (z - a) * (z - b) ** 2)
        result = count_zeros_winding(w)
        self.assertEqual(result.count, 3)
        self.assertEqual(self._windings_near(result.locations, [a, b]), {a: 1, b: 2})

    def test_off_node_zero(self) -> None:
        a = 0.137 - 0.251j
        w = Field.from_function(self.mask, lambda z: z - a)
        result = count_zeros_winding(w)
        self.assertEqual(result.count, 1)
        self.assertEqual(self._windings_near(result.locations, [a]), {a: 1})

    def test_antiholomorphic_zero(self) -> None:
        a = 0.1 + 0.05j
        w = Field.from_function(self.mask, lambda z: torch.conj(z - a))
        self.assertEqual(count_zeros_winding(w).count, -1)

    @parameterized.expand([("exp", lambda z: torch.exp(z)), ("constant", lambda z: 1 + 0 * z)])
    def test_no_zeros(self, _: str, fn: Callable[[torch.Tensor], torch.Tensor]) -> None:
        result = count_zeros_winding(Field.from_function(self.mask, fn))
        self.assertEqual(result.count, 0)
        self.assertEqual(result.locations, [])

    def test_region(self) -> None:
        w = Field.from_function(self.mask, lambda z: (z - 0.5) * (z + 0.5))
        inner = build_mask(self.grid, 0.8, [(0.5, 0.1)])
        # the zero at 0.5 is excised, the one at -0.5 remains
        self.assertEqual(count_zeros_winding(w, inner).count, 1)

    def test_floor(self) -> None:
        w = Field.from_function(self.mask, lambda z: z)
        result = count_zeros_winding(w, floor=0.05)
        self.assertEqual(result.count, 1)
        self.assertEqual(result.floor, 0.05)
        self.assertGreater(result.ambiguous_plaquettes, 0)

    def test_zero_on_outer_band(self) -> None:
        w = Field.from_function(self.mask, lambda z: z - 1.0)
        with self.assertRaisesRegex(GeometryError, "zero too close to boundary"):
            count_zeros_winding(w, floor=0.05)

    def test_identically_zero(self) -> None:
        w = Field.constant(self.mask, 0j)
        with self.assertRaisesRegex(GeometryError, "zero too close to boundary"):
            count_zeros_winding(w)
