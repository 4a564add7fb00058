#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import math
import unittest

import numpy as np
from parameterized import parameterized
from torchvortex.core.errors import ParameterError
from torchvortex.vekua.decay import decay_zero_radius


class DecayZeroRadiusTest(unittest.TestCase):
    def test_radius(self) -> None:
        bound = decay_zero_radius(1.0, math.e**2)
        self.assertAlmostEqual(bound.radius, 2.0)
        self.assertFalse(bound.zero_free)

    def test_equal_bounds(self) -> None:
        self.assertEqual(decay_zero_radius(3.0, 3.0).radius, 0.0)

    def test_inconsistent_bounds(self) -> None:
        bound = decay_zero_radius(2.0, 1.0)
        self.assertEqual(bound.radius, 0.0)
        self.assertTrue(bound.zero_free)

    @parameterized.expand([(0.0, 1.0), (1.0, -1.0)])
    def test_invalid(self, M: float, N: float) -> None:
        with self.assertRaisesRegex(ParameterError, "must be positive"):
            decay_zero_radius(M, N)

    def test_envelope_zeros_inside_radius(self) -> None:
        """The smallest modulus allowed by the envelope vanishes only inside the radius."""
        M, N = 0.5, 4.0
        r = np.linspace(0.0, 10.0, 2001)
        lowest = np.maximum(M - N * np.exp(-r), 0.0)
        bound = decay_zero_radius(M, N)
        self.assertAlmostEqual(bound.radius, math.log(8.0))
        self.assertTrue(np.all(r[lowest == 0.0] <= bound.radius))
        self.assertTrue(np.all(lowest[r > bound.radius + 1e-9] > 0.0))
