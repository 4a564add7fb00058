#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest

from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import ConfigurationError


class VortexDivisorTest(unittest.TestCase):
    def test_degree(self) -> None:
        divisor = VortexDivisor.from_pairs([(0, 1), (1 + 1j, 2)])
        self.assertEqual(divisor.degree, 3)
        self.assertEqual(len(divisor), 2)
        self.assertEqual(divisor.points, [0j, 1 + 1j])
        self.assertEqual(divisor.multiplicities, [1, 2])
        self.assertEqual(list(divisor), [(0j, 1), (1 + 1j, 2)])

    def test_empty(self) -> None:
        divisor = VortexDivisor()
        self.assertEqual(divisor.degree, 0)
        self.assertEqual(len(divisor), 0)

    def test_non_positive_multiplicity(self) -> None:
        with self.assertRaisesRegex(ConfigurationError, "positive integer"):
            VortexDivisor.from_pairs([(0, 0)])

    def test_repeated_point(self) -> None:
        with self.assertRaisesRegex(ConfigurationError, "repeated"):
            VortexDivisor.from_pairs([(0.5, 1), (0.5, 2)])

    def test_require_min_multiplicity(self) -> None:
        divisor = VortexDivisor.from_pairs([(0, 2), (1, 1)])
        divisor.require_min_multiplicity(1)
        with self.assertRaisesRegex(ConfigurationError, "at least 2") as cm:
            divisor.require_min_multiplicity(2)
        self.assertEqual(cm.exception.details, {"point": str(1 + 0j)})
