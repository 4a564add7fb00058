#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import random
import unittest

import numpy as np
import torch
from torchvortex.utils.env import generator, seed


class EnvTest(unittest.TestCase):
    def test_seed_range(self) -> None:
        with self.assertRaisesRegex(ValueError, "Invalid seed value provided"):
            seed(-1)

        invalid_max = np.iinfo(np.uint32).max + 1
        with self.assertRaisesRegex(ValueError, "Invalid seed value provided"):
            seed(invalid_max)

        seed(np.iinfo(np.uint32).max)

    def test_deterministic_seed(self) -> None:
        seed(42)
        t1 = torch.randn(10)
        a1 = np.random.rand(10)
        r1 = random.random()
        seed(42)
        self.assertTrue(torch.equal(t1, torch.randn(10)))
        self.assertTrue(np.array_equal(a1, np.random.rand(10)))
        self.assertEqual(r1, random.random())

    def test_generator(self) -> None:
        """Generators with the same seed draw the same numbers, independently of the global seed."""
        first = torch.randn(5, generator=generator(7))
        torch.manual_seed(123)
        second = torch.randn(5, generator=generator(7))
        self.assertTrue(torch.equal(first, second))
