#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest

from torchvortex.framework._test_utils import get_dummy_state, HalvingUnit
from torchvortex.framework.unit import SolverUnit


class SolverUnitTest(unittest.TestCase):
    def test_abstract(self) -> None:
        """solve_step and is_stage_done must be implemented."""
        with self.assertRaises(TypeError):
            SolverUnit()  # pyre-ignore[45]

    def test_progress(self) -> None:
        unit = HalvingUnit()
        self.assertEqual(unit.solve_progress.num_steps_completed, 0)
        state = get_dummy_state()
        out = unit.solve_step(state, 0.1)
        self.assertEqual(out, {"residual_sup": 0.5})
        self.assertFalse(unit.is_stage_done(state, 0.1))
        self.assertTrue(unit.is_stage_done(state, 0.6))

    def test_default_hooks(self) -> None:
        """The optional hooks are no-ops."""
        unit = HalvingUnit()
        state = get_dummy_state()
        unit.on_solve_start(state)
        unit.on_stage_end(state, 0.1)
        unit.on_solve_end(state)
        unit.on_exception(state, RuntimeError())
        self.assertEqual(unit.x, 1.0)
