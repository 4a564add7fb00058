#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import io
import unittest

from torchvortex.framework._test_utils import get_dummy_state, HalvingUnit
from torchvortex.framework.callbacks.tqdm_progress_bar import TQDMProgressBar
from torchvortex.framework.solve import solve


class TQDMProgressBarTest(unittest.TestCase):
    def test_progress_bar_per_stage(self) -> None:
        """One bar per stage, with the residual as postfix."""
        out = io.StringIO()
        solve(HalvingUnit(), [0.3, 0.1], max_steps_per_stage=10, callbacks=[TQDMProgressBar(file=out)])
        text = out.getvalue()
        self.assertIn("Stage 0", text)
        self.assertIn("Stage 1", text)
        self.assertIn("residual_sup=", text)

    def test_closes_on_exception(self) -> None:
        bar = TQDMProgressBar(file=io.StringIO())
        unit = HalvingUnit()
        state = get_dummy_state()
        bar.on_stage_start(state, unit)
        self.assertIsNotNone(bar._progress_bar)
        bar.on_exception(state, unit, RuntimeError())
        self.assertIsNone(bar._progress_bar)

    def test_invalid_refresh_rate(self) -> None:
        with self.assertRaisesRegex(ValueError, "refresh_rate must be positive"):
            TQDMProgressBar(refresh_rate=0)
