#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest

from torchvortex.utils.progress import Progress


class ProgressTest(unittest.TestCase):
    def test_initial_counts(self) -> None:
        progress = Progress(num_stages_completed=2, num_steps_completed=8, num_steps_completed_in_stage=4)
        self.assertEqual(progress.num_stages_completed, 2)
        self.assertEqual(progress.num_steps_completed, 8)
        self.assertEqual(progress.num_steps_completed_in_stage, 4)
        self.assertFalse(hasattr(progress, "state_dict"))

        fresh = Progress()
        self.assertEqual(fresh.num_stages_completed, 0)
        self.assertEqual(fresh.num_steps_completed, 0)
        self.assertEqual(fresh.num_steps_completed_in_stage, 0)

    def test_increments(self) -> None:
        """Closing a stage resets only the in-stage step count."""
        progress = Progress()
        progress.increment_step()
        progress.increment_step()
        progress.increment_stage()
        progress.increment_step()
        self.assertEqual(progress.num_steps_completed, 3)
        self.assertEqual(progress.num_steps_completed_in_stage, 1)
        self.assertEqual(progress.num_stages_completed, 1)
        self.assertIn("completed stages: 1", progress.get_progress_string())
