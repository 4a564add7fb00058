#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from __future__ import annotations

import tempfile
import unittest

import torch
from tensorboard.backend.event_processing.event_accumulator import EventAccumulator

from torchvortex.utils.loggers.tensorboard import TensorBoardLogger


class TensorBoardLoggerTest(unittest.TestCase):
    def test_log(self: TensorBoardLoggerTest) -> None:
        with tempfile.TemporaryDirectory() as log_dir:
            logger = TensorBoardLogger(path=log_dir)
            for i in range(5):
                logger.log("residual_sup", 10.0 ** (-i), i)
            logger.close()

            acc = EventAccumulator(log_dir)
            acc.Reload()
            for i, event in enumerate(acc.Tensors("residual_sup")):
                self.assertAlmostEqual(event.tensor_proto.float_val[0], 10.0 ** (-i), places=6)
                self.assertEqual(event.step, i)

    def test_log_dict(self: TensorBoardLoggerTest) -> None:
        with tempfile.TemporaryDirectory() as log_dir:
            logger = TensorBoardLogger(path=log_dir)
            logger.log_dict({"residual_sup": 0.5, "step_length": 0.25}, 1)
            logger.close()

            acc = EventAccumulator(log_dir)
            acc.Reload()
            self.assertAlmostEqual(acc.Tensors("step_length")[0].tensor_proto.float_val[0], 0.25)
            self.assertEqual(acc.Tensors("residual_sup")[0].step, 1)

    def test_log_heatmap(self: TensorBoardLoggerTest) -> None:
        """NaN nodes are allowed; an all-NaN tensor is skipped."""
        with tempfile.TemporaryDirectory() as log_dir:
            logger = TensorBoardLogger(path=log_dir)
            values = torch.arange(16, dtype=torch.float64).reshape(4, 4)
            values[0, 0] = float("nan")
            logger.log_heatmap("u", values, 0)
            logger.log_heatmap("empty", torch.full((4, 4), float("nan")), 0)
            logger.close()

            acc = EventAccumulator(log_dir)
            acc.Reload()
            self.assertIn("u", acc.Tags()["images"])
            self.assertNotIn("empty", acc.Tags()["images"])

    def test_close(self: TensorBoardLoggerTest) -> None:
        """Logging after close is a no-op."""
        with tempfile.TemporaryDirectory() as log_dir:
            logger = TensorBoardLogger(path=log_dir)
            logger.close()
            self.assertIsNone(logger.writer)
            logger.log("residual_sup", 1.0, 0)
            logger.log_text("config", "[grid]", 0)
