#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from __future__ import annotations

import atexit
import logging
from typing import Any, Dict, Optional

import torch
from torch.utils.tensorboard import SummaryWriter
from torchvortex.utils.loggers.logger import MetricLogger, Scalar
from torchvortex.utils.loggers.utils import scalar_to_float

logger: logging.Logger = logging.getLogger(__name__)


class TensorBoardLogger(MetricLogger):
    """
    Writes solver histories, run parameters and field heatmaps to a TensorBoard event file.

    Args:
        path: log directory.
        *args: extra positional arguments for SummaryWriter.
        **kwargs: extra keyword arguments for SummaryWriter.

    Examples::

        from torchvortex.utils.loggers import TensorBoardLogger
        tb = TensorBoardLogger(path="runs/one_vortex")
        tb.log("residual_sup", 3.2e-9, 41)
        tb.close()
    """

    def __init__(self: TensorBoardLogger, path: str, *args: Any, **kwargs: Any) -> None:
        self._path: str = path
        logger.info(f"TensorBoard SummaryWriter instantiated. Files will be stored in: {path}")
        self._writer: Optional[SummaryWriter] = SummaryWriter(log_dir=path, *args, **kwargs)
        atexit.register(self.close)

    @property
    def writer(self: TensorBoardLogger) -> Optional[SummaryWriter]:
        return self._writer

    @property
    def path(self: TensorBoardLogger) -> str:
        return self._path

    def log_dict(self: TensorBoardLogger, payload: Dict[str, Scalar], step: int) -> None:
        for k, v in payload.items():
            self.log(k, v, step)

    def log(self: TensorBoardLogger, name: str, data: Scalar, step: int) -> None:
        if self._writer:
            self._writer.add_scalar(name, scalar_to_float(data), global_step=step, new_style=True)

    def log_text(self: TensorBoardLogger, name: str, data: str, step: int) -> None:
        if self._writer:
            self._writer.add_text(name, data, global_step=step)

    def log_hparams(
        self: TensorBoardLogger, hparams: Dict[str, Scalar], metrics: Dict[str, Scalar]
    ) -> None:
        """Records the run parameters together with its final diagnostics."""
        if self._writer:
            self._writer.add_hparams(
                {k: scalar_to_float(v) for k, v in hparams.items()},
                {k: scalar_to_float(v) for k, v in metrics.items()},
            )

    def log_heatmap(self: TensorBoardLogger, name: str, values: torch.Tensor, step: int) -> None:
        """
        Adds a real 2-D tensor as a grayscale image scaled to its finite range; NaN nodes are black.
        """
        if not self._writer:
            return
        finite = torch.isfinite(values)
        if not bool(finite.any()):
            return
        lo = float(values[finite].min().item())
        hi = float(values[finite].max().item())
        scaled = (values - lo) / (hi - lo) if hi > lo else torch.zeros_like(values)
        scaled = torch.where(finite, scaled, torch.zeros_like(scaled)).to(torch.float32)
        # tensor axis 0 is x0, images are row-major with x1 pointing up
        self._writer.add_image(name, torch.flip(scaled.T, dims=[0])[None], global_step=step)

    def flush(self: TensorBoardLogger) -> None:
        if self._writer:
            self._writer.flush()

    def close(self: TensorBoardLogger) -> None:
        if self._writer:
            self._writer.close()
            self._writer = None
