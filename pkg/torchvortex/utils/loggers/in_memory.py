#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from collections import OrderedDict
from time import monotonic
from typing import Dict, List, Mapping

from torchvortex.utils.loggers.logger import MetricLogger, Scalar
from torchvortex.utils.loggers.utils import scalar_to_float

logger: logging.Logger = logging.getLogger(__name__)


class InMemoryLogger(MetricLogger):
    """
    Keeps the iteration history in memory.

    Example::

        from torchvortex.utils.loggers import InMemoryLogger
        history = InMemoryLogger()
        history.log("residual_sup", 1e-3, 4)
        history.series("residual_sup")  # [1e-3]
    """

    def __init__(self) -> None:
        self._log_buffer: OrderedDict[int, Dict[str, float]] = OrderedDict()
        logger.debug("Logging solver metrics in-memory")

    @property
    def log_buffer(self) -> Dict[int, Dict[str, float]]:
        return self._log_buffer

    def log_dict(self, payload: Mapping[str, Scalar], step: int) -> None:
        for k, v in payload.items():
            self.log(k, v, step)

    def log(self, name: str, data: Scalar, step: int) -> None:
        row = self._log_buffer.setdefault(step, {})
        row[name] = scalar_to_float(data)
        row["step"] = step
        row["time"] = monotonic()

    def series(self, name: str) -> List[float]:
        """Values logged under ``name``, in step order."""
        return [row[name] for row in self._log_buffer.values() if name in row]

    def close(self) -> None:
        pass
