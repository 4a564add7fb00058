#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import atexit
import logging
from abc import ABC, abstractmethod
from collections import OrderedDict
from time import monotonic
from typing import Dict, Mapping

from torchvortex.utils.loggers.logger import Scalar
from torchvortex.utils.loggers.utils import scalar_to_float

logger: logging.Logger = logging.getLogger(__name__)


class FileLogger(ABC):
    """
    Base class for loggers that buffer rows keyed by iteration and write them to a file.

    Every row holds the logged names plus ``step`` and a monotonic ``time`` stamp.

    Args:
        path: destination, any fsspec URL.
        steps_before_flushing: number of new rows that triggers a flush.
    """

    def __init__(self, path: str, steps_before_flushing: int) -> None:
        if steps_before_flushing < 1:
            raise ValueError(
                f"steps_before_flushing must be positive, got {steps_before_flushing}"
            )
        self._path: str = path
        self._log_buffer: OrderedDict[int, Dict[str, float]] = OrderedDict()
        self._len_before_flush: int = 0
        self._steps_before_flushing: int = steps_before_flushing
        logger.info(f"Logging solver metrics to path: {path}")
        atexit.register(self.close)

    @property
    def path(self) -> str:
        return self._path

    @property
    def rows(self) -> Dict[int, Dict[str, float]]:
        return self._log_buffer

    def log_dict(self, payload: Mapping[str, Scalar], step: int) -> None:
        for k, v in payload.items():
            self.log(k, v, step)

    def log(self, name: str, data: Scalar, step: int) -> None:
        row = self._log_buffer.setdefault(step, {})
        row[name] = scalar_to_float(data)
        row["step"] = step
        row["time"] = monotonic()
        if len(self._log_buffer) - self._len_before_flush >= self._steps_before_flushing:
            self.flush()
            self._len_before_flush = len(self._log_buffer)

    @abstractmethod
    def flush(self) -> None: ...

    @abstractmethod
    def close(self) -> None: ...
