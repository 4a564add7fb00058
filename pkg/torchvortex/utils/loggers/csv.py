#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import csv
import logging
from threading import Thread
from typing import Dict, List, Optional

from fsspec import open as fs_open
from torchvortex.utils.loggers.file import FileLogger
from torchvortex.utils.loggers.logger import MetricLogger

logger: logging.Logger = logging.getLogger(__name__)


class CSVLogger(FileLogger, MetricLogger):
    """
    Writes the iteration history as CSV. Columns are the union of all logged names plus
    ``step`` and ``time``; rows missing a column leave it empty.

    Args:
        path: destination, any fsspec URL.
        steps_before_flushing: number of new rows that triggers a rewrite of the file.
        async_write: write on a background thread.
    """

    def __init__(
        self,
        path: str,
        steps_before_flushing: int = 100,
        async_write: bool = False,
    ) -> None:
        super().__init__(path, steps_before_flushing)
        self._async_write = async_write
        self._thread: Optional[Thread] = None

    def flush(self) -> None:
        if not self._log_buffer:
            logger.debug("No solver metrics to write.")
            return
        if self._thread:
            # one writer at a time
            self._thread.join()
        rows = [dict(r) for r in self._log_buffer.values()]
        if not self._async_write:
            _write_csv(self.path, rows)
            return
        self._thread = Thread(target=_write_csv, args=(self.path, rows))
        self._thread.start()

    def close(self) -> None:
        self._async_write = False
        self.flush()


def _write_csv(path: str, rows: List[Dict[str, float]]) -> None:
    columns: List[str] = []
    for row in rows:
        columns.extend(k for k in row if k not in columns)
    with fs_open(path, "w") as f:
        w = csv.DictWriter(f, columns)
        w.writeheader()
        w.writerows(rows)
