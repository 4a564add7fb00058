# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .residual_logger import ResidualLogger
from .time_limit_interrupter import TimeLimitInterrupter
from .tqdm_progress_bar import TQDMProgressBar

__all__ = [
    "ResidualLogger",
    "TimeLimitInterrupter",
    "TQDMProgressBar",
]
