# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .env import generator, seed
from .fsspec import ensure_dir, get_filesystem
from .progress import Progress
from .stagnation import StagnationChecker
from .timer import (
    BoundedTimer,
    get_durations_histogram,
    get_timer_summary,
    log_elapsed_time,
    Timer,
    TimerProtocol,
)
from .tqdm import close_progress_bar, create_progress_bar, update_progress_bar

__all__ = [
    "generator",
    "seed",
    "ensure_dir",
    "get_filesystem",
    "Progress",
    "StagnationChecker",
    "BoundedTimer",
    "get_durations_histogram",
    "get_timer_summary",
    "log_elapsed_time",
    "Timer",
    "TimerProtocol",
    "close_progress_bar",
    "create_progress_bar",
    "update_progress_bar",
]
