# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
import re
import time
from datetime import datetime, timedelta
from typing import Literal, Optional, Union

from torchvortex.framework.callback import Callback
from torchvortex.framework.state import State
from torchvortex.framework.unit import TSolverUnit

logger: logging.Logger = logging.getLogger(__name__)

_DURATION_PATTERN = r"^\d{2}:(0[0-9]|1[0-9]|2[0-3]):([0-5][0-9])$"


def parse_duration(duration: Union[str, timedelta]) -> timedelta:
    """Parses a ``DD:HH:MM`` string; timedeltas pass through.

    Raises:
        ValueError: if the string is not of the form DD:HH:MM with HH < 24 and MM < 60.
    """
    if isinstance(duration, timedelta):
        return duration
    if not re.match(_DURATION_PATTERN, duration):
        raise ValueError(f"Invalid duration format '{duration}'. Expected format is DD:HH:MM")
    days, hours, minutes = map(int, duration.strip().split(":"))
    return timedelta(days=days, hours=hours, minutes=minutes)


class TimeLimitInterrupter(Callback):
    """
    Stops the solve loop once a wall-clock budget or an absolute deadline is reached. The unit
    sees a stopped state and reports an interrupted solve.

    Args:
        duration: budget as DD:HH:MM or a timedelta.
        timestamp: timezone-aware deadline.
        interval: check after every "step" or every "stage".
        interval_freq: check every ``interval_freq`` intervals.

    Raises:
        ValueError:
            - If the duration is neither DD:HH:MM nor a timedelta.
            - If the timestamp is not timezone aware.
            - If both duration and timestamp are None.
    """

    def __init__(
        self,
        duration: Optional[Union[str, timedelta]] = None,
        timestamp: Optional[datetime] = None,
        interval: Literal["stage", "step"] = "step",
        interval_freq: int = 1,
    ) -> None:
        if not (duration or timestamp):
            raise ValueError(
                "Invalid parameters. Expected at least one of duration or timestamp to be specified."
            )
        if timestamp and not timestamp.tzinfo:
            raise ValueError("Invalid timestamp. Expected a timezone aware datetime object.")
        self._duration: Optional[float] = (
            parse_duration(duration).total_seconds() if duration else None
        )
        self._timestamp = timestamp
        self._interval = interval
        self._interval_freq = interval_freq
        self._start_time: float = 0.0

    def on_solve_start(self, state: State, unit: TSolverUnit) -> None:
        self._start_time = time.monotonic()

    def on_step_end(self, state: State, unit: TSolverUnit) -> None:
        if self._interval == "step":
            if unit.solve_progress.num_steps_completed % self._interval_freq == 0:
                self._check(state)

    def on_stage_end(self, state: State, unit: TSolverUnit) -> None:
        if self._interval == "stage":
            if unit.solve_progress.num_stages_completed % self._interval_freq == 0:
                self._check(state)

    def _check(self, state: State) -> None:
        if self._timestamp and datetime.now().astimezone() >= self._timestamp:
            state.stop(f"Solve deadline {self._timestamp} has been reached.")
            return
        if self._duration is not None:
            elapsed = time.monotonic() - self._start_time
            if elapsed >= self._duration:
                state.stop(
                    f"Solve budget of {self._duration} seconds exceeded after {elapsed:.1f} seconds."
                )
