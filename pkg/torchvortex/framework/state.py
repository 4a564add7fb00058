# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from typing import Any, Optional

from torchvortex.utils.timer import BoundedTimer, TimerProtocol

_logger: logging.Logger = logging.getLogger(__name__)


def _check_loop_condition(name: str, val: Optional[int]) -> None:
    if val is not None and val < 0:
        raise ValueError(
            f"Invalid value provided for {name}. Expected a non-negative integer or None, but received {val}."
        )


class State:
    """Loop state of a :func:`~torchvortex.framework.solve` run.
    Modified by the framework, read-only for units and callbacks except for :meth:`stop`.
    """

    def __init__(
        self,
        *,
        max_steps_per_stage: Optional[int] = None,
        timer: Optional[TimerProtocol] = None,
    ) -> None:
        _check_loop_condition("max_steps_per_stage", max_steps_per_stage)
        self._max_steps_per_stage = max_steps_per_stage
        self._timer = timer
        self._stage: Any = None
        self._step_output: Any = None
        self._should_stop: bool = False
        self._stop_reason: Optional[str] = None
        self._iteration_timer = BoundedTimer(lower_bound=1_000, upper_bound=5_000)

    @property
    def max_steps_per_stage(self) -> Optional[int]:
        """Iteration cap per stage; ``None`` leaves termination to the unit."""
        return self._max_steps_per_stage

    @property
    def timer(self) -> Optional[TimerProtocol]:
        """Optional timer recording the latencies of the loop's hooks."""
        return self._timer

    @property
    def iteration_timer(self) -> TimerProtocol:
        """An always-on timer holding the durations of the most recent iterations."""
        return self._iteration_timer

    @property
    def stage(self) -> Any:
        """The schedule entry currently being solved."""
        return self._stage

    @property
    def step_output(self) -> Any:
        """Output of the last step."""
        return self._step_output

    @property
    def should_stop(self) -> bool:
        """Whether the loop ends after the current step."""
        return self._should_stop

    @property
    def stop_reason(self) -> Optional[str]:
        return self._stop_reason

    def stop(self, reason: str = "") -> None:
        """Signal to the loop to end after the current step completes."""
        _logger.warning(f"Received signal to stop. {reason}".rstrip())
        self._should_stop = True
        self._stop_reason = reason or None
