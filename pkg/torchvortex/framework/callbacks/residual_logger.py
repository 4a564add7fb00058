# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from typing import List, Mapping, Union

from torchvortex.framework.callback import Callback
from torchvortex.framework.state import State
from torchvortex.framework.unit import TSolverUnit
from torchvortex.utils.loggers.logger import MetricLogger
from torchvortex.utils.loggers.utils import is_finite_scalar

logger: logging.Logger = logging.getLogger(__name__)


class ResidualLogger(Callback):
    """
    Forwards the scalar diagnostics of every step (residual norms, step lengths, continuation
    parameter) to one or more metric loggers, keyed by the global step count.

    Args:
        loggers: metric logger or list of them.
        prefix: prepended to every metric name, e.g. ``"newton/"``.
    """

    def __init__(
        self, loggers: Union[MetricLogger, List[MetricLogger]], prefix: str = ""
    ) -> None:
        self._loggers: List[MetricLogger] = loggers if isinstance(loggers, list) else [loggers]
        self._prefix = prefix

    @property
    def loggers(self) -> List[MetricLogger]:
        return self._loggers

    def on_step_end(self, state: State, unit: TSolverUnit) -> None:
        output = state.step_output
        if not isinstance(output, Mapping):
            return
        payload = {f"{self._prefix}{k}": v for k, v in output.items()}
        step = unit.solve_progress.num_steps_completed
        for k, v in payload.items():
            if not is_finite_scalar(v):
                logger.warning(f"Non-finite value {v} for {k} at step {step}")
        for metric_logger in self._loggers:
            metric_logger.log_dict(payload, step)

    def on_stage_end(self, state: State, unit: TSolverUnit) -> None:
        step = unit.solve_progress.num_steps_completed
        for metric_logger in self._loggers:
            metric_logger.log(
                f"{self._prefix}stages_completed", unit.solve_progress.num_stages_completed, step
            )
