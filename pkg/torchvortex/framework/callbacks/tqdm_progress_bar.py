# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from typing import Mapping, Optional, TextIO

from pyre_extensions import none_throws
from torchvortex.framework.callback import Callback
from torchvortex.framework.state import State
from torchvortex.framework.unit import TSolverUnit
from torchvortex.utils.tqdm import close_progress_bar, create_progress_bar, update_progress_bar
from tqdm.auto import tqdm


class TQDMProgressBar(Callback):
    """
    Shows one tqdm bar per stage, with the latest value of ``metric`` as postfix when the step
    output carries it.

    Args:
        refresh_rate: number of steps between refreshes.
        file: where to write the bar (default: sys.stderr).
        metric: key of the step output shown as postfix.
    """

    def __init__(
        self,
        refresh_rate: int = 1,
        file: Optional[TextIO] = None,
        metric: str = "residual_sup",
    ) -> None:
        if refresh_rate < 1:
            raise ValueError(f"refresh_rate must be positive, got {refresh_rate}")
        self._refresh_rate = refresh_rate
        self._file = file
        self._metric = metric
        self._progress_bar: Optional[tqdm] = None
        self._stage_start_step: int = 0

    def on_stage_start(self, state: State, unit: TSolverUnit) -> None:
        self._stage_start_step = unit.solve_progress.num_steps_completed
        self._progress_bar = create_progress_bar(
            desc="Stage",
            num_stages_completed=unit.solve_progress.num_stages_completed,
            max_steps_per_stage=state.max_steps_per_stage,
            file=self._file,
        )

    def on_step_end(self, state: State, unit: TSolverUnit) -> None:
        postfix = ""
        output = state.step_output
        if isinstance(output, Mapping) and self._metric in output:
            postfix = f"{self._metric}={float(output[self._metric]):.3e}"
        update_progress_bar(
            none_throws(self._progress_bar),
            unit.solve_progress.num_steps_completed_in_stage,
            self._refresh_rate,
            postfix,
        )

    def on_stage_end(self, state: State, unit: TSolverUnit) -> None:
        if self._progress_bar is None:
            return
        # the stage counter was already reset, count from the stage's first step
        steps = unit.solve_progress.num_steps_completed - self._stage_start_step
        close_progress_bar(self._progress_bar, steps, self._refresh_rate)
        self._progress_bar = None

    def on_exception(self, state: State, unit: TSolverUnit, exc: BaseException) -> None:
        if self._progress_bar is not None:
            self._progress_bar.close()
            self._progress_bar = None
