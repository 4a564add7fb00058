# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from contextlib import nullcontext
from typing import ContextManager, Iterable, List, Optional

from torchvortex.framework._callback_handler import CallbackHandler
from torchvortex.framework.callback import Callback
from torchvortex.framework.state import State
from torchvortex.framework.unit import TStage, TSolverUnit
from torchvortex.utils.timer import get_timer_summary, TimerProtocol

logger: logging.Logger = logging.getLogger(__name__)


def _timing(state: State, name: str) -> ContextManager[None]:
    timer = state.timer
    return timer.time(name) if timer else nullcontext()


def solve(
    unit: TSolverUnit,
    stages: Iterable[TStage],
    *,
    max_steps_per_stage: Optional[int] = None,
    callbacks: Optional[List[Callback]] = None,
    timer: Optional[TimerProtocol] = None,
) -> State:
    """
    Runs ``unit`` over the schedule ``stages`` and returns the final loop state.

    Args:
        unit: a :class:`~torchvortex.framework.unit.SolverUnit`.
        stages: the schedule, e.g. continuation levels of a parameter.
        max_steps_per_stage: iteration cap per stage; ``None`` means until the unit is done.
        callbacks: optional list of :class:`~torchvortex.framework.callback.Callback` s.
        timer: optional timer used to time the hooks and steps.

    Below is pseudocode of what :py:func:`solve` does.

    .. code-block:: text

        call on_solve_start on unit first and then callbacks
        for stage in stages:
            call on_stage_start on unit first and then callbacks
            while stage is not done and the step cap is not hit:
                call on_step_start on callbacks
                call solve_step on unit
                increment step counter
                call on_step_end on callbacks
            increment stage counter
            call on_stage_end on unit first and then callbacks
        call on_solve_end on unit first and then callbacks
    """
    callback_handler = CallbackHandler(callbacks or [])
    state = State(max_steps_per_stage=max_steps_per_stage, timer=timer)
    try:
        _solve_impl(state, unit, stages, callback_handler)
        logger.info("Finished solve")
        if state.timer:
            logger.info(get_timer_summary(state.timer))
    except Exception as e:
        logger.info(
            f"Exception during solve after the following progress: {unit.solve_progress.get_progress_string()}:\n{e}"
        )
        unit.on_exception(state, e)
        callback_handler.on_exception(state, unit, e)
        raise e
    return state


def _stage_exhausted(state: State, unit: TSolverUnit) -> bool:
    cap = state.max_steps_per_stage
    return cap is not None and unit.solve_progress.num_steps_completed_in_stage >= cap


def _solve_impl(
    state: State,
    unit: TSolverUnit,
    stages: Iterable[TStage],
    callback_handler: CallbackHandler,
) -> None:
    logger.info(f"Started solve with max_steps_per_stage={state.max_steps_per_stage}")
    with _timing(state, "solve.on_solve_start"):
        unit.on_solve_start(state)
        callback_handler.on_solve_start(state, unit)

    for stage in stages:
        if state.should_stop:
            break
        state._stage = stage
        with _timing(state, "solve.on_stage_start"):
            unit.on_stage_start(state, stage)
            callback_handler.on_stage_start(state, unit)

        while not (
            state.should_stop
            or _stage_exhausted(state, unit)
            or unit.is_stage_done(state, stage)
        ):
            with state.iteration_timer.time("solve_iteration_time"), _timing(
                state, "solve.solve_step"
            ):
                callback_handler.on_step_start(state, unit)
                state._step_output = unit.solve_step(state, stage)
                unit.solve_progress.increment_step()
                callback_handler.on_step_end(state, unit)

        unit.solve_progress.increment_stage()
        with _timing(state, "solve.on_stage_end"):
            unit.on_stage_end(state, stage)
            callback_handler.on_stage_end(state, unit)
        logger.debug(f"After stage {stage}: {unit.solve_progress.get_progress_string()}")

    with _timing(state, "solve.on_solve_end"):
        unit.on_solve_end(state)
        callback_handler.on_solve_end(state, unit)
