#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from typing import Dict, List, Optional

from torchvortex.framework.state import State
from torchvortex.framework.unit import SolverUnit


def get_dummy_state(max_steps_per_stage: Optional[int] = 10) -> State:
    return State(max_steps_per_stage=max_steps_per_stage, timer=None)


class HalvingUnit(SolverUnit[float, Dict[str, float]]):
    """Halves ``x`` until it drops below the stage's threshold."""

    def __init__(self, x: float = 1.0) -> None:
        super().__init__()
        self.x = x
        self.stages_seen: List[float] = []

    def on_stage_start(self, state: State, stage: float) -> None:
        self.stages_seen.append(stage)

    def solve_step(self, state: State, stage: float) -> Dict[str, float]:
        self.x *= 0.5
        return {"residual_sup": self.x}

    def is_stage_done(self, state: State, stage: float) -> bool:
        return self.x < stage


class FailingUnit(HalvingUnit):
    """Raises on the ``fail_at``-th step."""

    def __init__(self, fail_at: int = 2) -> None:
        super().__init__()
        self.fail_at = fail_at
        self.exception: Optional[BaseException] = None

    def solve_step(self, state: State, stage: float) -> Dict[str, float]:
        if self.solve_progress.num_steps_completed + 1 >= self.fail_at:
            raise RuntimeError("step failed")
        return super().solve_step(state, stage)

    def on_exception(self, state: State, exc: BaseException) -> None:
        self.exception = exc
