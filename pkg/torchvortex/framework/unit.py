# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from abc import ABC, abstractmethod
from typing import Generic, TypeVar

from torchvortex.framework.state import State
from torchvortex.utils.progress import Progress

_logger: logging.Logger = logging.getLogger(__name__)

TStage = TypeVar("TStage")
TStepOutput = TypeVar("TStepOutput")


class SolverUnit(Generic[TStage, TStepOutput], ABC):
    """
    An iterative solver driven by :func:`~torchvortex.framework.solve`.

    The loop runs over a schedule of stages (continuation levels, sweeps of a fixed-point map, ...).
    Within a stage it calls :meth:`solve_step` until :meth:`is_stage_done` returns True, the state is
    stopped, or the per-stage step cap is hit. Subclasses own the iterate and decide in
    :meth:`on_stage_end` what an exhausted stage means.

    .. code-block:: python

      class HalvingUnit(SolverUnit[float, Dict[str, float]]):
          def __init__(self) -> None:
              super().__init__()
              self.x = 1.0

          def solve_step(self, state: State, stage: float) -> Dict[str, float]:
              self.x *= 0.5
              return {"x": self.x}

          def is_stage_done(self, state: State, stage: float) -> bool:
              return self.x < stage
    """

    def __init__(self) -> None:
        self.solve_progress = Progress()

    def on_solve_start(self, state: State) -> None:
        """Hook called before the first stage."""
        pass

    def on_stage_start(self, state: State, stage: TStage) -> None:
        """Hook called when a stage starts."""
        pass

    @abstractmethod
    def solve_step(self, state: State, stage: TStage) -> TStepOutput:
        """Performs one iteration and returns its diagnostics."""
        ...

    @abstractmethod
    def is_stage_done(self, state: State, stage: TStage) -> bool:
        """Whether the current iterate satisfies the stage's stopping criterion."""
        ...

    def on_stage_end(self, state: State, stage: TStage) -> None:
        """Hook called after a stage, converged or not."""
        pass

    def on_solve_end(self, state: State) -> None:
        """Hook called after the last stage."""
        pass

    def on_exception(self, state: State, exc: BaseException) -> None:
        """Hook called when an exception escapes the loop."""
        pass


TSolverUnit = SolverUnit
