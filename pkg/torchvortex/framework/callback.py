# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from torchvortex.framework.state import State
from torchvortex.framework.unit import TSolverUnit


class Callback:
    """
    Optional extension of a solve loop for logic that is reusable across solvers: progress bars,
    metric logging, time limits.

    .. code-block:: python

      class PrintingCallback(Callback):
          def on_stage_start(self, state: State, unit: TSolverUnit) -> None:
              print(f"Starting stage {state.stage}")

          def on_solve_end(self, state: State, unit: TSolverUnit) -> None:
              print(unit.solve_progress.get_progress_string())

    Pass callbacks in the ``callbacks`` argument of :py:func:`~torchvortex.framework.solve`.
    """

    @property
    def name(self) -> str:
        """A distinct name per instance."""
        return self.__class__.__qualname__

    def on_exception(self, state: State, unit: TSolverUnit, exc: BaseException) -> None:
        pass

    def on_solve_start(self, state: State, unit: TSolverUnit) -> None:
        pass

    def on_stage_start(self, state: State, unit: TSolverUnit) -> None:
        pass

    def on_step_start(self, state: State, unit: TSolverUnit) -> None:
        pass

    def on_step_end(self, state: State, unit: TSolverUnit) -> None:
        pass

    def on_stage_end(self, state: State, unit: TSolverUnit) -> None:
        pass

    def on_solve_end(self, state: State, unit: TSolverUnit) -> None:
        pass
