# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict


class Progress:
    """Counts continuation stages and nonlinear iterations of a solve."""

    def __init__(
        self,
        num_stages_completed: int = 0,
        num_steps_completed: int = 0,
        num_steps_completed_in_stage: int = 0,
    ) -> None:
        self._num_stages_completed: int = num_stages_completed
        self._num_steps_completed: int = num_steps_completed
        self._num_steps_completed_in_stage: int = num_steps_completed_in_stage

    @property
    def num_stages_completed(self) -> int:
        """Number of continuation stages finished so far."""
        return self._num_stages_completed

    @property
    def num_steps_completed(self) -> int:
        """Number of iterations finished so far, over all stages."""
        return self._num_steps_completed

    @property
    def num_steps_completed_in_stage(self) -> int:
        """Number of iterations finished in the current stage."""
        return self._num_steps_completed_in_stage

    def increment_step(self) -> None:
        self._num_steps_completed += 1
        self._num_steps_completed_in_stage += 1

    def increment_stage(self) -> None:
        """Closes the current stage and resets the in-stage step count."""
        self._num_stages_completed += 1
        self._num_steps_completed_in_stage = 0

    def get_progress_string(self) -> str:
        return (
            f"completed stages: {self.num_stages_completed}, completed steps: {self.num_steps_completed}, "
            f"completed steps in current stage: {self.num_steps_completed_in_stage}."
        )
