#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
import math
from typing import Union

import torch
from typing_extensions import final

_log: logging.Logger = logging.getLogger(__name__)


@final
class StagnationChecker:
    """
    Watches a decreasing iteration metric (usually a residual norm) and reports when it stops improving.

    Args:
        patience: number of consecutive checks without improvement after which stagnation is reported.
        min_delta: minimum absolute decrease below the best value that counts as improvement.
        check_finite: report stagnation as soon as the metric is NaN or infinite.

    Raises:
        ValueError:
            If ``min_delta`` < 0 or ``patience`` < 1.
    """

    def __init__(
        self,
        patience: int,
        min_delta: float = 0.0,
        check_finite: bool = True,
    ) -> None:
        if min_delta < 0:
            raise ValueError(f"`min_delta` must be greater than or equal to 0. Got {min_delta}")
        if patience < 1:
            raise ValueError(f"`patience` must be positive. Got {patience}")
        self._patience: int = patience
        self._min_delta: float = min_delta
        self._check_finite: bool = check_finite
        self.reset()

    @property
    def patience(self) -> int:
        return self._patience

    @property
    def patience_count(self) -> int:
        return self._patience_count

    @property
    def best_value(self) -> float:
        return self._best_value

    def reset(self) -> None:
        self._patience_count: int = 0
        self._best_value: float = math.inf

    def check(self, val: Union[torch.Tensor, float]) -> bool:
        """
        Records ``val`` and returns whether the metric has stagnated.

        Raises:
            ValueError:
                If ``val`` is a tensor with more than one element.
        """
        if isinstance(val, torch.Tensor):
            if val.numel() != 1:
                raise ValueError(
                    f"Expected tensor with only 1 element, but input has number of elements = {val.numel()}"
                )
            val = float(val.item())
        val = float(val)

        if self._check_finite and not math.isfinite(val):
            _log.debug(f"Metric is not finite: {val}. Previous best value was {self._best_value}.")
            return True

        if val < self._best_value - self._min_delta:
            _log.debug(f"Metric improved from {self._best_value} to {val}")
            self._best_value = val
            self._patience_count = 0
            return False

        self._patience_count += 1
        if self._patience_count >= self._patience:
            _log.debug(
                f"Metric did not improve in the last {self._patience_count} checks."
                f" Best value: {self._best_value}."
            )
            return True
        _log.debug(
            f"Metric did not improve in the last {self._patience_count} checks."
            f" {self._patience - self._patience_count} checks of patience remaining."
        )
        return False
