#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from typing import Mapping, Union

from numpy import ndarray
from torch import Tensor
from typing_extensions import Protocol

Scalar = Union[Tensor, ndarray, int, float]


class MetricLogger(Protocol):
    """
    Sink for scalar solver diagnostics such as residual norms and step lengths.
    """

    def log(self, name: str, data: Scalar, step: int) -> None:
        """Log one scalar.

        Args:
            name: metric name, e.g. ``"residual_sup"``.
            data: scalar value.
            step: iteration counter the value belongs to.
        """
        pass

    def log_dict(self, payload: Mapping[str, Scalar], step: int) -> None:
        """Log several scalars recorded at the same iteration."""
        pass

    def close(self) -> None:
        """Flush and release resources; nothing may be logged afterwards."""
        pass
