#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import math

from numpy import ndarray
from torch import Tensor
from torchvortex.utils.loggers.logger import Scalar


def scalar_to_float(scalar: Scalar) -> float:
    """Converts a one-element tensor or array, or a Python number, to a float."""
    if isinstance(scalar, Tensor):
        scalar = scalar.detach().squeeze()
        if scalar.numel() != 1:
            raise ValueError(
                f"Scalar tensor must contain a single item, {scalar.numel()} given."
            )
        return float(scalar.cpu().item())
    if isinstance(scalar, ndarray):
        if scalar.size != 1:
            raise ValueError(
                f"Scalar ndarray must contain a single item, {scalar.size} given."
            )
        return float(scalar.item())
    return float(scalar)


def is_finite_scalar(scalar: Scalar) -> bool:
    return math.isfinite(scalar_to_float(scalar))
