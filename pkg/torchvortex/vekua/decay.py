# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict


import logging
import math
from typing import NamedTuple

from torchvortex.core.errors import ParameterError

logger: logging.Logger = logging.getLogger(__name__)


class DecayZeroBound(NamedTuple):
    """
    A field with ``0 <= M - |w(z)|^2 <= N e^{-|z|}`` has no zero outside the closed disk of
    radius ``radius``, since at a zero ``M <= N e^{-|z|}``. When ``M > N`` the envelope forbids
    zeros entirely and ``zero_free`` is set.
    """

    radius: float
    zero_free: bool


def decay_zero_radius(M: float, N: float) -> DecayZeroBound:
    """
    Zero-free radius ``max(0, log(N / M))`` for two-sided exponential decay bounds.

    Raises:
        ParameterError: if ``M`` or ``N`` is not positive.
    """
    if M <= 0 or N <= 0:
        raise ParameterError(f"Decay bounds must be positive, got M={M}, N={N}")
    zero_free = M > N
    if zero_free:
        logger.warning(f"Lower decay bound M={M} exceeds upper bound N={N}")
    return DecayZeroBound(radius=max(0.0, math.log(N / M)), zero_free=zero_free)
