# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
import random

import numpy as np
import torch

_log: logging.Logger = logging.getLogger(__name__)


def seed(seed: int) -> None:
    """Seeds torch, numpy and the python random module.

    The synthetic field generators draw from a ``torch.Generator`` seeded explicitly, so this only
    matters for code that uses the global generators.

    Args:
        seed: the integer seed.

    Raises:
        ValueError
            If the seed is outside the uint32 range.
    """
    max_val = np.iinfo(np.uint32).max
    min_val = np.iinfo(np.uint32).min
    if seed < min_val or seed > max_val:
        raise ValueError(
            f"Invalid seed value provided: {seed}. Value must be in the range [{min_val}, {max_val}]"
        )
    _log.debug(f"Setting seed to {seed}")
    torch.manual_seed(seed)
    np.random.seed(seed)
    random.seed(seed)


def generator(seed: int) -> torch.Generator:
    """A CPU generator seeded with ``seed``."""
    g = torch.Generator()
    g.manual_seed(seed)
    return g
