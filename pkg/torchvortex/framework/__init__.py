# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .callback import Callback
from .solve import solve
from .state import State
from .unit import SolverUnit, TSolverUnit

__all__ = [
    "Callback",
    "solve",
    "State",
    "SolverUnit",
    "TSolverUnit",
]
