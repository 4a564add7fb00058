# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .cauchy import cauchy_pompeiu_remainder, CauchyPompeiuSplit, t_operator, t_operator_grid
from .decay import decay_zero_radius, DecayZeroBound
from .lpnu import lpnu_norms, LpNuReport
from .similarity import (
    Factorization,
    similarity_factor,
    system_factor,
    t_operator_defect,
    VekuaCoeffs,
)

__all__ = [
    "cauchy_pompeiu_remainder",
    "CauchyPompeiuSplit",
    "t_operator",
    "t_operator_grid",
    "decay_zero_radius",
    "DecayZeroBound",
    "lpnu_norms",
    "LpNuReport",
    "Factorization",
    "similarity_factor",
    "system_factor",
    "t_operator_defect",
    "VekuaCoeffs",
]
