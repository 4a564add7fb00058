# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .compat import check_pair_compat, PairCompatReport
from .divisor_map import divisor_of
from .families import (
    FamilyParams,
    generate_divisor_solution,
    generate_higgs_solution,
    generate_plane_wave,
    HiggsConnection,
)
from .solution import SolutionFields

__all__ = [
    "check_pair_compat",
    "PairCompatReport",
    "divisor_of",
    "FamilyParams",
    "generate_divisor_solution",
    "generate_higgs_solution",
    "generate_plane_wave",
    "HiggsConnection",
    "SolutionFields",
]
