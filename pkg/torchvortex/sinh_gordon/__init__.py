# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .barrier import barrier_search, BarrierReport, f_value
from .boundary import (
    boundary_data,
    BoundaryData,
    DirichletLaplacian,
    harmonic_extension,
    solve_linear,
)
from .charge import distributional_charge
from .problem import SinhGordonProblem
from .refinement import CompactWindow, ConvergenceReport, nested_refinement
from .solver import MonotoneUnit, NewtonUnit, solve_bvp, SolveMode, SolveResult
from .sources import build_G, build_r

__all__ = [
    "barrier_search",
    "BarrierReport",
    "f_value",
    "boundary_data",
    "BoundaryData",
    "DirichletLaplacian",
    "harmonic_extension",
    "solve_linear",
    "distributional_charge",
    "SinhGordonProblem",
    "CompactWindow",
    "ConvergenceReport",
    "nested_refinement",
    "MonotoneUnit",
    "NewtonUnit",
    "solve_bvp",
    "SolveMode",
    "SolveResult",
    "build_G",
    "build_r",
]
