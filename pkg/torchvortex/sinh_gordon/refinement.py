# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Nested refinement studies: shrink the punctures and grow the disk, and watch whether consecutive
solutions settle on a fixed compact window.
"""

import logging
import math
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List, Optional, Sequence, Tuple

import torch
from torchvortex.core.errors import ConfigurationError, VortexError
from torchvortex.core.grid import GridSpec
from torchvortex.core.quadrature import interpolate
from torchvortex.sinh_gordon.problem import SinhGordonProblem
from torchvortex.sinh_gordon.solver import solve_bvp, SolveResult

logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CompactWindow:
    """
    The annulus ``inner <= |z - center| <= outer``; ``inner = 0`` gives a closed disk.
    """

    outer: float
    inner: float = 0.0
    center: complex = 0j

    def __post_init__(self) -> None:
        if not 0.0 <= self.inner < self.outer:
            raise ConfigurationError(
                f"Window needs 0 <= inner < outer, got inner={self.inner}, outer={self.outer}"
            )

    def contains(self, z: torch.Tensor) -> torch.Tensor:
        d = (z - self.center).abs()
        return (d >= self.inner) & (d <= self.outer)


@dataclass
class ConvergenceReport:
    """
    Args:
        levels: ``(eps, R, n)`` of every completed solve.
        differences: sup over the window of ``|u_k - u_{k-1}|``, one per consecutive pair.
        residuals: ``residual_sup`` of every completed solve.
        non_increasing: the differences never grow.
        window_nodes: number of comparison nodes.
        failure: message of the solve that aborted the study, if any.
    """

    levels: List[Tuple[float, float, int]] = field(default_factory=list)
    differences: List[float] = field(default_factory=list)
    residuals: List[float] = field(default_factory=list)
    non_increasing: bool = True
    window_nodes: int = 0
    failure: Optional[str] = None

    @property
    def completed(self) -> bool:
        return self.failure is None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "levels": [list(level) for level in self.levels],
            "differences": list(self.differences),
            "residuals": list(self.residuals),
            "non_increasing": self.non_increasing,
            "window_nodes": self.window_nodes,
            "failure": self.failure,
        }


def _schedule(
    eps_schedule: Sequence[float], R_schedule: Sequence[float]
) -> List[Tuple[float, float]]:
    if not eps_schedule or not R_schedule:
        raise ConfigurationError("Refinement schedules must not be empty")
    if len(eps_schedule) != len(R_schedule):
        if len(eps_schedule) == 1:
            eps_schedule = list(eps_schedule) * len(R_schedule)
        elif len(R_schedule) == 1:
            R_schedule = list(R_schedule) * len(eps_schedule)
        else:
            raise ConfigurationError(
                f"Schedules have lengths {len(eps_schedule)} and {len(R_schedule)}"
            )
    pairs = list(zip(eps_schedule, R_schedule))
    for (e0, r0), (e1, r1) in zip(pairs, pairs[1:]):
        if e1 > e0 or r1 < r0:
            raise ConfigurationError(
                f"Schedules must be non-increasing in eps and non-decreasing in R, got {pairs}"
            )
    return pairs


def _check_window(window: CompactWindow, problem: SinhGordonProblem, pairs: List[Tuple[float, float]]) -> None:
    for eps, R in pairs:
        if abs(window.center) + window.outer > R - 2.0 * problem.grid.h:
            raise ConfigurationError(f"Window {window} is not inside the disk of radius {R}")
        for point in problem.divisor.points:
            d = abs(point - window.center)
            if not (d + eps < window.inner or d - eps > window.outer):
                raise ConfigurationError(
                    f"Window {window} meets the puncture of radius {eps} at {point}"
                )


def nested_refinement(
    problem: SinhGordonProblem,
    eps_schedule: Sequence[float],
    R_schedule: Sequence[float],
    window: CompactWindow,
    **solve_kwargs: Any,
) -> ConvergenceReport:
    """
    Solves ``problem`` along a schedule of ``(eps, R)`` and compares consecutive solutions on
    ``window``.

    Every level uses the spacing ``min(h, eps / 2)`` where ``h`` is the spacing of
    ``problem.grid``, on the grid ``[-R, R]^2``. Solutions ``u`` are compared at the window nodes
    of the coarsest grid by bilinear interpolation. A failed solve ends the study; the report then
    covers the levels completed so far.

    Raises:
        ConfigurationError: if the schedules or the window are invalid.
    """
    pairs = _schedule(eps_schedule, R_schedule)
    _check_window(window, problem, pairs)
    report = ConvergenceReport()
    points: Optional[torch.Tensor] = None
    previous: Optional[torch.Tensor] = None
    for eps, R in pairs:
        spacing = min(problem.grid.h, 0.5 * eps)
        n = int(math.ceil(2.0 * R / spacing - 1e-9)) + 1
        try:
            level = replace(problem, eps=eps, R=R, grid=GridSpec(R, n))
            result: SolveResult = solve_bvp(level, **solve_kwargs)
        except VortexError as e:
            report.failure = f"eps={eps}, R={R}: {e}"
            logger.error(f"Refinement aborted at {report.failure}")
            return report
        if points is None:
            z = level.grid.z()
            points = z[window.contains(z)]
            report.window_nodes = int(points.numel())
        values = interpolate(result.u, points)
        if previous is not None:
            report.differences.append(float((values - previous).abs().max().item()))
        previous = values
        report.levels.append((eps, R, n))
        report.residuals.append(result.residual_sup)
        logger.info(f"Refinement level eps={eps}, R={R}, n={n}: residual {result.residual_sup:.3e}")
    diffs = report.differences
    report.non_increasing = all(b <= a * (1.0 + 1e-12) + 1e-14 for a, b in zip(diffs, diffs[1:]))
    if not report.non_increasing:
        logger.warning(f"Refinement differences are not monotone: {diffs}")
    return report
