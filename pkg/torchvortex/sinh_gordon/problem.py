# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any

from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import ConfigurationError, ParameterError
from torchvortex.core.grid import build_mask, DomainMask, GridSpec

logger: logging.Logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SinhGordonProblem:
    """
    The Dirichlet problem ``Delta v = -2M sinh(v + G + M') - r`` on the disk ``D(0, R)`` with an
    ``eps``-disk removed around every vortex.

    Args:
        divisor: vortex locations; every multiplicity must be at least 2.
        M: coupling ``sqrt(M1 M2)``, in ``[0, 1)``. ``M = 0`` is the linear limit.
        R: outer radius.
        grid: grid covering ``[-extent, extent]^2`` with ``extent >= R``.
        Mprime: asymptotic value of ``u``.
        eps: puncture radius, at least ``2h``.
        tol_newton: target sup-norm of the nonlinear residual.
        tol_linear: relative residual of every sparse linear solve.
        continuation_steps: number of equal increments of ``M``.

    Raises:
        ParameterError: if ``M`` or ``Mprime`` is out of range.
        ConfigurationError: if the divisor, tolerances or geometry are invalid.
    """

    divisor: VortexDivisor
    M: float
    R: float
    grid: GridSpec
    Mprime: float = 0.0
    eps: float = 0.1
    tol_newton: float = 1e-9
    tol_linear: float = 1e-10
    continuation_steps: int = 8

    def __post_init__(self) -> None:
        if not 0.0 <= self.M < 1.0:
            raise ParameterError(f"M must lie in [0, 1), got {self.M}")
        if self.Mprime < 0.0:
            raise ParameterError(f"Mprime must be non-negative, got {self.Mprime}")
        self.divisor.require_min_multiplicity(2)
        if self.tol_newton <= 0 or self.tol_linear <= 0:
            raise ConfigurationError(
                f"Tolerances must be positive, got tol_newton={self.tol_newton}, tol_linear={self.tol_linear}"
            )
        if self.continuation_steps < 1:
            raise ConfigurationError(
                f"continuation_steps must be positive, got {self.continuation_steps}"
            )
        # builds the mask, which checks eps >= 2h and the puncture placement
        _ = self.mask

    @classmethod
    def on_disk(cls, divisor: VortexDivisor, M: float, R: float, n: int, **kwargs: Any) -> "SinhGordonProblem":
        """Problem on the grid ``[-R, R]^2`` with ``n`` nodes per axis."""
        return cls(divisor=divisor, M=M, R=R, grid=GridSpec(R, n), **kwargs)

    @cached_property
    def mask(self) -> DomainMask:
        return build_mask(self.grid, self.R, [(z, self.eps) for z in self.divisor.points])
