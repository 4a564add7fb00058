# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Reconstruction of the spinor pair and connection from a solution ``u`` of the sinh-Gordon problem.

With ``lambda = e^u`` and the gauge fixed by ``psi2 >= 0``:
``psi2 = exp((C - u) / 2)``, ``psi1 = lambda psi2`` and ``i conj(alpha) = -dzbar log psi2`` with
``alpha = (A0 - i A1) / 2``.
"""

import logging
import math
from dataclasses import dataclass
from enum import auto, Enum
from typing import Callable, Optional

import torch
from torchvortex.core.errors import GeometryError, ParameterError
from torchvortex.core.fields import Field
from torchvortex.core.stencils import wirtinger
from torchvortex.explicit.solution import SolutionFields
from torchvortex.gauge.transform import gauge_transform

logger: logging.Logger = logging.getLogger(__name__)


class GaugeConvention(Enum):
    """``REAL``: ``psi2`` real and non-negative. ``CUSTOM``: that gauge followed by a given phase."""

    REAL = auto()
    CUSTOM = auto()


@dataclass(frozen=True)
class ReconstructionParams:
    """
    Args:
        M1: asymptotic value of ``|psi1|^2``, in ``(0, 1)``.
        M2: asymptotic value of ``|psi2|^2``, in ``(0, 1)``.
        gauge: phase convention.
        phase: gauge function applied after reconstruction when ``gauge`` is ``CUSTOM``.
        zero_floor: ``|psi2|`` below which the connection is not evaluated; defaults to
            ``1e-8 sup|psi2|``.

    Raises:
        ParameterError: if ``M1`` or ``M2`` is outside ``(0, 1)`` or a custom gauge has no phase.
    """

    M1: float
    M2: float
    gauge: GaugeConvention = GaugeConvention.REAL
    phase: Optional[Callable[[torch.Tensor], torch.Tensor]] = None
    zero_floor: Optional[float] = None

    def __post_init__(self) -> None:
        for name, value in (("M1", self.M1), ("M2", self.M2)):
            if not 0.0 < value < 1.0:
                raise ParameterError(f"{name} must lie in (0, 1), got {value}")
        if self.gauge == GaugeConvention.CUSTOM and self.phase is None:
            raise ParameterError("A custom gauge needs a phase function")

    @property
    def C(self) -> float:
        """``log sqrt(M1 M2)``."""
        return 0.5 * math.log(self.M1 * self.M2)

    @property
    def Mprime(self) -> float:
        """``log sqrt(M1 / M2)``."""
        return 0.5 * math.log(self.M1 / self.M2)

    @property
    def M(self) -> float:
        """``sqrt(M1 M2)``, the coupling of the sinh-Gordon problem."""
        return math.sqrt(self.M1 * self.M2)


def reconstruct_fields(u: Field, params: ReconstructionParams) -> SolutionFields:
    """
    Builds ``(A0, A1, psi1, psi2)`` from ``u``.

    The connection lives on the nodes where the centered stencil sees ``|psi2|`` above the floor.

    Raises:
        GeometryError: if no interior node supports the differentiation.
    """
    if u.is_complex:
        raise GeometryError("reconstruct_fields expects a real u")
    C = params.C
    log_psi2 = (C - u) * 0.5
    psi2 = log_psi2.exp()
    psi1 = ((C + u) * 0.5).exp()
    floor = params.zero_floor
    if floor is None:
        floor = 1e-8 * psi2.sup()
    above = psi2.support & (psi2.filled() > floor)
    excluded = int((psi2.support & ~above).sum().item())
    if excluded:
        logger.info(f"{excluded} nodes below the zero floor {floor:.3e} are left out of the connection")
    dzbar = wirtinger(log_psi2.restrict(above), "dzbar")
    if not bool((dzbar.support & u.mask.interior).any()):
        raise GeometryError("The support of u is too small to differentiate")
    alpha_bar = 1j * dzbar
    A0 = 2.0 * alpha_bar.real()
    A1 = 2.0 * alpha_bar.imag()
    fields = SolutionFields(A0=A0, A1=A1, psi1=psi1, psi2=psi2)
    if params.gauge == GaugeConvention.CUSTOM and params.phase is not None:
        fields = gauge_transform(fields, params.phase)
    return fields
