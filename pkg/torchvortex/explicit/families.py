# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Closed-form solution families of the vortex equations.

All families share the plane-wave factor ``exp(i c2 (z + zbar)) = exp(2 i c2 x0)`` and a flat connection.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import auto, Enum
from typing import Union

import torch
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import ParameterError
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask
from torchvortex.explicit.solution import SolutionFields
from typing_extensions import Literal

logger: logging.Logger = logging.getLogger(__name__)

Number = Union[int, float, complex]


class HiggsConnection(Enum):
    """
    How the with-Higgs family stores its connection ``(-i c2 / 2) dz``.

    - ``LITERAL``: the complex coefficients of that form, ``A0 = -c2/2`` and ``A1 = -i c2/2``; the
      second spinor equation is then violated by ``c2 |psi2|``.
    - ``CONSISTENT``: the real connection ``A0 = -c2, A1 = 0`` for which all four equations hold.
    """

    LITERAL = auto()
    CONSISTENT = auto()


@dataclass(frozen=True)
class FamilyParams:
    """
    Parameters of the divisor family.

    Args:
        c1: nonzero complex amplitude.
        c2: plane-wave frequency, complex in general.
        theta: relative phase of psi1.
        divisor: zero set of psi2.

    Raises:
        ParameterError: if ``c1 == 0``.
    """

    c1: complex
    c2: complex
    theta: float = 0.0
    divisor: VortexDivisor = field(default_factory=VortexDivisor)

    def __post_init__(self) -> None:
        if self.c1 == 0:
            raise ParameterError("c1 must be nonzero")


def _constant(mask: DomainMask, value: Number) -> Field:
    value = complex(value)
    if value.imag == 0.0:
        return Field.constant(mask, value.real)
    return Field.constant(mask, value)


def _plane_wave(mask: DomainMask, c2: Number) -> torch.Tensor:
    x0, _ = mask.grid.coordinates()
    return torch.exp(2j * complex(c2) * x0.to(torch.complex128))


def _divisor_polynomial(z: torch.Tensor, divisor: VortexDivisor) -> torch.Tensor:
    out = torch.ones_like(z)
    for point, multiplicity in divisor:
        out = out * (z - point) ** multiplicity
    return out


def generate_plane_wave(
    mask: DomainMask, c1: Number, c2: Number, sign: Literal[1, -1] = 1
) -> SolutionFields:
    """
    ``(A0, A1, psi1, psi2) = (-2 c2, 0, sign c1 e^{i c2 (z+zbar)}, c1 e^{i c2 (z+zbar)})``.

    Raises:
        ParameterError: if ``c1 == 0`` or ``sign`` is not +-1.
    """
    if c1 == 0:
        raise ParameterError("c1 must be nonzero")
    if sign not in (1, -1):
        raise ParameterError(f"sign must be +1 or -1, got {sign}")
    wave = complex(c1) * _plane_wave(mask, c2)
    return SolutionFields(
        A0=_constant(mask, -2.0 * complex(c2)),
        A1=Field.constant(mask, 0.0),
        psi1=Field.from_values(mask, sign * wave),
        psi2=Field.from_values(mask, wave),
    )


def generate_divisor_solution(mask: DomainMask, params: FamilyParams) -> SolutionFields:
    """
    The divisor family::

        psi2 = c1 prod (z - z_j)^{n_j} e^{i c2 (z+zbar)}
        psi1 = c1 e^{i theta} prod (zbar - zbar_j)^{n_j} e^{i c2 (z+zbar)}
        A0 = -2 c2,  A1 = 0

    With an empty divisor and ``theta = 0`` this is :func:`generate_plane_wave` with sign +1.
    """
    z = mask.grid.z()
    wave = complex(params.c1) * _plane_wave(mask, params.c2)
    h2 = _divisor_polynomial(z, params.divisor)
    h1 = complex(math.cos(params.theta), math.sin(params.theta)) * torch.conj(h2)
    logger.debug(
        f"Divisor solution of degree {params.divisor.degree} with c1={params.c1}, c2={params.c2}"
    )
    return SolutionFields(
        A0=_constant(mask, -2.0 * complex(params.c2)),
        A1=Field.constant(mask, 0.0),
        psi1=Field.from_values(mask, h1 * wave),
        psi2=Field.from_values(mask, h2 * wave),
    )


def generate_higgs_solution(
    mask: DomainMask,
    c1: Number,
    c2: float,
    connection: HiggsConnection = HiggsConnection.LITERAL,
    rtol: float = 1e-12,
) -> SolutionFields:
    """
    The with-Higgs family ``(psi1, psi2, phi) = (c1, c1 e^{i c2 (z+zbar)}, -i c2 e^{-i c2 (z+zbar)})``.

    Args:
        mask: domain mask.
        c1: complex amplitude with ``|c1| = sqrt(2) c2``.
        c2: positive real frequency.
        connection: storage of the connection, see :class:`HiggsConnection`.
        rtol: relative tolerance of the constraint.

    Raises:
        ParameterError: if ``c2`` is not real positive or ``|c1| = sqrt(2) c2`` fails.
    """
    if isinstance(c2, complex):
        if c2.imag != 0.0:
            raise ParameterError(f"c2 must be real for the with-Higgs family, got {c2}")
        c2 = c2.real
    c2 = float(c2)
    if not c2 > 0:
        raise ParameterError(f"c2 must be positive for the with-Higgs family, got {c2}")
    target = math.sqrt(2.0) * c2
    if abs(abs(c1) - target) > rtol * target:
        raise ParameterError(
            f"The with-Higgs family requires |c_1| = √2 c_2, got |c1|={abs(c1)} and √2 c2={target}"
        )
    wave = _plane_wave(mask, c2)
    if connection == HiggsConnection.LITERAL:
        A0 = Field.constant(mask, -0.5 * c2)
        A1 = Field.constant(mask, complex(0.0, -0.5 * c2))
        logger.warning(
            "Storing the with-Higgs connection literally: A1 is imaginary, so the connection is not real"
        )
    else:
        A0 = Field.constant(mask, -c2)
        A1 = Field.constant(mask, 0.0)
    return SolutionFields(
        A0=A0,
        A1=A1,
        psi1=Field.constant(mask, complex(c1)),
        psi2=Field.from_values(mask, complex(c1) * wave),
        higgs=Field.from_values(mask, -1j * c2 * torch.conj(wave)),
    )
