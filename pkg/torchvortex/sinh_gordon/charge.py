# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict


import logging
import math
from typing import List

from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.fields import Field
from torchvortex.core.quadrature import contour_normal_flux

logger: logging.Logger = logging.getLogger(__name__)


def distributional_charge(u: Field, divisor: VortexDivisor, eps: float = 0.0) -> List[float]:
    """
    Estimates the Dirac mass of ``Delta u / (2 pi)`` at every vortex.

    The estimate is the outward normal flux of ``u`` through the circle of radius
    ``max(4h, 2 eps)`` around the vortex, divided by ``2 pi``. A field with a ``alpha log|z - z_k|``
    singularity gives ``alpha``; a smooth field gives 0 up to the area term inside the circle.

    Args:
        u: real field defined on an annulus around every vortex.
        divisor: the vortices.
        eps: puncture radius of the domain ``u`` lives on.

    Raises:
        GeometryError: if a circle leaves the support of ``u``.
    """
    rho = max(4.0 * u.grid_h, 2.0 * eps)
    charges: List[float] = []
    for point, alpha in divisor:
        q = contour_normal_flux(u, point, rho) / (2.0 * math.pi)
        logger.info(f"Charge at {point}: {q:.6f} (multiplicity {alpha})")
        charges.append(q)
    return charges
