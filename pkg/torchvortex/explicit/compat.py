# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from dataclasses import dataclass

from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.stencils import wirtinger

logger: logging.Logger = logging.getLogger(__name__)


@dataclass
class PairCompatReport:
    """
    Residuals of the conditions under which ``(h1, h2)`` rescale a plane-wave solution into another
    solution: ``dzbar h2 = 0``, ``dz h1 = 0`` and ``|h1| = |h2|``.

    All three are sup norms over interior nodes relative to ``scale = max(sup|h1|, sup|h2|)``.
    """

    dzbar_h2: float
    dz_h1: float
    modulus_mismatch: float
    scale: float
    passed: bool


def check_pair_compat(
    h1: Field,
    h2: Field,
    *,
    cr_rtol: float = 1e-3,
    modulus_rtol: float = 1e-10,
) -> PairCompatReport:
    """
    Checks that ``h2`` is holomorphic, ``h1`` anti-holomorphic and that they share their modulus.

    Args:
        h1: candidate anti-holomorphic factor.
        h2: candidate holomorphic factor.
        cr_rtol: tolerance of both Cauchy-Riemann residuals relative to the scale.
        modulus_rtol: tolerance of the modulus mismatch relative to the scale.

    Raises:
        GeometryError: if the fields live on different masks.
    """
    if not h1.mask.same_layout(h2.mask):
        raise GeometryError("check_pair_compat needs fields on one mask")
    interior = h1.mask.interior
    scale = max(h1.sup(interior), h2.sup(interior))
    norm = scale if scale > 0 else 1.0
    dzbar_h2 = wirtinger(h2, "dzbar").sup(interior) / norm
    dz_h1 = wirtinger(h1, "dz").sup(interior) / norm
    mismatch = (h1.abs() - h2.abs()).sup(interior) / norm
    passed = dzbar_h2 <= cr_rtol and dz_h1 <= cr_rtol and mismatch <= modulus_rtol
    logger.debug(
        f"Pair compatibility: dzbar h2={dzbar_h2:.3e}, dz h1={dz_h1:.3e}, "
        f"modulus mismatch={mismatch:.3e}, passed={passed}"
    )
    return PairCompatReport(
        dzbar_h2=dzbar_h2,
        dz_h1=dz_h1,
        modulus_mismatch=mismatch,
        scale=scale,
        passed=passed,
    )
