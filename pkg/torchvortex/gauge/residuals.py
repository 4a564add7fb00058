# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Discrete residuals of the vortex systems.

All residuals are sup-norms over interior nodes on the support of the discrete expression,
optionally intersected with a caller-supplied region (e.g. away from punctures or zeros).

Convention: ``F(A) = i (d0 A1 - d1 A0) dx0 ^ dx1`` and ``dz ^ dzbar = -2i dx0 ^ dx1``.
"""

import logging
from typing import NamedTuple, Optional, Tuple

import torch
from torchvortex.core.errors import ParameterError
from torchvortex.core.fields import Field
from torchvortex.core.stencils import curl, wirtinger
from torchvortex.explicit.solution import SolutionFields

logger: logging.Logger = logging.getLogger(__name__)


class MainResidual(NamedTuple):
    r1: float
    r2: float
    r3: float


class HiggsResidual(NamedTuple):
    r1: float
    r2: float
    r3: float
    r4: float


class TaubesResidual(NamedTuple):
    r1: float
    r2: float


def _sup(f: Field, region: Optional[torch.Tensor]) -> float:
    where = f.mask.interior if region is None else f.mask.interior & region
    return f.sup(where)


def _spinor_residuals(s: SolutionFields) -> Tuple[Field, Field, Field]:
    a_plus = s.A0 + 1j * s.A1
    a_minus = s.A0 - 1j * s.A1
    e1 = 2.0 * wirtinger(s.psi2, "dzbar") + 1j * a_plus * s.psi2
    e2 = 2.0 * wirtinger(s.psi1, "dz") + 1j * a_minus * s.psi1
    density = 0.5 * (s.psi1.abs() * s.psi1.abs() - s.psi2.abs() * s.psi2.abs())
    e3 = curl(s.A0, s.A1) - density
    return e1, e2, e3


def residual_maineq(s: SolutionFields, region: Optional[torch.Tensor] = None) -> MainResidual:
    """
    Sup-residuals of

    * ``2 dzbar psi2 + i (A0 + i A1) psi2 = 0``
    * ``2 dz psi1 + i (A0 - i A1) psi1 = 0``
    * ``d0 A1 - d1 A0 = (|psi1|^2 - |psi2|^2) / 2``
    """
    e1, e2, e3 = _spinor_residuals(s)
    return MainResidual(_sup(e1, region), _sup(e2, region), _sup(e3, region))


def residual_higgs(s: SolutionFields, region: Optional[torch.Tensor] = None) -> HiggsResidual:
    """
    Sup-residuals of the system with a Higgs field ``phi``:

    * ``dzbar phi + psi1 conj(psi2) / 2 = 0``
    * ``d0 A1 - d1 A0 = (|psi1|^2 - |psi2|^2) / 2``
    * ``2 dzbar psi2 + i (A0 + i A1) psi2 = conj(phi) psi1``
    * ``2 dz psi1 + i (A0 - i A1) psi1 = phi psi2``

    Raises:
        ParameterError: if ``s`` carries no Higgs field.
    """
    phi = s.higgs
    if phi is None:
        raise ParameterError("residual_higgs needs a solution with a Higgs field")
    if not s.connection_real:
        logger.warning("Connection is not real; the spinor residuals measure the stored coefficients")
    e1, e2, e3 = _spinor_residuals(s)
    h1 = wirtinger(phi, "dzbar") + 0.5 * s.psi1 * s.psi2.conj()
    h3 = e1 - phi.conj() * s.psi1
    h4 = e2 - phi * s.psi2
    return HiggsResidual(_sup(h1, region), _sup(e3, region), _sup(h3, region), _sup(h4, region))


def residual_taubes(
    A0: Field, A1: Field, phi: Field, region: Optional[torch.Tensor] = None
) -> TaubesResidual:
    """
    Sup-residuals of the Ginzburg-Landau vortex equations

    * ``dzbar phi - (i/2) (A0 + i A1) phi = 0``
    * ``(i/2) F(A) = (1 - |phi|^2) dz ^ dzbar``

    The second is compared as coefficients of ``dx0 ^ dx1``: ``-F/2`` against
    ``-2i (1 - |phi|^2)``, so ``(0, 0, 0)`` gives 2.
    """
    r1 = wirtinger(phi, "dzbar") - 0.5j * (A0 + 1j * A1) * phi
    modulus = phi.abs()
    r2 = -0.5 * curl(A0, A1) + 2j * (1.0 - modulus * modulus)
    return TaubesResidual(_sup(r1, region), _sup(r2, region))
