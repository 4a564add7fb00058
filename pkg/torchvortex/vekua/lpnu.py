# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Membership in the weighted space ``L_{p,nu}(C)``.

``f`` belongs to it when ``f`` is ``L^p`` on the unit disk and the inverted function
``|z|^{-nu} f(1/z)`` is ``L^p`` on the unit disk as well. The second integral is taken over the
disk minus a small excision around the origin at two excision radii; a norm that keeps growing
when the excision halves signals divergence.
"""

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import torch
from torchvortex.core.errors import ParameterError
from torchvortex.core.grid import build_mask, GridSpec

logger: logging.Logger = logging.getLogger(__name__)


@dataclass
class LpNuReport:
    """
    Args:
        norm_inner: ``L^p`` norm of ``f`` over the unit disk.
        norm_inverted: ``L^p`` norm of the inverted function at the finer excision.
        norm_inverted_coarse: same at the coarser excision.
        growth_ratio: ``norm_inverted / norm_inverted_coarse``, 1 when both vanish.
        member: both norms finite and the ratio at most the growth threshold.
    """

    norm_inner: float
    norm_inverted: float
    norm_inverted_coarse: float
    growth_ratio: float
    member: bool


def _lp_norm(values: torch.Tensor, p: float, h: float) -> float:
    if values.numel() == 0:
        return 0.0
    total = float(((values.abs() ** p).sum() * h**2).item())
    return total ** (1.0 / p) if math.isfinite(total) else math.inf


def lpnu_norms(
    f: Callable[[torch.Tensor], torch.Tensor],
    p: float,
    nu: float,
    *,
    n: int = 257,
    excision: Optional[float] = None,
    growth_threshold: float = 1.5,
) -> LpNuReport:
    """
    Estimates both norms that define ``L_{p,nu}`` membership.

    Args:
        f: vectorised function of a complex128 tensor.
        p: exponent, at least 1.
        nu: weight exponent.
        n: nodes per axis of the unit-disk grid.
        excision: coarser excision radius, at least four grid spacings so that the finer one (half
            of it) is resolved. Defaults to ``max(0.05, 4h)``.
        growth_threshold: largest tolerated ratio of the two inverted norms.

    Raises:
        ParameterError: if ``p < 1`` or the excision is below ``4h``.
    """
    if p < 1:
        raise ParameterError(f"p must be at least 1, got {p}")
    grid = GridSpec(1.0, n)
    h = grid.h
    if excision is None:
        excision = max(0.05, 4.0 * h)
    if excision < 4.0 * h:
        raise ParameterError(f"excision {excision} is below four grid spacings 4h={4.0 * h}")
    z = grid.z()

    disk = build_mask(grid, 1.0)
    norm_inner = _lp_norm(f(z[disk.interior]), p, h)

    def inverted(rho: float) -> float:
        mask = build_mask(grid, 1.0, [(0j, rho)])
        zeta = z[mask.interior]
        return _lp_norm(zeta.abs() ** (-nu) * f(1.0 / zeta), p, h)

    coarse = inverted(excision)
    fine = inverted(0.5 * excision)
    if coarse == 0.0 and fine == 0.0:
        ratio = 1.0
    elif coarse == 0.0 or not math.isfinite(fine):
        ratio = math.inf
    else:
        ratio = fine / coarse
    member = math.isfinite(norm_inner) and math.isfinite(fine) and ratio <= growth_threshold
    logger.info(
        f"L_(p={p}, nu={nu}): inner {norm_inner:.4g}, inverted {coarse:.4g} -> {fine:.4g}"
    )
    return LpNuReport(
        norm_inner=norm_inner,
        norm_inverted=fine,
        norm_inverted_coarse=coarse,
        growth_ratio=ratio,
        member=member,
    )
