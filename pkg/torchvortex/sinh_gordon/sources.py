# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
The singular part ``G`` and its Laplacian ``r`` for a vortex divisor.

``G = sum_k -log(1 + |z - z_k|^{-alpha_k})`` and
``r = sum_k -alpha_k^2 |z - z_k|^{alpha_k - 2} / (1 + |z - z_k|^{alpha_k})^2``.
"""

import torch
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask


def _g_term(d: torch.Tensor, alpha: int) -> torch.Tensor:
    # -log(1 + d^-a) without overflow on either side of d = 1
    near = d < 1.0
    safe = torch.where(d > 0, d, torch.ones_like(d))
    inside = alpha * torch.log(safe) - torch.log1p(safe**alpha)
    outside = -torch.log1p(safe ** (-alpha))
    return torch.where(near, inside, outside)


def build_G(divisor: VortexDivisor, mask: DomainMask) -> Field:
    """
    Samples ``G`` on the active nodes of ``mask``.

    Nodes that coincide with a vortex are left off the support. ``G <= 0`` and ``G -> 0`` far away.
    """
    z = mask.grid.z()
    total = torch.zeros(mask.grid.shape, dtype=torch.float64)
    support = mask.active.clone()
    for point, alpha in divisor:
        d = (z - point).abs()
        support &= d > 0
        total = total + _g_term(d, alpha)
    return Field.from_values(mask, torch.where(support, total, torch.zeros_like(total)), support)


def build_r(divisor: VortexDivisor, mask: DomainMask) -> Field:
    """
    Samples ``r = Delta G`` (away from the vortices) on the active nodes of ``mask``.

    Raises:
        ConfigurationError: if a multiplicity is below 2.
    """
    divisor.require_min_multiplicity(2)
    z = mask.grid.z()
    total = torch.zeros(mask.grid.shape, dtype=torch.float64)
    for point, alpha in divisor:
        d = (z - point).abs()
        total = total - alpha**2 * d ** (alpha - 2) / (1.0 + d**alpha) ** 2
    return Field.from_values(mask, total, mask.active)
