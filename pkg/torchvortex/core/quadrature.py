# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
import math
from typing import Optional, Union

import torch
import torch.nn.functional as F
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask

logger: logging.Logger = logging.getLogger(__name__)


def area_integral(
    f: Field, mask: Optional[DomainMask] = None
) -> Union[float, complex]:
    """
    Node-cell midpoint rule: ``h^2`` times the sum over interior nodes on the field's support.

    Boundary cells count as full or empty according to the node classification, which is an
    ``O(h)`` source of error for curved boundaries.

    Args:
        f: real or complex field.
        mask: mask whose interior is integrated over, defaults to ``f.mask``.
    """
    mask = mask or f.mask
    where = f.support & mask.interior
    total = f.values[where].sum() * (f.grid_h**2)
    if f.is_complex:
        return complex(total.item())
    return float(total.item())


def _sample(values: torch.Tensor, points: torch.Tensor, extent: float) -> torch.Tensor:
    # grid_sample indexes (W, H) = (x1, x0); align_corners maps +-1 to the outer nodes.
    grid = torch.stack([points.imag / extent, points.real / extent], dim=-1)
    grid = grid.reshape(1, 1, -1, 2).to(torch.float64)
    out = F.grid_sample(
        values[None, None].to(torch.float64),
        grid,
        mode="bilinear",
        padding_mode="zeros",
        align_corners=True,
    )
    return out.reshape(points.shape)


def interpolate(f: Field, points: torch.Tensor, strict: bool = True) -> torch.Tensor:
    """
    Bilinear interpolation of ``f`` at complex ``points``.

    Args:
        f: real or complex field.
        points: complex tensor of evaluation points.
        strict: raise if a point's interpolation cell touches a node off support.

    Raises:
        GeometryError: if ``strict`` and some point is not covered by the support.
    """
    points = points.to(torch.complex128)
    extent = f.mask.grid.extent
    covered = _sample(f.support.to(torch.float64), points, extent)
    if strict and bool((covered < 1.0 - 1e-12).any()):
        bad = int((covered < 1.0 - 1e-12).sum().item())
        raise GeometryError(
            f"{bad} interpolation points are not covered by the field's support"
        )
    values = f.filled()
    if f.is_complex:
        return torch.complex(
            _sample(values.real, points, extent), _sample(values.imag, points, extent)
        )
    return _sample(values, points, extent)


def contour_normal_flux(f: Field, center: complex, radius: float) -> float:
    """
    Outward normal flux of a real field through the circle ``|z - center| = radius``.

    Uses ``max(16, ceil(2 pi radius / h))`` equally spaced angles (trapezoid rule), and a centered
    radial difference with step ``h`` between bilinearly interpolated values.

    Raises:
        GeometryError: if the sampled annulus leaves the support.
    """
    if f.is_complex:
        raise GeometryError("contour_normal_flux expects a real field")
    h = f.grid_h
    if radius <= h:
        raise GeometryError(f"Contour radius {radius} must exceed the grid spacing {h}")
    m = max(16, math.ceil(2.0 * math.pi * radius / h))
    theta = torch.arange(m, dtype=torch.float64) * (2.0 * math.pi / m)
    direction = torch.exp(1j * theta.to(torch.complex128))
    try:
        outer = interpolate(f, center + (radius + h) * direction)
        inner = interpolate(f, center + (radius - h) * direction)
    except GeometryError as e:
        raise GeometryError(
            f"Circle of radius {radius} around {center} exits the field's support"
        ) from e
    dr = (outer - inner) / (2.0 * h)
    return float(dr.sum().item() * radius * 2.0 * math.pi / m)
