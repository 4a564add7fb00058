# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""Seeded synthetic fields for energy, flux and envelope checks."""

import math
from typing import Tuple

import torch
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask
from torchvortex.utils.env import generator


def bump(mask: DomainMask, radius: float) -> torch.Tensor:
    """Smooth bump ``exp(1 - 1 / (1 - s^2))``, ``s = |z| / radius``, equal to 1 at the origin."""
    s2 = (mask.grid.z().abs() / radius) ** 2
    inside = s2 < 1.0
    safe = torch.where(inside, s2, torch.zeros_like(s2))
    return torch.where(inside, torch.exp(1.0 - 1.0 / (1.0 - safe)), torch.zeros_like(s2))


def compact_fields(
    mask: DomainMask, seed: int, *, support_radius: float = 0.0, degree: int = 2
) -> Tuple[Field, Field, Field]:
    """
    Random smooth ``(A0, A1, phi)`` equal to the vacuum ``(0, 0, 1)`` outside ``support_radius``.

    Each field is a bump times a random polynomial of the given degree in ``z / support_radius``.
    ``support_radius`` defaults to ``0.8 R``.
    """
    rho = support_radius or 0.8 * mask.radius
    g = generator(seed)
    x0, x1 = mask.grid.coordinates()
    x0, x1 = x0 / rho, x1 / rho
    b = bump(mask, rho)

    def poly() -> torch.Tensor:
        coeffs = torch.randn((degree + 1, degree + 1), generator=g, dtype=torch.float64)
        out = torch.zeros_like(x0)
        for p in range(degree + 1):
            for q in range(degree + 1 - p):
                out = out + coeffs[p, q] * x0**p * x1**q
        return out

    A0 = Field.from_values(mask, b * poly())
    A1 = Field.from_values(mask, b * poly())
    phi = Field.from_values(mask, 1.0 + b * torch.complex(poly(), poly()))
    return A0, A1, phi


def flux_tube(mask: DomainMask, width: float = 1.0) -> Tuple[Field, Field]:
    """
    The radial connection ``A_theta = (1 - exp(-r^2 / s^2)) / r``, whose curvature
    ``(2 / s^2) exp(-r^2 / s^2)`` integrates to ``2 pi`` over the plane.
    """
    x0, x1 = mask.grid.coordinates()
    r2 = x0**2 + x1**2
    safe = torch.where(r2 > 0, r2, torch.ones_like(r2))
    profile = torch.where(r2 > 0, -torch.expm1(-safe / width**2) / safe, torch.full_like(r2, 1.0 / width**2))
    return Field.from_values(mask, -profile * x1), Field.from_values(mask, profile * x0)


def envelope_pair(
    mask: DomainMask,
    M: float = 0.5,
    N: float = 0.3,
    rate: float = 1.0,
    ratio: float = 1.0,
) -> Tuple[Field, Field]:
    """
    ``psi2 = sqrt(M - N exp(-rate |z|))`` and ``psi1 = ratio * psi2``; requires ``M > N``.
    """
    if not M > N >= 0:
        raise ValueError(f"Envelope needs M > N >= 0, got M={M}, N={N}")
    r = mask.grid.z().abs()
    psi2 = torch.sqrt(M - N * torch.exp(-rate * r)).to(torch.complex128)
    return Field.from_values(mask, ratio * psi2), Field.from_values(mask, psi2)


def unit_flux(width: float, radius: float) -> float:
    """Exact ``flux / 2 pi`` of :func:`flux_tube` over the disk of the given radius."""
    return -math.expm1(-(radius**2) / width**2)
