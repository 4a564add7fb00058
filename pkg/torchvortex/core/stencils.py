# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Centered finite-difference operators on masked fields.

Every operator evaluates at nodes whose four axis neighbours are on the input's support; other
nodes are dropped from the output support rather than raising.
"""

from typing import Tuple

import torch
import torch.nn.functional as F
from torchvortex.core.fields import Field
from typing_extensions import Literal

Wirtinger = Literal["dz", "dzbar"]


def stencil_support(support: torch.Tensor) -> torch.Tensor:
    """Nodes that are on ``support`` together with their four axis neighbours."""
    padded = F.pad(support[None, None].to(torch.float64), (1, 1, 1, 1))[0, 0] > 0
    return (
        support
        & padded[2:, 1:-1]
        & padded[:-2, 1:-1]
        & padded[1:-1, 2:]
        & padded[1:-1, :-2]
    )


def _shifted(values: torch.Tensor) -> Tuple[torch.Tensor, torch.Tensor, torch.Tensor, torch.Tensor]:
    # (east, west, north, south) neighbours along x0 and x1; edges wrap but are never on support.
    east = torch.roll(values, shifts=-1, dims=0)
    west = torch.roll(values, shifts=1, dims=0)
    north = torch.roll(values, shifts=-1, dims=1)
    south = torch.roll(values, shifts=1, dims=1)
    return east, west, north, south


def partial_x0(f: Field) -> Field:
    """Centered ``d/dx0``."""
    east, west, _, _ = _shifted(f.filled())
    return f.with_values((east - west) / (2.0 * f.grid_h), stencil_support(f.support))


def partial_x1(f: Field) -> Field:
    """Centered ``d/dx1``."""
    _, _, north, south = _shifted(f.filled())
    return f.with_values((north - south) / (2.0 * f.grid_h), stencil_support(f.support))


def wirtinger(f: Field, which: Wirtinger) -> Field:
    """
    Discrete Wirtinger derivative.

    ``dz = (d0 - i d1) / 2`` and ``dzbar = (d0 + i d1) / 2`` with centered differences, exact on
    quadratic polynomials.

    Args:
        f: real or complex field.
        which: ``"dz"`` or ``"dzbar"``.
    """
    if which not in ("dz", "dzbar"):
        raise ValueError(f"`which` must be 'dz' or 'dzbar', got {which}")
    east, west, north, south = _shifted(f.as_complex().filled())
    d0 = (east - west) / (2.0 * f.grid_h)
    d1 = (north - south) / (2.0 * f.grid_h)
    sign = -1.0 if which == "dz" else 1.0
    return f.with_values(0.5 * (d0 + sign * 1j * d1), stencil_support(f.support))


def laplacian(f: Field) -> Field:
    """Five-point Laplacian ``(f_E + f_W + f_N + f_S - 4 f_C) / h^2``."""
    values = f.filled()
    east, west, north, south = _shifted(values)
    lap = (east + west + north + south - 4.0 * values) / (f.grid_h**2)
    return f.with_values(lap, stencil_support(f.support))


def curl(a0: Field, a1: Field) -> Field:
    """``d0 a1 - d1 a0`` on the common stencil support."""
    return partial_x0(a1) - partial_x1(a0)
