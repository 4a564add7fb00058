# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
The area Cauchy transform ``T(f)(z) = -(1/pi) iint f(zeta) / (zeta - z) dA(zeta)`` on a masked grid.

Both evaluators use the same node-cell midpoint rule over the interior nodes on the integrand's
support. The cell containing the evaluation point contributes nothing: the kernel is odd about the
cell center, so this is exact for evaluation at nodes and first order otherwise.
"""

import logging
import math
from dataclasses import dataclass
from typing import Sequence, Union

import torch
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.stencils import wirtinger

logger: logging.Logger = logging.getLogger(__name__)

_CHUNK = 256


def _as_points(points: Union[torch.Tensor, Sequence[complex]]) -> torch.Tensor:
    if isinstance(points, torch.Tensor):
        return points.to(torch.complex128).reshape(-1)
    return torch.tensor([complex(p) for p in points], dtype=torch.complex128)


def _check_inside(f: Field, points: torch.Tensor) -> None:
    grid = f.mask.grid
    active = f.mask.active
    for p in points.tolist():
        if abs(p.real) > grid.extent or abs(p.imag) > grid.extent:
            raise GeometryError(f"Evaluation point {p} lies outside the grid")
        i, j = grid.index_of(p)
        if not bool(active[i, j]):
            raise GeometryError(f"Evaluation point {p} lies outside the mask")


def t_operator(f: Field, eval_points: Union[torch.Tensor, Sequence[complex]]) -> torch.Tensor:
    """
    Evaluates ``T(f)`` at arbitrary points by direct summation.

    Args:
        f: complex (or real) integrand; only interior nodes on its support contribute.
        eval_points: complex points inside the mask.

    Returns:
        complex128 tensor of values, one per point.

    Raises:
        GeometryError: if a point lies outside the mask.
    """
    points = _as_points(eval_points)
    _check_inside(f, points)
    h = f.grid_h
    where = f.support & f.mask.interior
    nodes = f.mask.grid.z()[where]
    weights = f.as_complex().values[where]
    out = torch.zeros(points.shape, dtype=torch.complex128)
    for start in range(0, points.numel(), _CHUNK):
        p = points[start : start + _CHUNK, None]
        d = nodes[None, :] - p
        own_cell = (d.real.abs() <= 0.5 * h) & (d.imag.abs() <= 0.5 * h)
        kernel = torch.where(own_cell, torch.zeros_like(d), 1.0 / torch.where(own_cell, torch.ones_like(d), d))
        out[start : start + _CHUNK] = -(h**2 / math.pi) * (kernel * weights[None, :]).sum(dim=1)
    return out


def _kernel(n: int, h: float) -> torch.Tensor:
    offsets = torch.arange(-(n - 1), n, dtype=torch.float64) * h
    d0, d1 = torch.meshgrid(offsets, offsets, indexing="ij")
    d = torch.complex(d0, d1)
    d[n - 1, n - 1] = 1.0
    kernel = 1.0 / d
    kernel[n - 1, n - 1] = 0.0
    return kernel


def t_operator_grid(f: Field) -> Field:
    """
    Evaluates ``T(f)`` at every node of the mask through an FFT convolution.

    Agrees with :func:`t_operator` at nodes to rounding. The output's support is the mask's
    non-excluded set.
    """
    grid = f.mask.grid
    n = grid.n
    h = grid.h
    where = f.support & f.mask.interior
    values = torch.where(where, f.as_complex().filled(), torch.zeros((), dtype=torch.complex128))
    size = 3 * n - 2
    # T(f)(p) = (h^2 / pi) sum f(zeta) / (p - zeta)
    spectrum = torch.fft.fft2(values, s=(size, size)) * torch.fft.fft2(_kernel(n, h), s=(size, size))
    conv = torch.fft.ifft2(spectrum)[n - 1 : 2 * n - 1, n - 1 : 2 * n - 1]
    return Field.from_values(f.mask, (h**2 / math.pi) * conv, f.mask.active)


@dataclass
class CauchyPompeiuSplit:
    """
    ``w = remainder + T(dzbar w)`` on the mask.

    Args:
        remainder: ``w - T(dzbar w)``, the holomorphic part carried by the boundary integral.
        cr_residual: sup over interior nodes of the discrete ``|dzbar remainder|``.
    """

    remainder: Field
    cr_residual: float


def cauchy_pompeiu_remainder(w: Field) -> CauchyPompeiuSplit:
    """Splits ``w`` into its area transform part and a holomorphic remainder."""
    dzbar_w = wirtinger(w, "dzbar")
    remainder = w.as_complex() - t_operator_grid(dzbar_w)
    cr = wirtinger(remainder, "dzbar").sup(w.mask.interior)
    logger.debug(f"Cauchy-Pompeiu remainder has dzbar residual {cr:.3e}")
    return CauchyPompeiuSplit(remainder=remainder, cr_residual=cr)
