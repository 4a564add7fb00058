# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
import math
from dataclasses import dataclass, field
from enum import IntEnum
from typing import Sequence, Tuple, Union

import torch
import torch.nn.functional as F
from torchvortex.core.errors import ConfigurationError

logger: logging.Logger = logging.getLogger(__name__)

_REAL_DTYPE: torch.dtype = torch.float64
_COMPLEX_DTYPE: torch.dtype = torch.complex128


@dataclass(frozen=True)
class GridSpec:
    """
    A uniform square grid centered at the origin.

    Node ``(i, j)`` sits at ``z = (-extent + i*h) + 1j*(-extent + j*h)``, so the first tensor
    axis runs along ``x0`` and the second along ``x1``.

    Args:
        extent: half-width of the square domain.
        n: points per axis, at least 3.
    """

    extent: float
    n: int

    def __post_init__(self) -> None:
        if self.n < 3:
            raise ConfigurationError(f"Grid needs at least 3 points per axis, got n={self.n}")
        if not self.extent > 0 or not math.isfinite(self.extent):
            raise ConfigurationError(f"Grid extent must be positive and finite, got {self.extent}")

    @property
    def h(self) -> float:
        """Node spacing."""
        return 2.0 * self.extent / (self.n - 1)

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.n, self.n)

    def axis(self) -> torch.Tensor:
        idx = torch.arange(self.n, dtype=_REAL_DTYPE)
        return -self.extent + idx * self.h

    def coordinates(self) -> Tuple[torch.Tensor, torch.Tensor]:
        """Returns ``(x0, x1)`` as ``n x n`` float64 tensors."""
        ax = self.axis()
        x0, x1 = torch.meshgrid(ax, ax, indexing="ij")
        return x0, x1

    def z(self) -> torch.Tensor:
        """Complex node coordinates."""
        x0, x1 = self.coordinates()
        return torch.complex(x0, x1)

    def point(self, i: int, j: int) -> complex:
        return complex(-self.extent + i * self.h, -self.extent + j * self.h)

    def index_of(self, z: complex) -> Tuple[int, int]:
        """Nearest node to ``z``, clamped to the grid."""
        i = int(round((z.real + self.extent) / self.h))
        j = int(round((z.imag + self.extent) / self.h))
        return (min(max(i, 0), self.n - 1), min(max(j, 0), self.n - 1))


class NodeClass(IntEnum):
    EXCLUDED = 0
    INTERIOR = 1
    OUTER_BAND = 2
    PUNCTURE_BAND = 3


@dataclass(frozen=True)
class Puncture:
    center: complex
    radius: float


@dataclass(frozen=True)
class DomainMask:
    """
    Classification of grid nodes for the punctured disk ``D(0, R)`` minus ``D(z_k, eps_k)``.

    Use :func:`build_mask` to construct one.

    Args:
        grid: the underlying grid.
        radius: outer radius ``R``.
        punctures: excised disks.
        classes: ``n x n`` int8 tensor of :class:`NodeClass` values.
    """

    grid: GridSpec
    radius: float
    punctures: Tuple[Puncture, ...]
    classes: torch.Tensor = field(repr=False, compare=False)

    @property
    def interior(self) -> torch.Tensor:
        return self.classes == NodeClass.INTERIOR

    @property
    def outer_band(self) -> torch.Tensor:
        return self.classes == NodeClass.OUTER_BAND

    @property
    def puncture_band(self) -> torch.Tensor:
        return self.classes == NodeClass.PUNCTURE_BAND

    @property
    def band(self) -> torch.Tensor:
        return self.outer_band | self.puncture_band

    @property
    def active(self) -> torch.Tensor:
        """All non-excluded nodes."""
        return self.classes != NodeClass.EXCLUDED

    def puncture_band_of(self, k: int) -> torch.Tensor:
        """Puncture-band nodes whose nearest puncture is ``k``."""
        z = self.grid.z()
        dists = torch.stack([(z - p.center).abs() for p in self.punctures])
        return self.puncture_band & (dists.argmin(dim=0) == k)

    def same_layout(self, other: "DomainMask") -> bool:
        return (
            self.grid == other.grid
            and self.radius == other.radius
            and self.punctures == other.punctures
        )

    def count(self, node_class: NodeClass) -> int:
        return int((self.classes == node_class).sum().item())


PunctureLike = Union[Puncture, Tuple[complex, float]]


def _as_puncture(p: PunctureLike) -> Puncture:
    if isinstance(p, Puncture):
        return Puncture(complex(p.center), float(p.radius))
    center, radius = p
    return Puncture(complex(center), float(radius))


def dilate(region: torch.Tensor) -> torch.Tensor:
    """Grows a boolean region by one node in the Chebyshev metric."""
    x = region.to(_REAL_DTYPE)[None, None]
    return F.max_pool2d(x, kernel_size=3, stride=1, padding=1)[0, 0] > 0


def build_mask(
    grid: GridSpec, radius: float, punctures: Sequence[PunctureLike] = ()
) -> DomainMask:
    """
    Classifies every node of ``grid`` for the domain ``D(0, radius)`` minus the puncture disks.

    Interior nodes satisfy ``|z| < radius`` and ``|z - z_k| > eps_k``. Band nodes are the
    non-interior nodes within one node (Chebyshev distance) of an interior node; they are
    outer-band when ``|z| >= radius`` and puncture-band otherwise. Everything else is excluded.

    Args:
        grid: the grid.
        radius: outer radius ``R``, at most ``grid.extent``.
        punctures: ``(center, eps)`` pairs or :class:`Puncture` records.

    Raises:
        ConfigurationError: if ``radius`` exceeds the grid, a puncture radius is below ``2h``,
            a puncture disk leaves ``D(0, R - 2h)``, or two puncture disks overlap.
    """
    h = grid.h
    if not 0 < radius <= grid.extent:
        raise ConfigurationError(
            f"Outer radius R={radius} must lie in (0, extent={grid.extent}]"
        )
    parsed = tuple(_as_puncture(p) for p in punctures)
    for k, p in enumerate(parsed):
        if p.radius < 2.0 * h:
            raise ConfigurationError(
                f"Puncture {k} at {p.center} has eps={p.radius} below the floor 2h={2.0 * h}",
                {"puncture": k},
            )
        if abs(p.center) + p.radius > radius - 2.0 * h:
            raise ConfigurationError(
                f"Puncture {k} at {p.center} with eps={p.radius} is not inside D(0, R-2h) with R={radius}",
                {"puncture": k},
            )
    for j in range(len(parsed)):
        for k in range(j + 1, len(parsed)):
            a, b = parsed[j], parsed[k]
            if abs(a.center - b.center) <= a.radius + b.radius:
                raise ConfigurationError(
                    f"Punctures {j} at {a.center} and {k} at {b.center} overlap",
                    {"puncture": k},
                )

    z = grid.z()
    inside = z.abs() < radius
    for p in parsed:
        inside &= (z - p.center).abs() > p.radius
    band = dilate(inside) & ~inside

    classes = torch.full(grid.shape, int(NodeClass.EXCLUDED), dtype=torch.int8)
    classes[inside] = int(NodeClass.INTERIOR)
    classes[band & (z.abs() >= radius)] = int(NodeClass.OUTER_BAND)
    classes[band & (z.abs() < radius)] = int(NodeClass.PUNCTURE_BAND)

    mask = DomainMask(grid=grid, radius=float(radius), punctures=parsed, classes=classes)
    logger.debug(
        f"Built mask n={grid.n} R={radius} punctures={len(parsed)}: "
        f"{mask.count(NodeClass.INTERIOR)} interior, {int(band.sum().item())} band nodes"
    )
    return mask
