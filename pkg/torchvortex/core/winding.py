# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
import torch
from scipy import ndimage
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask

logger: logging.Logger = logging.getLogger(__name__)

# rectangles are (i_lo, i_hi, j_lo, j_hi) in node indices, inclusive
_Rect = Tuple[int, int, int, int]

_MAX_EXPANSIONS = 8


@dataclass
class ZeroCount:
    """
    Result of :func:`count_zeros_winding`.

    Args:
        count: total number of zeros with multiplicity.
        locations: ``(position, winding)`` pairs for every plaquette or resolved cluster with
            nonzero winding.
        floor: the modulus floor ``tau`` that was used.
        ambiguous_plaquettes: number of plaquettes that were resolved through enclosing contours.
    """

    count: int
    locations: List[Tuple[complex, int]] = field(default_factory=list)
    floor: float = 0.0
    ambiguous_plaquettes: int = 0


def _increments(w: torch.Tensor) -> Tuple[torch.Tensor, torch.Tensor]:
    # phase change along +x0 edges and +x1 edges, wrapped to (-pi, pi]
    dx = torch.angle(w[1:, :] * torch.conj(w[:-1, :]))
    dy = torch.angle(w[:, 1:] * torch.conj(w[:, :-1]))
    return dx, dy


def _perimeter(rect: _Rect) -> List[Tuple[int, int]]:
    i0, i1, j0, j1 = rect
    nodes = [(i, j0) for i in range(i0, i1)]
    nodes += [(i1, j) for j in range(j0, j1)]
    nodes += [(i, j1) for i in range(i1, i0, -1)]
    nodes += [(i0, j) for j in range(j1, j0, -1)]
    nodes.append((i0, j0))
    return nodes


def _contour_winding(
    w: torch.Tensor, rect: _Rect, tau: float
) -> Optional[int]:
    """Winding of ``w`` around the rectangle, or None if the contour is not well resolved."""
    nodes = _perimeter(rect)
    idx_i = torch.tensor([p[0] for p in nodes])
    idx_j = torch.tensor([p[1] for p in nodes])
    vals = w[idx_i, idx_j]
    if bool((vals.abs() < tau).any()):
        return None
    steps = torch.angle(vals[1:] * torch.conj(vals[:-1]))
    if bool((steps.abs() > math.pi / 2).any()):
        return None
    return int(round(float(steps.sum().item()) / (2.0 * math.pi)))


def _overlaps(a: _Rect, b: _Rect) -> bool:
    return not (a[1] < b[0] or b[1] < a[0] or a[3] < b[2] or b[3] < a[2])


def _merge(rects: List[_Rect]) -> List[_Rect]:
    merged = list(rects)
    changed = True
    while changed:
        changed = False
        out: List[_Rect] = []
        for r in merged:
            for k, o in enumerate(out):
                if _overlaps(r, o):
                    out[k] = (min(r[0], o[0]), max(r[1], o[1]), min(r[2], o[2]), max(r[3], o[3]))
                    changed = True
                    break
            else:
                out.append(r)
        merged = out
    return merged


def count_zeros_winding(
    w: Field,
    region: Optional[DomainMask] = None,
    *,
    rel_floor: float = 1e-8,
    floor: Optional[float] = None,
) -> ZeroCount:
    """
    Counts the zeros of ``w`` inside ``region`` by summing quantized phase windings.

    Every grid plaquette whose corners lie on ``w``'s support and on the region's active nodes
    contributes the winding of ``w`` around its boundary, with per-edge phase differences wrapped to
    ``(-pi, pi]``. Plaquettes with a corner below the floor, or with an edge phase jump above
    ``pi/2``, are ambiguous; each connected group of them is counted once by the winding around an
    enclosing rectangle that is grown until its contour is well resolved.

    Args:
        w: complex field.
        region: mask restricting the count, defaults to ``w.mask``.
        rel_floor: floor relative to ``sup |w|`` when ``floor`` is not given.
        floor: absolute modulus floor ``tau``.

    Raises:
        GeometryError: "zero too close to boundary" when ``|w| < tau`` on the outer band, or when an
            ambiguous group cannot be enclosed inside the region.
    """
    region = region or w.mask
    valid = w.support & region.active
    values = w.as_complex().filled()
    modulus = values.abs()
    sup = float(modulus[valid].max().item()) if bool(valid.any()) else 0.0
    tau = floor if floor is not None else rel_floor * sup
    if sup == 0.0:
        raise GeometryError("zero too close to boundary: w vanishes identically")

    boundary = region.outer_band & w.support
    if bool((modulus[boundary] < tau).any()):
        raise GeometryError(
            f"zero too close to boundary: |w| falls below the floor {tau:.3e} on the outer band"
        )

    corners_ok = valid[:-1, :-1] & valid[1:, :-1] & valid[1:, 1:] & valid[:-1, 1:]
    dx, dy = _increments(values)
    winding = dx[:, :-1] + dy[1:, :] - dx[:, 1:] - dy[:-1, :]
    plaquette = torch.round(winding / (2.0 * math.pi)).to(torch.int64)
    plaquette = torch.where(corners_ok, plaquette, torch.zeros_like(plaquette))

    corner_min = torch.minimum(
        torch.minimum(modulus[:-1, :-1], modulus[1:, :-1]),
        torch.minimum(modulus[1:, 1:], modulus[:-1, 1:]),
    )
    jump = torch.maximum(
        torch.maximum(dx[:, :-1].abs(), dx[:, 1:].abs()),
        torch.maximum(dy[:-1, :].abs(), dy[1:, :].abs()),
    )
    ambiguous = corners_ok & ((corner_min < tau) | (jump > math.pi / 2))

    grid = w.mask.grid
    h = grid.h
    n_ambiguous = int(ambiguous.sum().item())
    consumed = torch.zeros_like(ambiguous)
    locations: List[Tuple[complex, int]] = []
    total = 0

    if n_ambiguous:
        labels, num = ndimage.label(ambiguous.numpy(), structure=np.ones((3, 3)))
        rects: List[_Rect] = []
        for sl in ndimage.find_objects(labels):
            # plaquette slice -> node rectangle grown by one plaquette
            rects.append((sl[0].start - 1, sl[0].stop + 1, sl[1].start - 1, sl[1].stop + 1))
        for rect in _merge(rects):
            resolved = None
            for _ in range(_MAX_EXPANSIONS):
                i0, i1, j0, j1 = rect
                if i0 < 0 or j0 < 0 or i1 >= grid.n or j1 >= grid.n or not bool(
                    corners_ok[i0:i1, j0:j1].all()
                ):
                    raise GeometryError(
                        "zero too close to boundary: an ambiguous region cannot be enclosed"
                    )
                resolved = _contour_winding(values, rect, tau)
                if resolved is not None:
                    break
                rect = (i0 - 1, i1 + 1, j0 - 1, j1 + 1)
            if resolved is None:
                raise GeometryError(
                    f"Could not resolve the winding around nodes {rect} after {_MAX_EXPANSIONS} expansions"
                )
            i0, i1, j0, j1 = rect
            consumed[i0:i1, j0:j1] = True
            if resolved != 0:
                block = modulus[i0 : i1 + 1, j0 : j1 + 1]
                flat = int(torch.argmin(block).item())
                bi, bj = divmod(flat, block.shape[1])
                locations.append((grid.point(i0 + bi, j0 + bj), resolved))
            total += resolved

    regular = plaquette * (~consumed).to(torch.int64)
    total += int(regular.sum().item())
    for i, j in torch.nonzero(regular).tolist():
        center = grid.point(i, j) + complex(0.5 * h, 0.5 * h)
        locations.append((center, int(regular[i, j].item())))

    logger.debug(
        f"Winding count {total} with floor {tau:.3e}; {n_ambiguous} ambiguous plaquettes"
    )
    return ZeroCount(
        count=total, locations=locations, floor=tau, ambiguous_plaquettes=n_ambiguous
    )
