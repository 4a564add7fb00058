# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from typing import Dict, List, Optional, Tuple

import numpy as np
from scipy import ndimage
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.grid import DomainMask
from torchvortex.core.winding import count_zeros_winding
from torchvortex.explicit.solution import SolutionFields

logger: logging.Logger = logging.getLogger(__name__)


def divisor_of(
    s: SolutionFields,
    region: Optional[DomainMask] = None,
    *,
    rel_floor: float = 1e-8,
) -> VortexDivisor:
    """
    Recovers the divisor of a solution from the zeros of ``psi2``.

    Windings found by :func:`~torchvortex.core.winding.count_zeros_winding` are binned to plaquettes;
    8-connected groups of plaquettes form one vortex whose multiplicity is the group's total winding
    and whose location is the winding-weighted mean of its locations.

    Raises:
        GeometryError: if ``|psi2|`` falls below the floor on the outer band.
    """
    zeros = count_zeros_winding(s.psi2, region, rel_floor=rel_floor)
    grid = s.mask.grid
    h = grid.h
    n = grid.n - 1
    windings = np.zeros((n, n), dtype=np.int64)
    members: Dict[Tuple[int, int], List[Tuple[complex, int]]] = {}
    for location, winding in zeros.locations:
        i = min(max(int(np.floor((location.real + grid.extent) / h + 1e-9)), 0), n - 1)
        j = min(max(int(np.floor((location.imag + grid.extent) / h + 1e-9)), 0), n - 1)
        windings[i, j] += winding
        members.setdefault((i, j), []).append((location, winding))

    labels, num = ndimage.label(windings != 0, structure=np.ones((3, 3)))
    entries: List[Tuple[complex, int]] = []
    for k in range(1, num + 1):
        cells = list(zip(*np.nonzero(labels == k)))
        multiplicity = int(sum(windings[c] for c in cells))
        if multiplicity <= 0:
            logger.warning(
                f"Skipping a zero cluster near plaquette {cells[0]} with net winding {multiplicity}"
            )
            continue
        weight = 0.0
        center = 0j
        for c in cells:
            for location, winding in members.get((int(c[0]), int(c[1])), []):
                weight += abs(winding)
                center += abs(winding) * location
        entries.append((center / weight, multiplicity))
    divisor = VortexDivisor.from_pairs(entries)
    logger.info(f"Recovered divisor of degree {divisor.degree} with {len(divisor)} points")
    return divisor
