# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Gauge transformations ``(A, psi) -> (A - d chi, e^{i chi} psi)``.

The Higgs field of the reduced system enters only through ``conj(phi) psi1``, ``phi psi2`` and
``psi1 conj(psi2)``, all of which transform like the spinors or not at all, so it is left unchanged.
For the Yang-Mills-Higgs pair ``(A, phi)`` use :func:`gauge_transform_matter`, which rotates
``phi`` as well.
"""

from typing import Callable, Tuple, Union

import torch
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask
from torchvortex.core.stencils import partial_x0, partial_x1
from torchvortex.explicit.solution import SolutionFields

Gauge = Union[Field, Callable[[torch.Tensor], torch.Tensor]]


def gauge_gradient(mask: DomainMask, chi: Gauge) -> Tuple[Field, Field]:
    """
    Centered differences ``(d0 chi, d1 chi)``.

    A callable ``chi`` is evaluated at the four shifted copies of every node, so the gradient covers
    all active nodes. A field ``chi`` loses its outermost ring of support to the stencil.
    """
    if isinstance(chi, Field):
        return partial_x0(chi), partial_x1(chi)
    h = mask.grid.h
    z = mask.grid.z()

    def at(shift: complex) -> torch.Tensor:
        return chi(z + shift).to(torch.float64)

    d0 = (at(h) - at(-h)) / (2.0 * h)
    d1 = (at(1j * h) - at(-1j * h)) / (2.0 * h)
    return Field.from_values(mask, d0), Field.from_values(mask, d1)


def _phase(mask: DomainMask, chi: Gauge) -> Field:
    if isinstance(chi, Field):
        return chi.map(lambda v: torch.exp(1j * v.to(torch.complex128)))
    return Field.from_function(mask, lambda z: torch.exp(1j * chi(z).to(torch.complex128)))


def gauge_transform(s: SolutionFields, chi: Gauge) -> SolutionFields:
    """
    Applies the gauge ``chi`` to a solution: ``A_j -> A_j - d_j chi``, ``psi_k -> e^{i chi} psi_k``.

    Args:
        s: the solution.
        chi: real gauge function, as a field or a vectorised callable of ``z``.
    """
    d0, d1 = gauge_gradient(s.mask, chi)
    phase = _phase(s.mask, chi)
    return s.replace(
        A0=s.A0 - d0,
        A1=s.A1 - d1,
        psi1=s.psi1 * phase,
        psi2=s.psi2 * phase,
    )


def gauge_transform_matter(
    A0: Field, A1: Field, phi: Field, chi: Gauge
) -> Tuple[Field, Field, Field]:
    """``(A, phi) -> (A - d chi, e^{i chi} phi)``, which keeps ``d phi + i A phi`` covariant."""
    d0, d1 = gauge_gradient(A0.mask, chi)
    return A0 - d0, A1 - d1, phi * _phase(A0.mask, chi)
