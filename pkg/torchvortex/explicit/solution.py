# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import dataclasses
from dataclasses import dataclass
from typing import Any, Optional

from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask


@dataclass(frozen=True)
class SolutionFields:
    """
    A candidate solution ``(A0, A1, psi1, psi2)`` of the vortex equations, optionally with a Higgs
    field.

    ``A0`` and ``A1`` hold the real functions of the connection ``A = i A0 dx0 + i A1 dx1``; the factor
    ``i`` is applied by consumers. They are complex only when a family's coefficients force it (a
    complex ``c2``, or the literal reading of the with-Higgs connection), which
    :attr:`connection_real` reports.

    Args:
        A0: first connection component.
        A1: second connection component.
        psi1: first spinor component.
        psi2: second spinor component.
        higgs: optional Higgs field.

    Raises:
        GeometryError: if the fields live on different masks.
    """

    A0: Field
    A1: Field
    psi1: Field
    psi2: Field
    higgs: Optional[Field] = None

    def __post_init__(self) -> None:
        fields = [self.A0, self.A1, self.psi1, self.psi2]
        if self.higgs is not None:
            fields.append(self.higgs)
        for f in fields[1:]:
            if not fields[0].mask.same_layout(f.mask):
                raise GeometryError("All solution fields must share one mask")

    @property
    def mask(self) -> DomainMask:
        return self.A0.mask

    @property
    def connection_real(self) -> bool:
        """Whether both connection components are real valued."""
        return all(
            not a.is_complex or a.imag().sup() == 0.0 for a in (self.A0, self.A1)
        )

    def replace(self, **changes: Any) -> "SolutionFields":
        return dataclasses.replace(self, **changes)
