# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from dataclasses import dataclass, field
from typing import Callable, Optional, Union

import torch
from torchvortex.core.errors import ConfigurationError, GeometryError
from torchvortex.core.grid import DomainMask

Number = Union[int, float, complex]


@dataclass(frozen=True)
class Field:
    """
    A real or complex scalar field sampled on the nodes of a :class:`DomainMask`.

    ``values`` is an ``n x n`` tensor (float64 or complex128). ``support`` marks the nodes that
    carry a value; everything off support is stored as NaN. The support is a subset of the
    grid and usually of ``mask.active``, but stencil outputs shrink it further.

    Prefer :meth:`from_values` and :meth:`from_function` over the raw constructor.
    """

    mask: DomainMask
    values: torch.Tensor = field(repr=False)
    support: torch.Tensor = field(repr=False)

    @classmethod
    def from_values(
        cls,
        mask: DomainMask,
        values: torch.Tensor,
        support: Optional[torch.Tensor] = None,
    ) -> "Field":
        """
        Wraps ``values`` as a field.

        Args:
            mask: the domain mask.
            values: ``n x n`` tensor; promoted to float64 or complex128.
            support: boolean ``n x n`` tensor, defaults to ``mask.active``.

        Raises:
            ConfigurationError: on a shape mismatch or non-finite values on support.
        """
        if tuple(values.shape) != mask.grid.shape:
            raise ConfigurationError(
                f"Field values have shape {tuple(values.shape)}, expected {mask.grid.shape}"
            )
        if values.is_complex():
            values = values.to(torch.complex128)
        else:
            values = values.to(torch.float64)
        if support is None:
            support = mask.active
        support = support.to(torch.bool)
        if not bool(torch.isfinite(values[support]).all()):
            raise ConfigurationError("Field values must be finite on the support")
        nan = torch.tensor(float("nan"), dtype=torch.float64)
        if values.is_complex():
            nan = torch.complex(nan, nan)
        values = torch.where(support, values, nan)
        return cls(mask=mask, values=values, support=support.clone())

    @classmethod
    def from_function(
        cls,
        mask: DomainMask,
        fn: Callable[[torch.Tensor], torch.Tensor],
        support: Optional[torch.Tensor] = None,
    ) -> "Field":
        """Samples ``fn(z)`` at every node; ``z`` is the complex128 coordinate tensor."""
        z = mask.grid.z()
        out = fn(z)
        if isinstance(out, torch.Tensor):
            values = out.expand(z.shape).clone() if out.dim() == 0 else out
        elif isinstance(out, complex):
            values = torch.full(z.shape, out, dtype=torch.complex128)
        else:
            values = torch.full(z.shape, float(out), dtype=torch.float64)
        if support is None:
            support = mask.active
        support = support & torch.isfinite(values)
        return cls.from_values(mask, torch.where(support, values, torch.zeros_like(values)), support)

    @classmethod
    def constant(
        cls, mask: DomainMask, value: Number, support: Optional[torch.Tensor] = None
    ) -> "Field":
        if isinstance(value, complex):
            values = torch.full(mask.grid.shape, value, dtype=torch.complex128)
        else:
            values = torch.full(mask.grid.shape, float(value), dtype=torch.float64)
        return cls.from_values(mask, values, support)

    @property
    def is_complex(self) -> bool:
        return self.values.is_complex()

    @property
    def grid_h(self) -> float:
        return self.mask.grid.h

    def filled(self, fill: Number = 0.0) -> torch.Tensor:
        """Values with the off-support NaNs replaced by ``fill``."""
        return torch.where(self.support, self.values, torch.full_like(self.values, fill))

    def with_values(
        self, values: torch.Tensor, support: Optional[torch.Tensor] = None
    ) -> "Field":
        return Field.from_values(
            self.mask, values, self.support if support is None else support
        )

    def restrict(self, region: torch.Tensor) -> "Field":
        return self.with_values(self.filled(), self.support & region)

    def as_complex(self) -> "Field":
        if self.is_complex:
            return self
        return self.with_values(self.filled().to(torch.complex128))

    def map(self, fn: Callable[[torch.Tensor], torch.Tensor]) -> "Field":
        """Applies ``fn`` nodewise; nodes where the result is not finite leave the support."""
        out = fn(self.filled())
        support = self.support & torch.isfinite(out)
        return Field.from_values(
            self.mask, torch.where(support, out, torch.zeros_like(out)), support
        )

    def conj(self) -> "Field":
        return self.map(torch.conj) if self.is_complex else self

    def abs(self) -> "Field":
        return self.map(torch.abs)

    def real(self) -> "Field":
        return self.map(torch.real) if self.is_complex else self

    def imag(self) -> "Field":
        if self.is_complex:
            return self.map(torch.imag)
        return self.with_values(torch.zeros_like(self.filled()))

    def exp(self) -> "Field":
        return self.map(torch.exp)

    def sup(self, region: Optional[torch.Tensor] = None) -> float:
        """Sup norm of ``|values|`` over the support (intersected with ``region``); 0 when empty."""
        where = self.support if region is None else self.support & region
        if not bool(where.any()):
            return 0.0
        return float(self.values[where].abs().max().item())

    def _combine(
        self, other: Union["Field", Number], op: Callable[[torch.Tensor, torch.Tensor], torch.Tensor]
    ) -> "Field":
        if isinstance(other, Field):
            if not self.mask.same_layout(other.mask):
                raise GeometryError("Fields live on different masks")
            support = self.support & other.support
            out = op(self.filled(), other.filled())
        else:
            support = self.support
            out = op(self.filled(), other)
        support = support & torch.isfinite(out)
        return Field.from_values(
            self.mask, torch.where(support, out, torch.zeros_like(out)), support
        )

    def __add__(self, other: Union["Field", Number]) -> "Field":
        return self._combine(other, torch.add)

    def __radd__(self, other: Number) -> "Field":
        return self._combine(other, torch.add)

    def __sub__(self, other: Union["Field", Number]) -> "Field":
        return self._combine(other, torch.sub)

    def __rsub__(self, other: Number) -> "Field":
        return self._combine(other, lambda a, b: b - a)

    def __mul__(self, other: Union["Field", Number]) -> "Field":
        return self._combine(other, torch.mul)

    def __rmul__(self, other: Number) -> "Field":
        return self._combine(other, torch.mul)

    def __truediv__(self, other: Union["Field", Number]) -> "Field":
        return self._combine(other, torch.div)

    def __neg__(self) -> "Field":
        return self.map(torch.neg)


RealField = Field
ComplexField = Field
