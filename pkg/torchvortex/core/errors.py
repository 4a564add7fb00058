# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from typing import Any, Dict, Optional

import torch


class VortexError(Exception):
    """Base class for every error raised by torchvortex.

    Args:
        message: human readable description.
        details: optional structured context that ends up in reports.
    """

    def __init__(self, message: str, details: Optional[Dict[str, Any]] = None) -> None:
        super().__init__(message)
        self.details: Dict[str, Any] = dict(details or {})


class ConfigurationError(VortexError, ValueError):
    """Invalid geometry or configuration input (bad mask, bad config key, bad divisor)."""


class ParameterError(VortexError, ValueError):
    """Invalid physical parameters (c1 = 0, broken family constraint, missing Higgs field)."""


class GeometryError(VortexError, ValueError):
    """An operation needs field values where the support does not provide them."""


class SolverError(VortexError, RuntimeError):
    """A linear or nonlinear solve failed.

    Args:
        message: human readable description.
        residual: residual of the last iterate, if one exists.
        iterate: the last iterate, kept so callers can dump it.
        details: optional structured context.
    """

    def __init__(
        self,
        message: str,
        *,
        residual: Optional[float] = None,
        iterate: Optional[torch.Tensor] = None,
        details: Optional[Dict[str, Any]] = None,
    ) -> None:
        super().__init__(message, details)
        self.residual = residual
        self.iterate = iterate


class VerificationError(VortexError):
    """Verified residuals exceed the configured thresholds."""
