# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .divisor import VortexDivisor
from .errors import (
    ConfigurationError,
    GeometryError,
    ParameterError,
    SolverError,
    VerificationError,
    VortexError,
)
from .fields import ComplexField, Field, RealField
from .grid import build_mask, dilate, DomainMask, GridSpec, NodeClass, Puncture
from .quadrature import area_integral, contour_normal_flux, interpolate
from .stencils import curl, laplacian, partial_x0, partial_x1, stencil_support, wirtinger
from .winding import count_zeros_winding, ZeroCount

__all__ = [
    "VortexDivisor",
    "ConfigurationError",
    "GeometryError",
    "ParameterError",
    "SolverError",
    "VerificationError",
    "VortexError",
    "ComplexField",
    "Field",
    "RealField",
    "build_mask",
    "dilate",
    "DomainMask",
    "GridSpec",
    "NodeClass",
    "Puncture",
    "area_integral",
    "contour_normal_flux",
    "interpolate",
    "curl",
    "laplacian",
    "partial_x0",
    "partial_x1",
    "stencil_support",
    "wirtinger",
    "count_zeros_winding",
    "ZeroCount",
]
