# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .decay_fit import EnvelopeFit, EnvelopeReport, EnvelopeVerdict, fit_decay_envelopes
from .energy import bogomolny_split, boundary_term, EnergyReport, flux, FluxReport, ymh_functional
from .reconstruct import GaugeConvention, reconstruct_fields, ReconstructionParams
from .residuals import (
    HiggsResidual,
    MainResidual,
    residual_higgs,
    residual_maineq,
    residual_taubes,
    TaubesResidual,
)
from .synthetic import compact_fields, envelope_pair, flux_tube, unit_flux
from .transform import gauge_gradient, gauge_transform, gauge_transform_matter

__all__ = [
    "EnvelopeFit",
    "EnvelopeVerdict",
    "fit_decay_envelopes",
    "EnvelopeReport",
    "bogomolny_split",
    "boundary_term",
    "EnergyReport",
    "flux",
    "FluxReport",
    "ymh_functional",
    "GaugeConvention",
    "reconstruct_fields",
    "ReconstructionParams",
    "HiggsResidual",
    "MainResidual",
    "residual_higgs",
    "residual_maineq",
    "residual_taubes",
    "TaubesResidual",
    "compact_fields",
    "envelope_pair",
    "flux_tube",
    "unit_flux",
    "gauge_gradient",
    "gauge_transform",
    "gauge_transform_matter",
]
