# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Measurement of the exponential approach ``0 <= M_j - |psi_j|^2 <= N_j e^{-|z|}`` on an outer annulus,
together with the alignment ``psi1 = lambda psi2``, ``lambda >= 0``.
"""

import logging
import math
from dataclasses import dataclass
from enum import auto, Enum
from typing import Optional, Tuple

import numpy as np
import torch
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field

logger: logging.Logger = logging.getLogger(__name__)

_MIN_NODES = 16


class EnvelopeVerdict(Enum):
    CONSISTENT = auto()
    INCONSISTENT = auto()
    DEGENERATE = auto()


@dataclass
class EnvelopeFit:
    """
    Envelope ``M - |psi|^2 ~ N exp(-rate |z|)`` over the annulus.

    ``M`` is the largest ``|psi|^2`` on the annulus. ``log(M - |psi|^2 + floor)`` is then fitted
    against ``-|z|`` by linear least squares on the nodes with ``|z| < outer_fraction R``, so that
    ``rate`` is the slope and ``log N`` the intercept.

    Args:
        M: max of ``|psi|^2`` over the annulus.
        N: fitted amplitude.
        rate: fitted decay rate.
        rms: root mean square residual of the logarithmic fit.
        floor: offset added to ``M - |psi|^2`` before taking the logarithm.
        verdict: per-component verdict.
    """

    M: float
    N: float
    rate: float
    rms: float
    floor: float
    verdict: EnvelopeVerdict


@dataclass
class EnvelopeReport:
    first: EnvelopeFit
    second: EnvelopeFit
    phase_defect: float
    verdict: EnvelopeVerdict

    def as_tuple(self) -> Tuple[float, float, float, float, float, float, EnvelopeVerdict]:
        """``(M1, M2, N1, N2, rate1, rate2, verdict)``."""
        return (
            self.first.M,
            self.second.M,
            self.first.N,
            self.second.N,
            self.first.rate,
            self.second.rate,
            self.verdict,
        )


def _fit(
    r: np.ndarray, y: np.ndarray, fitted: np.ndarray, rel_floor: float, rate_tol: float, log_rtol: float
) -> EnvelopeFit:
    M = float(y.max())
    floor = rel_floor * max(M, 1e-300)
    if float(y.std()) <= 1e-12 * max(1.0, M):
        return EnvelopeFit(M, 0.0, math.nan, 0.0, floor, EnvelopeVerdict.DEGENERATE)
    log_gap = np.log(M - y[fitted] + floor)
    rate, log_N = np.polyfit(-r[fitted], log_gap, 1)
    rate, N = float(rate), math.exp(float(log_N))
    rms = float(np.sqrt(np.mean((log_N - rate * r[fitted] - log_gap) ** 2)))
    ok = 0.0 < M < 1.0 and rate >= 1.0 - rate_tol and rms <= log_rtol
    verdict = EnvelopeVerdict.CONSISTENT if ok else EnvelopeVerdict.INCONSISTENT
    return EnvelopeFit(M, N, rate, rms, floor, verdict)


def fit_decay_envelopes(
    psi1: Field,
    psi2: Field,
    *,
    inner_fraction: float = 0.5,
    outer_fraction: float = 0.75,
    min_radius: float = 4.0,
    rate_tol: float = 0.05,
    log_rtol: float = 0.25,
    phase_tol: float = 1e-6,
    rel_floor: float = 1e-8,
    region: Optional[torch.Tensor] = None,
) -> EnvelopeReport:
    """
    Fits both envelopes on the annulus ``inner_fraction R <= |z| < R`` and checks the phases.

    The limits ``M_j`` are taken over the whole annulus; the logarithmic fit stops at
    ``outer_fraction R``, where the gap ``M_j - |psi_j|^2`` is still well above its value at the
    rim. A component is consistent when ``M`` lies in ``(0, 1)``, the rate is at least
    ``1 - rate_tol`` and the residual of the logarithmic fit is within ``log_rtol``. A constant
    modulus is degenerate.

    Raises:
        GeometryError: if the disk is smaller than ``min_radius`` or the annulus has too few nodes.
    """
    mask = psi1.mask
    if mask.radius < min_radius:
        raise GeometryError(
            f"Envelope fits need a disk of radius at least {min_radius}, got {mask.radius}"
        )
    z = mask.grid.z()
    where = mask.interior & psi1.support & psi2.support & (z.abs() >= inner_fraction * mask.radius)
    if region is not None:
        where &= region
    r_all = z.abs()[where]
    fitted = r_all < outer_fraction * mask.radius
    count = int(fitted.sum().item())
    if count < _MIN_NODES:
        raise GeometryError(f"Only {count} annulus nodes available for the envelope fit")
    r = r_all.numpy()
    v1 = psi1.as_complex().values[where]
    v2 = psi2.as_complex().values[where]
    first = _fit(r, (v1.abs() ** 2).numpy(), fitted.numpy(), rel_floor, rate_tol, log_rtol)
    second = _fit(r, (v2.abs() ** 2).numpy(), fitted.numpy(), rel_floor, rate_tol, log_rtol)

    floor = rel_floor * max(float(v1.abs().max()), float(v2.abs().max()))
    both = (v1.abs() > floor) & (v2.abs() > floor)
    phase_defect = float(torch.angle(v1[both] * torch.conj(v2[both])).abs().max().item()) if bool(both.any()) else 0.0

    verdicts = (first.verdict, second.verdict)
    if EnvelopeVerdict.DEGENERATE in verdicts:
        verdict = EnvelopeVerdict.DEGENERATE
    elif all(v == EnvelopeVerdict.CONSISTENT for v in verdicts) and phase_defect <= phase_tol:
        verdict = EnvelopeVerdict.CONSISTENT
    else:
        verdict = EnvelopeVerdict.INCONSISTENT
    logger.info(
        f"Envelope fit: rates ({first.rate:.4g}, {second.rate:.4g}), "
        f"phase defect {phase_defect:.2e}, {verdict.name.lower()}"
    )
    return EnvelopeReport(first=first, second=second, phase_defect=phase_defect, verdict=verdict)
