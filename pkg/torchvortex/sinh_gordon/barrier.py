# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Constant-shift barriers for the sinh-Gordon Dirichlet problem.

With ``f(z, v) = -2M sinh(v + G + M') - r`` and ``h`` harmonic, ``h + C`` is a super-solution when
``f(., h + C) >= 0`` everywhere and a sub-solution when ``f(., h + C) <= 0`` everywhere. Because
``f`` is strictly decreasing in ``v`` the first set of constants is a half line ``(-inf, C_plus]``
and the second is ``[C_minus, inf)``. An ordered pair needs ``C_minus <= C_plus``; this module
measures whether one exists rather than assuming it.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Callable, Dict, Optional, Tuple

import numpy as np
import torch
from scipy.optimize import brentq
from torchvortex.core.errors import GeometryError, VerificationError
from torchvortex.core.fields import Field
from torchvortex.sinh_gordon.problem import SinhGordonProblem

logger: logging.Logger = logging.getLogger(__name__)

BRACKET: Tuple[float, float] = (-50.0, 50.0)
_ORDER_TOL = 1e-10


def f_value(
    v: np.ndarray, G: np.ndarray, r: np.ndarray, M: float, Mprime: float
) -> np.ndarray:
    """Right-hand side ``f(z, v) = -2M sinh(v + G + M') - r``."""
    return -2.0 * M * np.sinh(v + G + Mprime) - r


@dataclass
class BarrierReport:
    """
    Args:
        b: max of ``r`` over the interior.
        ell: min of ``r``.
        bprime: max of ``h + G``.
        ellprime: min of ``h + G``.
        sigma: ``exp(bprime + Mprime)``.
        eta: ``exp(ellprime + Mprime)``.
        t2_unscaled: ``(-b + sqrt(b^2 + 4M)) / (2M)``, the super-solution root without the factor ``sigma``.
        t2_sigma: larger root of ``-M sigma t^2 - b t + M / sigma``, keeping the factor ``sigma``.
        t2_prime: ``(-ell + sqrt(ell^2 + 4M^2)) / (2M eta)``, the sub-solution root.
        C_minus_clamped: ``log(max(1, t2_prime))``, which is never negative.
        C_plus: largest ``C`` with ``f(., h + C) >= 0``, None when none exists in the bracket.
        C_minus: smallest ``C`` with ``f(., h + C) <= 0``, None when none exists.
        C_plus_bracket_limited: the condition still held at the bracket's upper end.
        C_minus_bracket_limited: the condition still held at the bracket's lower end.
        ordered_pair: both constants exist and ``C_minus <= C_plus``.
        certificate_plus: ``sign(f(., h + C_plus))`` on the interior.
        certificate_minus: ``sign(f(., h + C_minus))`` on the interior.
    """

    b: float
    ell: float
    bprime: float
    ellprime: float
    sigma: float
    eta: float
    t2_unscaled: Optional[float]
    t2_sigma: Optional[float]
    t2_prime: Optional[float]
    C_minus_clamped: Optional[float]
    C_plus: Optional[float]
    C_minus: Optional[float]
    C_plus_bracket_limited: bool
    C_minus_bracket_limited: bool
    ordered_pair: bool
    certificate_plus: Optional[Field] = None
    certificate_minus: Optional[Field] = None

    def to_dict(self) -> Dict[str, Any]:
        """Scalar entries, for reports."""
        out: Dict[str, Any] = {
            k: v
            for k, v in self.__dict__.items()
            if not isinstance(v, Field) and k not in ("certificate_plus", "certificate_minus")
        }
        for name, cert in (("plus", self.certificate_plus), ("minus", self.certificate_minus)):
            if cert is not None:
                where = cert.support
                out[f"certificate_{name}_negative_nodes"] = int((cert.values[where] < 0).sum().item())
                out[f"certificate_{name}_positive_nodes"] = int((cert.values[where] > 0).sum().item())
        return out


def _root_or_none(value: float) -> Optional[float]:
    return value if math.isfinite(value) else None


def _edge_constant(
    phi: Callable[[float], float], want_low: bool
) -> Tuple[Optional[float], bool]:
    """
    Endpoint of the half line where ``phi`` (decreasing in C) has the wanted sign.

    ``want_low``: search the largest C with ``phi(C) >= 0``; otherwise the smallest C with
    ``phi(C) <= 0``.
    """
    lo, hi = BRACKET
    f_lo, f_hi = phi(lo), phi(hi)
    if want_low:
        if f_lo < 0:
            return None, False
        if f_hi >= 0:
            return hi, True
    else:
        if f_hi > 0:
            return None, False
        if f_lo <= 0:
            return lo, True
    return float(brentq(phi, lo, hi, xtol=1e-13, rtol=4 * np.finfo(float).eps)), False


def _check_monotone(h: np.ndarray, G: np.ndarray, r: np.ndarray, M: float, Mprime: float) -> None:
    if M == 0.0 or h.size == 0:
        return
    low = f_value(h - 1.0, G, r, M, Mprime)
    high = f_value(h + 1.0, G, r, M, Mprime)
    if not bool(np.all(low > high)):
        raise VerificationError("f(z, h + C) is not strictly decreasing in C on the sampled nodes")


def barrier_search(problem: SinhGordonProblem, h: Field, G: Field, r: Field) -> BarrierReport:
    """
    Computes the barrier ledger of ``problem`` for the harmonic extension ``h``.

    Both scalar searches scan every interior node; the outcome, including the absence of either
    constant, is reported and never raised.

    Raises:
        GeometryError: if the fields do not cover the interior.
    """
    mask = problem.mask
    interior = mask.interior
    for name, fld in (("h", h), ("G", G), ("r", r)):
        if not bool((fld.support | ~interior).all()):
            raise GeometryError(f"{name} does not cover the interior nodes")
    M, Mprime = problem.M, problem.Mprime
    hv = h.filled()[interior].numpy()
    Gv = G.filled()[interior].numpy()
    rv = r.filled()[interior].numpy()
    _check_monotone(hv, Gv, rv, M, Mprime)

    b, ell = float(rv.max()), float(rv.min())
    hg = hv + Gv
    bprime, ellprime = float(hg.max()), float(hg.min())
    sigma = math.exp(bprime + Mprime)
    eta = math.exp(ellprime + Mprime)

    t2_unscaled = t2_sigma = t2_prime = c_clamped = None
    if M > 0:
        t2_unscaled = (-b + math.sqrt(b * b + 4.0 * M)) / (2.0 * M)
        t2_sigma = _root_or_none((-b + math.sqrt(b * b + 4.0 * M * M)) / (2.0 * M * sigma))
        t2_prime = _root_or_none((-ell + math.sqrt(ell * ell + 4.0 * M * M)) / (2.0 * M * eta))
        c_clamped = math.log(max(1.0, t2_prime)) if t2_prime is not None else None
        logger.info(
            f"Barrier roots: t2={t2_unscaled:.6g}, sigma-corrected {t2_sigma}, sub-solution {t2_prime}"
        )

    def phi_plus(c: float) -> float:
        return float(f_value(hv + c, Gv, rv, M, Mprime).min())

    def phi_minus(c: float) -> float:
        return float(f_value(hv + c, Gv, rv, M, Mprime).max())

    c_plus, plus_limited = _edge_constant(phi_plus, want_low=True)
    c_minus, minus_limited = _edge_constant(phi_minus, want_low=False)
    for name, limited in (("C_plus", plus_limited), ("C_minus", minus_limited)):
        if limited:
            logger.warning(f"{name} is limited by the search bracket {BRACKET}")

    ordered = c_plus is not None and c_minus is not None and c_minus <= c_plus + _ORDER_TOL
    logger.info(f"Barrier constants: C_plus={c_plus}, C_minus={c_minus}, ordered pair: {ordered}")

    def certificate(c: Optional[float]) -> Optional[Field]:
        if c is None:
            return None
        signs = torch.zeros(mask.grid.shape, dtype=torch.float64)
        signs[interior] = torch.from_numpy(np.sign(f_value(hv + c, Gv, rv, M, Mprime)))
        return Field.from_values(mask, signs, interior)

    return BarrierReport(
        b=b,
        ell=ell,
        bprime=bprime,
        ellprime=ellprime,
        sigma=sigma,
        eta=eta,
        t2_unscaled=t2_unscaled,
        t2_sigma=t2_sigma,
        t2_prime=t2_prime,
        C_minus_clamped=c_clamped,
        C_plus=c_plus,
        C_minus=c_minus,
        C_plus_bracket_limited=plus_limited,
        C_minus_bracket_limited=minus_limited,
        ordered_pair=ordered,
        certificate_plus=certificate(c_plus),
        certificate_minus=certificate(c_minus),
    )
