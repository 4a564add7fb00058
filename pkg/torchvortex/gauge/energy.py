# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
The Yang-Mills-Higgs energy ``(1/2) iint (|F|^2 / 4 + |d_A phi|^2 + (|phi|^2 - 1)^2)`` with
``d_A phi = d phi + i A phi``, its Bogomolny rearrangement and the magnetic flux.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, NamedTuple, Tuple

from torchvortex.core.fields import Field
from torchvortex.core.quadrature import area_integral
from torchvortex.core.stencils import curl, partial_x0, partial_x1

logger: logging.Logger = logging.getLogger(__name__)


class FluxReport(NamedTuple):
    flux: float
    over2pi: float
    integer_distance: float


@dataclass
class EnergyReport:
    """
    Args:
        ymh_direct: the energy from its defining density.
        ymh_bogomolny: the same energy from the rearranged density.
        parts: integrals (with the factor 1/2) of the three squares, the exact form and the flux term.
        flux: ``iint (d0 A1 - d1 A0)``.
        flux_over_2pi: ``flux / 2 pi``.
        defect: ``|ymh_direct - ymh_bogomolny|``.
        boundary_term: the exact form computed as the divergence of its potential; zero for fields
            that are vacuum near the boundary.
    """

    ymh_direct: float
    ymh_bogomolny: float
    parts: Dict[str, float] = field(default_factory=dict)
    flux: float = 0.0
    flux_over_2pi: float = 0.0
    defect: float = 0.0
    boundary_term: float = 0.0


def _real(f: Field) -> Field:
    if f.is_complex and f.imag().sup() != 0.0:
        logger.warning("Connection has an imaginary part; it is dropped for the energy")
    return f.real()


def _covariant(A0: Field, A1: Field, phi: Field) -> Tuple[Field, Field]:
    phi = phi.as_complex()
    d0 = partial_x0(phi) + 1j * A0 * phi
    d1 = partial_x1(phi) + 1j * A1 * phi
    return d0, d1


def _integral(f: Field) -> float:
    return float(area_integral(f))


def ymh_functional(A0: Field, A1: Field, phi: Field) -> float:
    """Yang-Mills-Higgs energy of ``(A, phi)`` over the mask's interior."""
    A0, A1 = _real(A0), _real(A1)
    F = curl(A0, A1)
    d0, d1 = _covariant(A0, A1, phi)
    mod2 = phi.abs() * phi.abs()
    density = 0.25 * F * F + d0.abs() * d0.abs() + d1.abs() * d1.abs() + (mod2 - 1.0) * (mod2 - 1.0)
    return 0.5 * _integral(density)


def flux(A0: Field, A1: Field) -> FluxReport:
    """Magnetic flux ``iint (d0 A1 - d1 A0)`` and its distance to the nearest multiple of ``2 pi``."""
    total = _integral(curl(_real(A0), _real(A1)))
    over = total / (2.0 * math.pi)
    return FluxReport(flux=total, over2pi=over, integer_distance=abs(over - round(over)))


def boundary_term(A0: Field, A1: Field, phi: Field) -> float:
    """
    ``(1/2) iint div V`` with ``V = (-A1 |phi|^2 - 2 phi0 d1 phi1, A0 |phi|^2 + 2 phi0 d0 phi1)``,
    whose divergence is the exact-form part of the Bogomolny density.
    """
    A0, A1 = _real(A0), _real(A1)
    phi = phi.as_complex()
    p0, p1 = phi.real(), phi.imag()
    mod2 = phi.abs() * phi.abs()
    v0 = -1.0 * A1 * mod2 - 2.0 * p0 * partial_x1(p1)
    v1 = A0 * mod2 + 2.0 * p0 * partial_x0(p1)
    return 0.5 * _integral(partial_x0(v0) + partial_x1(v1))


def bogomolny_split(A0: Field, A1: Field, phi: Field) -> EnergyReport:
    """
    Rearranges the energy density as

    ``(a + d)^2 + (b - c)^2 + (F/2 + |phi|^2 - 1)^2 + (-F |phi|^2 - 2ad + 2bc) + F``

    where ``a + ib = d_A0 phi`` and ``c + id = d_A1 phi``. The identity is algebraic, so the defect
    against :func:`ymh_functional` is rounding only.
    """
    A0, A1 = _real(A0), _real(A1)
    F = curl(A0, A1)
    d0, d1 = _covariant(A0, A1, phi)
    a, b = d0.real(), d0.imag()
    c, d = d1.real(), d1.imag()
    mod2 = phi.abs() * phi.abs()
    common = F.support & d0.support & d1.support & mod2.support
    F, mod2 = F.restrict(common), mod2.restrict(common)
    a, b, c, d = (x.restrict(common) for x in (a, b, c, d))
    vortex = 0.5 * F + mod2 - 1.0
    parts = {
        "a_plus_d_sq": 0.5 * _integral((a + d) * (a + d)),
        "b_minus_c_sq": 0.5 * _integral((b - c) * (b - c)),
        "vortex_sq": 0.5 * _integral(vortex * vortex),
        "exact_form": 0.5 * _integral(-1.0 * F * mod2 - 2.0 * a * d + 2.0 * b * c),
        "flux_term": 0.5 * _integral(F),
    }
    bogomolny = sum(parts.values())
    direct = ymh_functional(A0, A1, phi)
    fl = flux(A0, A1)
    report = EnergyReport(
        ymh_direct=direct,
        ymh_bogomolny=bogomolny,
        parts=parts,
        flux=fl.flux,
        flux_over_2pi=fl.over2pi,
        defect=abs(direct - bogomolny),
        boundary_term=boundary_term(A0, A1, phi),
    )
    logger.info(
        f"YMH {direct:.8g} (Bogomolny {bogomolny:.8g}), flux/2pi {fl.over2pi:.6f}"
    )
    return report
