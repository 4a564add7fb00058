# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Similarity-principle factorizations of Vekua-type solutions.

A solution of ``dzbar w = A w + B conj(w) + f`` factors as ``w = exp(phi) s`` with
``phi = T(A + B conj(w) / w + f / w)`` and ``s`` holomorphic. The discrete factor is only
holomorphic up to the truncation error of the stencils and of the area transform, so every
factorization reports its Cauchy-Riemann residual next to the measured Vekua residual.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple, Union

import torch
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask
from torchvortex.core.stencils import wirtinger
from torchvortex.vekua.cauchy import t_operator_grid

logger: logging.Logger = logging.getLogger(__name__)

Coefficient = Union[Field, complex, float]


@dataclass(frozen=True)
class VekuaCoeffs:
    """
    Coefficients of ``dzbar w = A w + B conj(w) + f``.

    Scalars are broadcast to constant fields on the solution's mask. ``f`` is optional.
    """

    A: Coefficient = 0.0
    B: Coefficient = 0.0
    f: Optional[Coefficient] = None


@dataclass
class Factorization:
    """
    Result of a similarity factorization ``w = exp(phi) * holomorphic``.

    Args:
        phi: ``T(A + B conj(w)/w + f/w)`` on the mask.
        holomorphic: ``w * exp(-phi)``.
        cr_residual: sup over interior nodes of ``|dzbar holomorphic|``.
        vekua_residual: sup over interior nodes of ``|dzbar w - A w - B conj(w) - f|``.
        constant: ``cr_residual / (vekua_residual + h)``, the observed amplification of the
            discretisation error.
        inhomogeneity_norm: ``L^q`` norm of ``f / w`` over the interior, 0 without ``f``.
        floor_nodes: number of nodes where ``|w|`` fell below the floor and ``A + B`` was used.
        degenerate: ``w`` vanishes identically.
        min_exp_modulus: smallest ``|exp(phi)|`` over the support.
    """

    phi: Field
    holomorphic: Field
    cr_residual: float
    vekua_residual: float
    constant: float
    inhomogeneity_norm: float
    floor_nodes: int
    degenerate: bool
    min_exp_modulus: float


def _coefficient(mask: DomainMask, c: Optional[Coefficient]) -> Field:
    if c is None:
        return Field.constant(mask, 0.0)
    if isinstance(c, Field):
        if not c.mask.same_layout(mask):
            raise GeometryError("Vekua coefficient lives on a different mask")
        return c.as_complex()
    return Field.constant(mask, complex(c))


def similarity_factor(
    w: Field,
    coeffs: VekuaCoeffs,
    *,
    rel_floor: float = 1e-8,
    q: float = 3.0,
) -> Factorization:
    """
    Factors ``w = exp(phi) * s`` with ``s`` holomorphic.

    Where ``|w|`` is below ``rel_floor * sup|w|`` the quotient ``conj(w)/w`` is replaced by 1.
    A vanishing ``w`` is reported as degenerate with a zero holomorphic factor.

    Args:
        w: complex field on the mask.
        coeffs: the equation's coefficients.
        rel_floor: relative modulus floor.
        q: exponent of the norm reported for ``f / w``; values above 2 match the integrability
            the factorization needs.
    """
    mask = w.mask
    w = w.as_complex()
    a = _coefficient(mask, coeffs.A)
    b = _coefficient(mask, coeffs.B)
    f = _coefficient(mask, coeffs.f)
    h = w.grid_h

    sup_w = w.sup(mask.interior)
    degenerate = sup_w == 0.0
    floor = rel_floor * sup_w
    modulus = w.abs().filled()
    regular = w.support & (modulus > floor)
    floor_nodes = int((w.support & mask.active & ~regular).sum().item())
    if floor_nodes > 0:
        logger.info(f"{floor_nodes} nodes below the modulus floor {floor:.3e}; using A + B there")

    wv = w.filled(1.0)
    safe = torch.where(regular, wv, torch.ones_like(wv))
    quotient = torch.where(regular, torch.conj(safe) / safe, torch.ones_like(wv))
    f_over_w = torch.where(regular, f.filled() / safe, torch.zeros_like(wv))
    integrand = a.filled() + b.filled() * quotient + f_over_w
    support = a.support & b.support & f.support & mask.active
    phi = t_operator_grid(Field.from_values(mask, integrand, support))

    holomorphic = w * phi.map(lambda v: torch.exp(-v))
    cr = wirtinger(holomorphic, "dzbar").sup(mask.interior)
    residual = wirtinger(w, "dzbar") - a * w - b * w.conj() - f
    vekua_residual = residual.sup(mask.interior)

    where = mask.interior & regular
    inhomogeneity = 0.0
    if coeffs.f is not None and bool(where.any()):
        inhomogeneity = float(
            ((f_over_w[where].abs() ** q).sum() * h**2).item() ** (1.0 / q)
        )
    exp_mod = phi.real().map(torch.exp)
    min_exp = float(exp_mod.values[exp_mod.support].min().item()) if bool(exp_mod.support.any()) else math.nan

    logger.debug(
        f"Similarity factor: CR residual {cr:.3e}, Vekua residual {vekua_residual:.3e}"
    )
    return Factorization(
        phi=phi,
        holomorphic=holomorphic,
        cr_residual=cr,
        vekua_residual=vekua_residual,
        constant=cr / (vekua_residual + h),
        inhomogeneity_norm=inhomogeneity,
        floor_nodes=floor_nodes,
        degenerate=degenerate,
        min_exp_modulus=min_exp,
    )


def system_factor(w1: Field, w2: Field, alpha: Coefficient) -> Tuple[Factorization, Factorization]:
    """
    Factors a pair solving ``dz w1 + i alpha w1 = 0`` and ``dzbar w2 + i conj(alpha) w2 = 0``.

    ``conj(w1)`` solves ``dzbar u = i conj(alpha) u`` and ``w2`` solves
    ``dzbar u = -i conj(alpha) u``, so both reduce to the scalar case with ``B = 0``.

    Returns:
        factorizations of ``conj(w1)`` and of ``w2``.
    """
    mask = w1.mask
    if not mask.same_layout(w2.mask):
        raise GeometryError("System components live on different masks")
    alpha_bar = _coefficient(mask, alpha).conj()
    first = similarity_factor(w1.as_complex().conj(), VekuaCoeffs(A=1j * alpha_bar))
    second = similarity_factor(w2, VekuaCoeffs(A=-1j * alpha_bar))
    return first, second


def t_operator_defect(mask: DomainMask) -> float:
    """
    Sup over interior nodes of ``|dzbar T(1) - 1|``.

    This is the discretisation floor of any factorization on ``mask``.
    """
    t_one = t_operator_grid(Field.constant(mask, 1.0 + 0j))
    return (wirtinger(t_one, "dzbar") - 1.0).sup(mask.interior)
