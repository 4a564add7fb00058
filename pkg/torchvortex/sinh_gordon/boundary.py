# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Dirichlet data and the sparse five-point Laplacian of a masked domain.

Unknowns are the interior nodes in row-major order. Band nodes carry Dirichlet values and enter
through the coupling block, so boundary rows never appear in the system.
"""

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
import torch
from torchvortex.core.errors import GeometryError, SolverError
from torchvortex.core.fields import Field
from torchvortex.core.grid import DomainMask
from typing_extensions import Literal

logger: logging.Logger = logging.getLogger(__name__)

LinearMethod = Literal["direct", "cg"]


@dataclass
class BoundaryData:
    """
    Dirichlet values on the band nodes of a mask.

    Args:
        values: real field supported on ``mask.band``.
    """

    values: Field

    @property
    def mask(self) -> DomainMask:
        return self.values.mask

    def band_vector(self, system: "DirichletLaplacian") -> np.ndarray:
        return self.values.filled().reshape(-1).numpy()[system.band_index]


def boundary_data(mask: DomainMask, G: Field) -> BoundaryData:
    """
    ``g = 0`` on the outer band and ``g = -G`` on every puncture band (the full sum over vortices).

    Raises:
        GeometryError: if ``G`` is missing on a puncture-band node.
    """
    inner = mask.puncture_band
    if not bool((G.support | ~inner).all()):
        raise GeometryError("G is not defined on every puncture-band node")
    values = torch.where(inner, -G.filled(), torch.zeros(mask.grid.shape, dtype=torch.float64))
    return BoundaryData(Field.from_values(mask, values, mask.band))


def _lap1d(n: int) -> sp.spmatrix:
    v = np.ones(n)
    return sp.spdiags([v, -2 * v, v], [-1, 0, 1], n, n)


@dataclass
class DirichletLaplacian:
    """
    Blocks of the five-point Laplacian over a mask.

    Args:
        mask: the domain mask.
        interior_index: flat (row-major) indices of interior nodes.
        band_index: flat indices of band nodes.
        L_II: interior-interior block, negative definite.
        L_IB: interior-band coupling block.
    """

    mask: DomainMask
    interior_index: np.ndarray
    band_index: np.ndarray
    L_II: sp.csr_matrix
    L_IB: sp.csr_matrix

    @classmethod
    def assemble(cls, mask: DomainMask) -> "DirichletLaplacian":
        n = mask.grid.n
        eye = sp.identity(n, format="csr")
        lap = (sp.kron(_lap1d(n), eye) + sp.kron(eye, _lap1d(n))).tocsr() / mask.grid.h**2
        interior_index = np.flatnonzero(mask.interior.reshape(-1).numpy())
        band_index = np.flatnonzero(mask.band.reshape(-1).numpy())
        rows = lap[interior_index]
        return cls(
            mask=mask,
            interior_index=interior_index,
            band_index=band_index,
            L_II=rows[:, interior_index].tocsc(),
            L_IB=rows[:, band_index].tocsr(),
        )

    @property
    def num_unknowns(self) -> int:
        return int(self.interior_index.size)

    def to_grid(self, interior: np.ndarray, band: np.ndarray) -> torch.Tensor:
        """Scatters interior and band vectors into an ``n x n`` tensor, zero elsewhere."""
        flat = np.zeros(self.mask.grid.n**2)
        flat[self.interior_index] = interior
        flat[self.band_index] = band
        return torch.from_numpy(flat.reshape(self.mask.grid.shape))

    def interior_vector(self, f: Field) -> np.ndarray:
        """Values of ``f`` on the interior nodes.

        Raises:
            GeometryError: if ``f`` does not cover the interior.
        """
        if not bool((f.support | ~self.mask.interior).all()):
            raise GeometryError("Field does not cover the interior nodes")
        return f.filled().reshape(-1).numpy()[self.interior_index]


def solve_linear(
    matrix: sp.spmatrix,
    rhs: np.ndarray,
    *,
    tol: float,
    method: LinearMethod = "direct",
    x0: Optional[np.ndarray] = None,
) -> np.ndarray:
    """
    Solves ``matrix x = rhs`` and checks the relative residual.

    ``cg`` is only valid for definite matrices; it is applied to ``-matrix``.

    Raises:
        SolverError: if the relative residual exceeds ``tol``.
    """
    if rhs.size == 0:
        return rhs.copy()
    scale = float(np.linalg.norm(rhs))
    if scale == 0.0:
        return np.zeros_like(rhs)
    if method == "direct":
        x = spla.spsolve(matrix.tocsc(), rhs)
    elif method == "cg":
        x, info = spla.cg(-matrix, -rhs, x0=x0, rtol=tol, maxiter=10 * rhs.size)
        if info != 0:
            logger.warning(f"Conjugate gradients stopped with info={info}")
    else:
        raise ValueError(f"Unknown linear method {method}")
    residual = float(np.linalg.norm(matrix @ x - rhs)) / scale
    # cg measures in its own norm; allow the usual slack
    limit = tol if method == "direct" else 10.0 * tol
    if not np.isfinite(residual) or residual > limit:
        raise SolverError(
            f"Linear solve ({method}) reached relative residual {residual:.3e} > {limit:.1e}",
            residual=residual,
            iterate=torch.from_numpy(np.asarray(x)),
        )
    return np.asarray(x)


def harmonic_extension(
    g: BoundaryData,
    *,
    system: Optional[DirichletLaplacian] = None,
    tol_linear: float = 1e-10,
    method: LinearMethod = "direct",
) -> Field:
    """
    Discrete harmonic function with Dirichlet values ``g`` on the band nodes.

    Args:
        g: boundary data.
        system: a pre-assembled Laplacian for ``g.mask``.
        tol_linear: relative residual of the linear solve.
        method: ``"direct"`` (sparse LU) or ``"cg"``.

    Raises:
        SolverError: if the linear solve misses ``tol_linear``.
    """
    mask = g.mask
    system = system or DirichletLaplacian.assemble(mask)
    band = g.band_vector(system)
    interior = solve_linear(system.L_II, -(system.L_IB @ band), tol=tol_linear, method=method)
    logger.debug(f"Harmonic extension over {system.num_unknowns} unknowns")
    return Field.from_values(mask, system.to_grid(interior, band), mask.active)
