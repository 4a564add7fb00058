# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Solvers for ``F(v) = Delta_h v + 2M sinh(v + G + M') + r = 0`` with ``v = g`` on the band nodes.

Two :class:`~torchvortex.framework.SolverUnit` s are provided and driven by
:func:`~torchvortex.framework.solve`:

* :class:`NewtonUnit`: damped Newton with continuation in ``M``. Every stage is one level
  ``M k / K``; the iteration starts from the ``M = 0`` linear solution.
* :class:`MonotoneUnit`: the shifted fixed-point sweep ``(Delta_h - K) v_{n+1} = f(v_n) - K v_n``
  started from the constant super-solution ``h + C_plus``.
"""

import logging
import math
from dataclasses import dataclass, field
from enum import auto, Enum
from typing import Dict, List, Optional

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla
import torch
from torchvortex.core.errors import ParameterError, SolverError
from torchvortex.core.fields import Field
from torchvortex.framework.callback import Callback
from torchvortex.framework.callbacks.residual_logger import ResidualLogger
from torchvortex.framework.solve import solve
from torchvortex.framework.state import State
from torchvortex.framework.unit import SolverUnit
from torchvortex.sinh_gordon.barrier import barrier_search, BarrierReport, f_value
from torchvortex.sinh_gordon.boundary import (
    boundary_data,
    BoundaryData,
    DirichletLaplacian,
    harmonic_extension,
    LinearMethod,
    solve_linear,
)
from torchvortex.sinh_gordon.problem import SinhGordonProblem
from torchvortex.sinh_gordon.sources import build_G, build_r
from torchvortex.utils.loggers.in_memory import InMemoryLogger
from torchvortex.utils.stagnation import StagnationChecker
from torchvortex.utils.timer import TimerProtocol

logger: logging.Logger = logging.getLogger(__name__)

MIN_STEP: float = 2.0**-20
FARFIELD_FRACTION = 0.9


class SolveMode(Enum):
    NEWTON = auto()
    MONOTONE = auto()


class Discretization:
    """
    The discrete system of a :class:`SinhGordonProblem` restricted to interior unknowns.

    Args:
        problem: the problem.
        linear_method: method for the linear solves with a definite matrix.
    """

    def __init__(self, problem: SinhGordonProblem, linear_method: LinearMethod = "direct") -> None:
        self.problem = problem
        self.linear_method = linear_method
        mask = problem.mask
        self.G: Field = build_G(problem.divisor, mask)
        self.r: Field = build_r(problem.divisor, mask)
        self.g: BoundaryData = boundary_data(mask, self.G)
        self.system: DirichletLaplacian = DirichletLaplacian.assemble(mask)
        self.G_I: np.ndarray = self.system.interior_vector(self.G)
        self.r_I: np.ndarray = self.system.interior_vector(self.r)
        self.g_B: np.ndarray = self.g.band_vector(self.system)
        self.coupling: np.ndarray = self.system.L_IB @ self.g_B

    def residual(self, v: np.ndarray, M: float) -> np.ndarray:
        """``F(v)`` on the interior nodes at coupling ``M``."""
        return (
            self.system.L_II @ v
            + self.coupling
            - f_value(v, self.G_I, self.r_I, M, self.problem.Mprime)
        )

    def linear_solution(self) -> np.ndarray:
        """The ``M = 0`` solution of ``Delta_h v = -r``."""
        return solve_linear(
            self.system.L_II,
            -self.r_I - self.coupling,
            tol=self.problem.tol_linear,
            method=self.linear_method,
        )

    def to_field(self, v: np.ndarray) -> Field:
        mask = self.problem.mask
        return Field.from_values(mask, self.system.to_grid(v, self.g_B), mask.active)


def _sup(x: np.ndarray) -> float:
    return float(np.abs(x).max()) if x.size else 0.0


class NewtonUnit(SolverUnit[float, Dict[str, float]]):
    """
    Damped Newton iteration, one stage per continuation level of ``M``.

    Steps are halved until the sup-norm residual decreases, down to :data:`MIN_STEP`. A level that
    shows no decrease over ``patience`` steps, or that exhausts its step budget, raises.

    Args:
        disc: the discrete system.
        patience: steps without residual decrease before the iteration is declared stagnant.
    """

    def __init__(self, disc: Discretization, patience: int = 10) -> None:
        super().__init__()
        self.disc = disc
        self.tol: float = disc.problem.tol_newton
        self.v: np.ndarray = np.zeros(disc.system.num_unknowns)
        self.residual_sup: float = math.inf
        self._M: float = 0.0
        self._F: np.ndarray = np.zeros(0)
        self._stagnation = StagnationChecker(patience=patience)

    def on_solve_start(self, state: State) -> None:
        self.v = self.disc.linear_solution()
        logger.info(f"Linear start over {self.v.size} unknowns")

    def _update_residual(self) -> None:
        self._F = self.disc.residual(self.v, self._M)
        self.residual_sup = _sup(self._F)

    def on_stage_start(self, state: State, stage: float) -> None:
        self._M = stage
        self._stagnation.reset()
        self._update_residual()
        logger.info(f"Continuation level M={stage:.6g}: initial residual {self.residual_sup:.3e}")

    def solve_step(self, state: State, stage: float) -> Dict[str, float]:
        disc = self.disc
        u = self.v + disc.G_I + disc.problem.Mprime
        jacobian = disc.system.L_II + sp.diags(2.0 * self._M * np.cosh(u))
        delta = spla.spsolve(jacobian.tocsc(), -self._F)
        if not np.all(np.isfinite(delta)):
            raise SolverError(
                f"Newton step is not finite at M={self._M}",
                residual=self.residual_sup,
                iterate=torch.from_numpy(self.v.copy()),
            )
        step = 1.0
        while True:
            trial = self.v + step * delta
            F_trial = disc.residual(trial, self._M)
            res_trial = _sup(F_trial)
            if res_trial < self.residual_sup or step <= MIN_STEP:
                break
            step *= 0.5
        self.v, self._F, self.residual_sup = trial, F_trial, res_trial
        logger.debug(f"Newton step {step:.3g}: residual {res_trial:.3e}")
        if self._stagnation.check(res_trial):
            raise SolverError(
                f"Newton iteration stagnated at M={self._M} with residual {res_trial:.3e}",
                residual=res_trial,
                iterate=torch.from_numpy(self.v.copy()),
                details={"continuation_level": self._M},
            )
        return {
            "residual_sup": res_trial,
            "step_length": step,
            "continuation_level": self._M,
        }

    def is_stage_done(self, state: State, stage: float) -> bool:
        return self.residual_sup <= self.tol

    def on_stage_end(self, state: State, stage: float) -> None:
        if self.residual_sup > self.tol:
            reason = state.stop_reason or "step budget exhausted"
            raise SolverError(
                f"Continuation level M={stage} did not converge ({reason}); residual {self.residual_sup:.3e}",
                residual=self.residual_sup,
                iterate=torch.from_numpy(self.v.copy()),
                details={"continuation_level": stage},
            )


class MonotoneUnit(SolverUnit[str, Dict[str, float]]):
    """
    Shifted fixed-point sweeps from the constant super-solution.

    ``K`` is ``2M`` times the largest ``cosh(v + G + M')`` over the barrier bracket, so the sweep
    map is order preserving. Iterates should decrease nodewise; nodes where a sweep increases the
    iterate are counted as violations.

    Args:
        disc: the discrete system.
        start: the starting constant, usually ``C_plus``.
        lower: the other end of the bracket, usually ``C_minus``.
        h: harmonic extension of the boundary data.
    """

    def __init__(self, disc: Discretization, start: float, lower: float, h: Field) -> None:
        super().__init__()
        self.disc = disc
        self.tol: float = disc.problem.tol_newton
        h_I = disc.system.interior_vector(h)
        self.v: np.ndarray = h_I + start
        ends = np.concatenate([h_I + start, h_I + lower]) + np.concatenate([disc.G_I, disc.G_I])
        M = disc.problem.M
        self.shift: float = 2.0 * M * float(np.cosh(ends + disc.problem.Mprime).max()) if ends.size else 0.0
        self._lu = spla.factorized((disc.system.L_II - self.shift * sp.identity(h_I.size)).tocsc())
        self.residual_sup: float = _sup(disc.residual(self.v, M))
        self.violations: int = 0
        self.violation_sweeps: List[int] = []

    def solve_step(self, state: State, stage: str) -> Dict[str, float]:
        disc = self.disc
        M = disc.problem.M
        rhs = f_value(self.v, disc.G_I, disc.r_I, M, disc.problem.Mprime) - self.shift * self.v - disc.coupling
        new = np.asarray(self._lu(rhs))
        increases = int((new > self.v + 1e-12 * (1.0 + np.abs(self.v))).sum())
        if increases:
            self.violations += increases
            self.violation_sweeps.append(self.solve_progress.num_steps_completed)
            logger.warning(f"Monotone sweep {self.solve_progress.num_steps_completed} increased {increases} nodes")
        self.v = new
        self.residual_sup = _sup(disc.residual(self.v, M))
        return {"residual_sup": self.residual_sup, "violations": float(increases)}

    def is_stage_done(self, state: State, stage: str) -> bool:
        return self.residual_sup <= self.tol

    def on_stage_end(self, state: State, stage: str) -> None:
        if self.residual_sup > self.tol:
            raise SolverError(
                f"Monotone sweeps did not converge; residual {self.residual_sup:.3e}",
                residual=self.residual_sup,
                iterate=torch.from_numpy(self.v.copy()),
                details={"violations": self.violations},
            )


@dataclass
class SolveResult:
    """
    Output of :func:`solve_bvp`.

    Args:
        v: solution of the transformed problem, on the active nodes.
        u: ``v + G + M'`` on the common support.
        G: singular part.
        r: ``Delta G``.
        h: harmonic extension of ``g``.
        g: Dirichlet data.
        residual_sup: sup over interior nodes of ``|F(v)|``.
        newton_iters: number of nonlinear iterations (sweeps in monotone mode).
        barrier: the barrier ledger of the problem.
        farfield_residual: sup of ``|F(v)|`` over interior nodes with ``|z| >= 0.9 R``.
        mode: the solver that produced ``v``.
        monotone_violations: nodewise monotonicity violations of the sweep, monotone mode only.
        history: residual after every iteration.
    """

    v: Field
    u: Field
    G: Field
    r: Field
    h: Field
    g: BoundaryData
    residual_sup: float
    newton_iters: int
    barrier: BarrierReport
    farfield_residual: float
    mode: SolveMode = SolveMode.NEWTON
    monotone_violations: int = 0
    history: List[float] = field(default_factory=list)


def solve_bvp(
    problem: SinhGordonProblem,
    *,
    mode: SolveMode = SolveMode.NEWTON,
    require_ordered_pair: bool = True,
    linear_method: LinearMethod = "direct",
    max_steps_per_stage: int = 50,
    max_sweeps: int = 2000,
    callbacks: Optional[List[Callback]] = None,
    timer: Optional[TimerProtocol] = None,
) -> SolveResult:
    """
    Solves the discrete Dirichlet problem of ``problem``.

    Args:
        problem: the problem.
        mode: Newton with continuation (default) or monotone sweeps.
        require_ordered_pair: in monotone mode, refuse to run without an ordered barrier pair.
        linear_method: method for the definite linear solves.
        max_steps_per_stage: Newton step budget per continuation level.
        max_sweeps: sweep budget of the monotone mode.
        callbacks: extra callbacks for the solve loop.
        timer: optional timer for the solve loop.

    Raises:
        SolverError: on stagnation, an exhausted budget or a failed linear solve.
        ParameterError: if monotone mode is requested without the barriers it needs.
    """
    disc = Discretization(problem, linear_method)
    h = harmonic_extension(disc.g, system=disc.system, tol_linear=problem.tol_linear, method=linear_method)
    barrier = barrier_search(problem, h, disc.G, disc.r)

    history = InMemoryLogger()
    all_callbacks: List[Callback] = [ResidualLogger(history)] + list(callbacks or [])
    unit: SolverUnit
    if mode == SolveMode.NEWTON:
        if problem.M == 0.0:
            stages = [0.0]
        else:
            k = problem.continuation_steps
            stages = [problem.M * (i + 1) / k for i in range(k)]
        unit = NewtonUnit(disc)
        solve(unit, stages, max_steps_per_stage=max_steps_per_stage, callbacks=all_callbacks, timer=timer)
    else:
        if require_ordered_pair and not barrier.ordered_pair:
            raise ParameterError(
                "Monotone sweeps need an ordered sub/super-solution pair of constant shifts and none "
                f"exists for this problem (C_plus={barrier.C_plus}, C_minus={barrier.C_minus})"
            )
        if barrier.C_plus is None:
            raise ParameterError("Monotone sweeps need a super-solution constant C_plus; none exists")
        lower = barrier.C_minus if barrier.C_minus is not None else barrier.C_plus
        unit = MonotoneUnit(disc, barrier.C_plus, lower, h)
        solve(unit, ["sweep"], max_steps_per_stage=max_sweeps, callbacks=all_callbacks, timer=timer)

    F = disc.residual(unit.v, problem.M)
    residual_sup = _sup(F)
    z_I = problem.grid.z().reshape(-1).numpy()[disc.system.interior_index]
    far = np.abs(z_I) >= FARFIELD_FRACTION * problem.R
    farfield = _sup(F[far])
    if problem.Mprime != 0.0:
        logger.info(f"Far-field residual {farfield:.3e} with M'={problem.Mprime}")

    v = disc.to_field(unit.v)
    u = v + disc.G + problem.Mprime
    return SolveResult(
        v=v,
        u=u,
        G=disc.G,
        r=disc.r,
        h=h,
        g=disc.g,
        residual_sup=residual_sup,
        newton_iters=unit.solve_progress.num_steps_completed,
        barrier=barrier,
        farfield_residual=farfield,
        mode=mode,
        monotone_violations=unit.violations if isinstance(unit, MonotoneUnit) else 0,
        history=history.series("residual_sup"),
    )
