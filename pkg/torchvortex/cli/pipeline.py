# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
Drivers of the command-line commands.

Every command runs as a sequence of named stages. Stage wall-clock is recorded with a
:class:`~torchvortex.utils.timer.Timer`; when a stage raises, the report is still written with
the results gathered so far and the name of the failing stage, and the error propagates.
"""

import logging
import math
from contextlib import contextmanager
from datetime import datetime, timezone
from typing import Any, Callable, Dict, Generator, List, Optional, Sequence

import torch
from torchvortex.cli.config import (
    EnergySection,
    FamilySection,
    RefineSection,
    RunConfig,
    SolveSection,
    VekuaSection,
    VerifySection,
    render_config,
)
from torchvortex.cli.field_io import read_field, write_field
from torchvortex.cli.report import jsonable, REPORT_SUFFIX, SCHEMA_VERSION, write_report
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import ConfigurationError, GeometryError, SolverError, VerificationError, VortexError
from torchvortex.core.fields import Field
from torchvortex.core.grid import build_mask, DomainMask, GridSpec
from torchvortex.explicit import (
    check_pair_compat,
    divisor_of,
    FamilyParams,
    generate_divisor_solution,
    generate_higgs_solution,
    generate_plane_wave,
    HiggsConnection,
    SolutionFields,
)
from torchvortex.framework.callback import Callback
from torchvortex.framework.callbacks import ResidualLogger, TimeLimitInterrupter, TQDMProgressBar
from torchvortex.gauge import (
    bogomolny_split,
    compact_fields,
    fit_decay_envelopes,
    flux,
    flux_tube,
    gauge_transform_matter,
    reconstruct_fields,
    ReconstructionParams,
    residual_higgs,
    residual_maineq,
    unit_flux,
    ymh_functional,
)
from torchvortex.sinh_gordon import (
    CompactWindow,
    distributional_charge,
    nested_refinement,
    SinhGordonProblem,
    solve_bvp,
    SolveMode,
)
from torchvortex.utils.env import seed as seed_everything
from torchvortex.utils.fsspec import ensure_dir, get_filesystem, join
from torchvortex.utils.loggers import CSVLogger, MetricLogger, TensorBoardLogger
from torchvortex.utils.timer import get_durations_histogram, get_timer_summary, Timer
from torchvortex.vekua import (
    cauchy_pompeiu_remainder,
    decay_zero_radius,
    lpnu_norms,
    similarity_factor,
    system_factor,
    t_operator,
    t_operator_defect,
    t_operator_grid,
    VekuaCoeffs,
)

logger: logging.Logger = logging.getLogger(__name__)

COMMANDS = ("generate", "solve", "refine", "verify", "vekua", "energy")
FIELD_SUFFIX = ".vortx"
SOLUTION_FIELDS = ("A0", "A1", "psi1", "psi2")


class _Run:
    """Per-command state: the configuration, the output directory, results and stage timing."""

    def __init__(
        self,
        cfg: RunConfig,
        command: str,
        out_dir: str,
        *,
        progress: bool,
        tensorboard: bool,
    ) -> None:
        self.cfg = cfg
        self.command = command
        self.out_dir = out_dir
        self.progress = progress
        self.tensorboard = tensorboard
        self.results: Dict[str, Any] = {}
        self.timer = Timer()
        self.stage_name: Optional[str] = None
        self.grid: Optional[GridSpec] = None
        self.files: List[str] = []

    @contextmanager
    def stage(self, name: str) -> Generator[None, None, None]:
        self.stage_name = name
        logger.info(f"[{self.command}] stage {name}")
        with self.timer.time(name):
            yield

    def write(self, f: Field, name: str) -> None:
        path = join(self.out_dir, f"{name}{FIELD_SUFFIX}")
        write_field(f, path)
        self.files.append(f"{name}{FIELD_SUFFIX}")

    def write_solution(self, s: SolutionFields) -> None:
        for name in SOLUTION_FIELDS:
            self.write(getattr(s, name), name)
        if s.higgs is not None:
            self.write(s.higgs, "higgs")


def _grid(cfg: RunConfig, radius: float) -> GridSpec:
    return GridSpec(cfg.grid.extent or radius, cfg.grid.n)


def _divisor(vortices: Sequence[Any]) -> VortexDivisor:
    return VortexDivisor.from_pairs(vortices)


def _away_from(mask: DomainMask, points: Sequence[complex], distance: float) -> torch.Tensor:
    """Interior nodes at least ``distance`` from every point."""
    z = mask.grid.z()
    keep = mask.interior.clone()
    for p in points:
        keep &= (z - p).abs() >= distance
    return keep


def _relative_main(s: SolutionFields, region: Optional[torch.Tensor]) -> Dict[str, float]:
    """Main-equation residuals, absolute and relative to ``sup|psi|`` (``sup|psi|^2`` for curvature)."""
    res = residual_maineq(s, region)
    where = s.mask.interior if region is None else s.mask.interior & region
    scale = max(s.psi1.sup(where), s.psi2.sup(where), 1e-300)
    relative = max(res.r1 / scale, res.r2 / scale, res.r3 / max(scale * scale, 1.0))
    return {"r1": res.r1, "r2": res.r2, "r3": res.r3, "scale": scale, "relative": relative}


def _divisor_summary(divisor: VortexDivisor) -> Dict[str, Any]:
    return {
        "degree": divisor.degree,
        "points": [[p.real, p.imag] for p in divisor.points],
        "multiplicities": divisor.multiplicities,
    }


def _envelope(run: _Run, s: SolutionFields, region: Optional[torch.Tensor] = None) -> None:
    try:
        report = fit_decay_envelopes(s.psi1, s.psi2, region=region)
    except GeometryError as e:
        run.results["envelope"] = {"available": False, "reason": str(e)}
        return
    run.results["envelope"] = {"available": True, **jsonable(report)}


def _generate(run: _Run) -> None:
    fam = run.cfg.family or FamilySection()
    mask = build_mask(_grid(run.cfg, fam.R), fam.R)
    run.grid = mask.grid
    divisor = _divisor(fam.vortices)
    with run.stage("generate"):
        if fam.kind == "divisor":
            s = generate_divisor_solution(mask, FamilyParams(fam.c1, fam.c2, fam.theta, divisor))
        elif fam.kind == "plane_wave":
            s = generate_plane_wave(mask, fam.c1, fam.c2, fam.sign)
        else:
            s = generate_higgs_solution(
                mask, fam.c1, fam.c2.real, HiggsConnection[fam.connection.upper()]
            )
    with run.stage("write"):
        run.write_solution(s)
    with run.stage("residuals"):
        run.results["residual_maineq"] = _relative_main(s, None)
        if s.higgs is not None:
            run.results["residual_higgs"] = jsonable(residual_higgs(s))
        run.results["flux"] = jsonable(flux(s.A0, s.A1))
    if fam.kind == "divisor":
        with run.stage("compat"):
            x0, _ = mask.grid.coordinates()
            wave = complex(fam.c1) * torch.exp(2j * complex(fam.c2) * x0.to(torch.complex128))
            h1 = s.psi1.map(lambda v: v / wave)
            h2 = s.psi2.map(lambda v: v / wave)
            run.results["compat"] = jsonable(check_pair_compat(h1, h2))
    with run.stage("divisor"):
        expected = divisor.degree if fam.kind == "divisor" else 0
        try:
            found = divisor_of(s)
        except GeometryError as e:
            run.results["divisor"] = {"available": False, "reason": str(e), "expected_degree": expected}
        else:
            run.results["divisor"] = {**_divisor_summary(found), "expected_degree": expected}
    with run.stage("envelope"):
        _envelope(run, s)


def _problem(
    cfg: RunConfig, s: SolveSection, *, eps: Optional[float] = None, R: Optional[float] = None
) -> SinhGordonProblem:
    radius = s.R if R is None else R
    return SinhGordonProblem(
        divisor=_divisor(s.vortices),
        M=s.M,
        R=radius,
        grid=_grid(cfg, radius),
        Mprime=s.Mprime,
        eps=s.eps if eps is None else eps,
        tol_newton=s.tol_newton,
        tol_linear=s.tol_linear,
        continuation_steps=s.continuation_steps,
    )


def _solver_callbacks(run: _Run, loggers: List[MetricLogger]) -> List[Callback]:
    callbacks: List[Callback] = [ResidualLogger(loggers)]
    if run.progress:
        callbacks.append(TQDMProgressBar())
    if run.cfg.run.time_limit:
        try:
            callbacks.append(TimeLimitInterrupter(duration=run.cfg.run.time_limit))
        except ValueError as e:
            raise ConfigurationError(f"[run] time_limit: {e}") from e
    return callbacks


def _solve(run: _Run) -> None:
    s = run.cfg.solve or SolveSection()
    problem = _problem(run.cfg, s)
    run.grid = problem.grid
    tb: Optional[TensorBoardLogger] = None
    loggers: List[MetricLogger] = [CSVLogger(join(run.out_dir, "solve_history.csv"))]
    if run.tensorboard:
        tb = TensorBoardLogger(join(run.out_dir, "tensorboard"))
        tb.log_text("config", render_config(run.cfg), 0)
        loggers.append(tb)
    solve_timer = Timer()
    try:
        with run.stage("solve"):
            result = solve_bvp(
                problem,
                mode=SolveMode[s.mode.upper()],
                require_ordered_pair=s.require_ordered_pair,
                linear_method=s.linear_method,
                max_steps_per_stage=s.max_steps_per_stage,
                callbacks=_solver_callbacks(run, loggers),
                timer=solve_timer,
            )
        if tb is not None:
            tb.log_heatmap("u", result.u.values, result.newton_iters)
            tb.log_hparams(
                {"M": s.M, "Mprime": s.Mprime, "R": s.R, "eps": s.eps, "n": run.cfg.grid.n},
                {"residual_sup": result.residual_sup, "newton_iters": result.newton_iters},
            )
    finally:
        for metric_logger in loggers:
            metric_logger.close()
    logger.debug(get_timer_summary(solve_timer))
    logger.debug(f"Solve timing percentiles: {get_durations_histogram(solve_timer.recorded_durations, (50, 90))}")
    run.results["solve"] = {
        "mode": result.mode,
        "residual_sup": result.residual_sup,
        "newton_iters": result.newton_iters,
        "farfield_residual": result.farfield_residual,
        "monotone_violations": result.monotone_violations,
        "history": result.history,
    }
    run.results["barrier"] = result.barrier.to_dict()
    with run.stage("charge"):
        try:
            charges = distributional_charge(result.u, problem.divisor, problem.eps)
        except GeometryError as e:
            run.results["charge"] = {"available": False, "reason": str(e)}
        else:
            run.results["charge"] = {
                "available": True,
                "charges": charges,
                "multiplicities": problem.divisor.multiplicities,
            }
    with run.stage("write"):
        run.write(result.v, "v")
        run.write(result.u, "u")
    if run.cfg.reconstruct is None:
        return
    rec = run.cfg.reconstruct
    with run.stage("reconstruct"):
        params = ReconstructionParams(rec.M1, rec.M2, zero_floor=rec.zero_floor)
        fields = reconstruct_fields(result.u, params)
        region = _away_from(fields.mask, problem.divisor.points, problem.eps + rec.exclusion * problem.grid.h)
        mismatch = abs(params.M - s.M) > 1e-12 or abs(params.Mprime - s.Mprime) > 1e-12
        if mismatch:
            logger.warning(
                f"Reconstruction parameters give M={params.M:.6g}, M'={params.Mprime:.6g};"
                f" the solve used M={s.M:.6g}, M'={s.Mprime:.6g}"
            )
        run.results["reconstruct"] = {
            "M": params.M,
            "Mprime": params.Mprime,
            "C": params.C,
            "parameter_mismatch": mismatch,
            "residual_maineq": _relative_main(fields, region),
            "flux": jsonable(flux(fields.A0, fields.A1)),
        }
        run.write_solution(fields)


def _refine(run: _Run) -> None:
    s = run.cfg.solve or SolveSection()
    r = run.cfg.refine or RefineSection()
    problem = _problem(run.cfg, s, eps=r.eps[0], R=r.R[0])
    run.grid = problem.grid
    window = CompactWindow(outer=r.window_outer, inner=r.window_inner)
    with run.stage("refine"):
        report = nested_refinement(
            problem,
            r.eps,
            r.R,
            window,
            mode=SolveMode[s.mode.upper()],
            require_ordered_pair=s.require_ordered_pair,
            linear_method=s.linear_method,
            max_steps_per_stage=s.max_steps_per_stage,
        )
        run.results["refinement"] = report.to_dict()
        if not report.completed:
            raise SolverError(f"Refinement stopped after {len(report.levels)} levels: {report.failure}")


def _read_solution(directory: str) -> SolutionFields:
    fs = get_filesystem(directory)
    fields = {name: read_field(join(directory, f"{name}{FIELD_SUFFIX}")) for name in SOLUTION_FIELDS}
    higgs_path = join(directory, f"higgs{FIELD_SUFFIX}")
    higgs = read_field(higgs_path) if fs.exists(higgs_path) else None
    return SolutionFields(higgs=higgs, **fields)


def _verify(run: _Run) -> None:
    v = run.cfg.verify or VerifySection()
    directory = v.fields_dir or run.out_dir
    with run.stage("read"):
        s = _read_solution(directory)
    mask = s.mask
    run.grid = mask.grid
    region = mask.interior.clone()
    z = mask.grid.z()
    for p in mask.punctures:
        region &= (z - p.center).abs() >= p.radius + v.exclusion * mask.grid.h
    with run.stage("residuals"):
        main = _relative_main(s, region)
        run.results["residual_maineq"] = main
        if s.higgs is not None:
            run.results["residual_higgs"] = jsonable(residual_higgs(s, region))
        run.results["flux"] = jsonable(flux(s.A0, s.A1))
    with run.stage("divisor"):
        try:
            run.results["divisor"] = _divisor_summary(divisor_of(s))
        except GeometryError as e:
            run.results["divisor"] = {"available": False, "reason": str(e)}
    if v.envelope:
        with run.stage("envelope"):
            _envelope(run, s, region)
    with run.stage("threshold"):
        run.results["threshold"] = {"tol_main": v.tol_main, "passed": main["relative"] <= v.tol_main}
        if main["relative"] > v.tol_main:
            raise VerificationError(
                f"Relative main-equation residual {main['relative']:.3e} exceeds tol_main={v.tol_main}",
                {"relative": main["relative"], "tol_main": v.tol_main},
            )


def _sample_nodes(mask: DomainMask, count: int, radius: float = 0.8) -> List[complex]:
    """``count`` deterministic interior nodes spread over a spiral inside the disk."""
    grid = mask.grid
    nodes: List[complex] = []
    for k in range(count):
        rho = radius * mask.radius * (k + 1) / count
        angle = 2.0 * math.pi * k * 0.381966
        i, j = grid.index_of(complex(rho * math.cos(angle), rho * math.sin(angle)))
        nodes.append(grid.point(i, j))
    return nodes


def _vekua(run: _Run) -> None:
    vk = run.cfg.vekua or VekuaSection()
    mask = build_mask(GridSpec(1.0, run.cfg.grid.n), 1.0)
    run.grid = mask.grid
    one = Field.constant(mask, 1.0)
    with run.stage("t_operator"):
        points = _sample_nodes(mask, vk.samples)
        values = t_operator(one, points)
        expected = torch.conj(torch.tensor(points, dtype=torch.complex128))
        on_grid = t_operator_grid(one)
        idx = [mask.grid.index_of(p) for p in points]
        grid_values = torch.stack([on_grid.values[i, j] for i, j in idx])
        run.results["t_operator"] = {
            "samples": len(points),
            "max_error": float((values - expected).abs().max().item()),
            "grid_agreement": float((values - grid_values).abs().max().item()),
        }
    with run.stage("similarity"):
        w = Field.from_function(mask, lambda z: torch.exp(torch.conj(z)))
        fac = similarity_factor(w, VekuaCoeffs(A=vk.A, B=vk.B))
        baseline = t_operator_defect(mask)
        run.results["similarity"] = {
            "cr_residual": fac.cr_residual,
            "vekua_residual": fac.vekua_residual,
            "constant": fac.constant,
            "baseline": baseline,
            "ratio": fac.cr_residual / baseline if baseline > 0 else None,
            "floor_nodes": fac.floor_nodes,
            "min_exp_modulus": fac.min_exp_modulus,
        }
        split = cauchy_pompeiu_remainder(w)
        run.results["cauchy_pompeiu"] = {"cr_residual": split.cr_residual}
    if run.cfg.family is not None:
        fam = run.cfg.family
        with run.stage("system"):
            pair = generate_plane_wave(mask, fam.c1, fam.c2, fam.sign)
            alpha = (pair.A0 - 1j * pair.A1) * 0.5
            first, second = system_factor(pair.psi1, pair.psi2, alpha)
            run.results["system"] = {
                "cr_residual_first": first.cr_residual,
                "cr_residual_second": second.cr_residual,
                "vekua_residual_first": first.vekua_residual,
                "vekua_residual_second": second.vekua_residual,
            }
    with run.stage("lpnu"):
        run.results["lpnu"] = {
            "constant": jsonable(lpnu_norms(lambda z: torch.ones_like(z), vk.p, vk.nu, n=run.cfg.grid.n)),
            "decaying": jsonable(
                lpnu_norms(lambda z: (1.0 + z.abs() ** 2) ** -2, vk.p, vk.nu, n=run.cfg.grid.n)
            ),
        }
    if vk.decay_M is not None and vk.decay_N is not None:
        with run.stage("decay"):
            run.results["decay"] = jsonable(decay_zero_radius(vk.decay_M, vk.decay_N))


def _energy(run: _Run) -> None:
    e = run.cfg.energy or EnergySection()
    mask = build_mask(_grid(run.cfg, e.R), e.R)
    run.grid = mask.grid
    with run.stage("bogomolny"):
        samples = []
        for k in range(e.count):
            A0, A1, phi = compact_fields(mask, run.cfg.run.seed + k, support_radius=e.support_radius)
            split = bogomolny_split(A0, A1, phi)
            samples.append(
                {
                    "seed": run.cfg.run.seed + k,
                    "ymh_direct": split.ymh_direct,
                    "ymh_bogomolny": split.ymh_bogomolny,
                    "defect": split.defect,
                    "relative_defect": split.defect / max(1.0, split.ymh_direct),
                    "flux_over_2pi": split.flux_over_2pi,
                    "boundary_term": split.boundary_term,
                }
            )
        run.results["bogomolny"] = {
            "samples": samples,
            "max_relative_defect": max(s["relative_defect"] for s in samples),
        }
    with run.stage("gauge_invariance"):
        A0, A1, phi = compact_fields(mask, run.cfg.run.seed, support_radius=e.support_radius)

        def chi(z: torch.Tensor) -> torch.Tensor:
            return torch.sin(z.real) * torch.cos(z.imag)

        before = ymh_functional(A0, A1, phi)
        after = ymh_functional(*gauge_transform_matter(A0, A1, phi, chi))
        run.results["gauge_invariance"] = {
            "ymh_before": before,
            "ymh_after": after,
            "relative_change": abs(after - before) / max(1.0, abs(before)),
        }
    with run.stage("flux_tube"):
        T0, T1 = flux_tube(mask, e.width)
        report = flux(T0, T1)
        run.results["flux_tube"] = {
            "flux_over_2pi": report.over2pi,
            "expected_over_2pi": unit_flux(e.width, e.R),
        }


_DRIVERS: Dict[str, Callable[[_Run], None]] = {
    "generate": _generate,
    "solve": _solve,
    "refine": _refine,
    "verify": _verify,
    "vekua": _vekua,
    "energy": _energy,
}


def run_pipeline(
    cfg: RunConfig,
    command: str,
    out_dir: str,
    *,
    progress: bool = False,
    tensorboard: bool = False,
) -> Dict[str, Any]:
    """
    Runs ``command`` and writes its field files and ``<command>_report.json`` to ``out_dir``.

    Args:
        cfg: validated configuration.
        command: one of :data:`COMMANDS`.
        out_dir: output directory, any fsspec URL; created if missing.
        progress: show tqdm bars during solves.
        tensorboard: also log solver histories to TensorBoard.

    Raises:
        ConfigurationError: on an unknown command.
        VortexError: whatever the failing stage raised, after the partial report was written.
    """
    if command not in _DRIVERS:
        raise ConfigurationError(f"Unknown command '{command}', expected one of {', '.join(COMMANDS)}")
    ensure_dir(out_dir)
    seed_everything(cfg.run.seed)
    run = _Run(cfg, command, out_dir, progress=progress, tensorboard=tensorboard)
    report: Dict[str, Any] = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "config": render_config(cfg),
        "results": run.results,
        "files": run.files,
    }
    try:
        _DRIVERS[command](run)
        report["status"] = "ok"
    except VortexError as e:
        report["status"] = "failed"
        report["error"] = {
            "type": type(e).__name__,
            "message": str(e),
            "stage": run.stage_name,
            "details": jsonable(e.details),
        }
        logger.error(f"[{command}] stage {run.stage_name} failed: {e}")
        raise
    finally:
        if run.grid is not None:
            report["grid"] = {"n": run.grid.n, "extent": run.grid.extent, "h": run.grid.h}
        report["timing"] = {name: run.timer.total(name) for name in run.timer.recorded_durations}
        report["created"] = datetime.now(timezone.utc).isoformat()
        write_report(report, join(out_dir, f"{command}{REPORT_SUFFIX}"))
    logger.info(f"[{command}] finished\n{get_timer_summary(run.timer)}")
    return report
