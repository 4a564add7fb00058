# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
The run configuration and its text format.

Grammar::

    # comment
    [section]
    key = value

Values are integers, reals, complex literals written with ``i`` (``0.5-1i``), booleans
(``true``/``false``), bare words, or comma-separated real lists. A vortex is written
``vortex = z : m`` and the key may repeat. Every diagnostic names the line and the key.
"""

import logging
import math
from dataclasses import dataclass, field, fields, replace
from typing import Any, Callable, Dict, List, Optional, Tuple

from fsspec import open as fs_open
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import ConfigurationError

logger: logging.Logger = logging.getLogger(__name__)

Vortex = Tuple[complex, int]


def _parse_bool(text: str) -> bool:
    lowered = text.lower()
    if lowered in ("true", "yes", "1"):
        return True
    if lowered in ("false", "no", "0"):
        return False
    raise ValueError(f"expected true or false, got '{text}'")


def _parse_complex(text: str) -> complex:
    return complex(text.replace(" ", "").replace("i", "j"))


def _parse_floats(text: str) -> Tuple[float, ...]:
    return tuple(float(part) for part in text.split(",") if part.strip())


def _parse_optional_float(text: str) -> Optional[float]:
    return None if text.lower() == "none" else float(text)


def _parse_vortex(text: str) -> Vortex:
    point, sep, multiplicity = text.partition(":")
    if not sep:
        raise ValueError(f"expected 'z : m', got '{text}'")
    return (_parse_complex(point.strip()), int(multiplicity.strip()))


def _format_real(x: float) -> str:
    return repr(float(x))


def _format_complex(z: complex) -> str:
    sign = "-" if math.copysign(1.0, z.imag) < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def _format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, complex):
        return _format_complex(value)
    if isinstance(value, float):
        return _format_real(value)
    if isinstance(value, tuple):
        return ", ".join(_format_real(v) for v in value)
    if value is None:
        return "none"
    return str(value)


def _key(
    default: Any, parse: Callable[[str], Any], repeat: bool = False, alias: Optional[str] = None
) -> Any:
    return field(default=default, metadata={"parse": parse, "repeat": repeat, "alias": alias})


@dataclass(frozen=True)
class RunSection:
    seed: int = _key(0, int)
    time_limit: str = _key("", str)


@dataclass(frozen=True)
class GridSection:
    """``extent`` defaults to the radius of the command's disk."""

    n: int = _key(129, int)
    extent: Optional[float] = _key(None, _parse_optional_float)


@dataclass(frozen=True)
class FamilySection:
    kind: str = _key("divisor", str)
    c1: complex = _key(1 + 0j, _parse_complex)
    c2: complex = _key(0.5 + 0j, _parse_complex)
    theta: float = _key(0.0, float)
    sign: int = _key(1, int)
    connection: str = _key("literal", str)
    R: float = _key(4.0, float)
    vortices: Tuple[Vortex, ...] = _key((), _parse_vortex, repeat=True, alias="vortex")


@dataclass(frozen=True)
class SolveSection:
    M: float = _key(0.25, float)
    Mprime: float = _key(0.0, float)
    R: float = _key(6.0, float)
    eps: float = _key(0.1, float)
    vortices: Tuple[Vortex, ...] = _key((), _parse_vortex, repeat=True, alias="vortex")
    tol_newton: float = _key(1e-9, float)
    tol_linear: float = _key(1e-10, float)
    continuation_steps: int = _key(8, int)
    mode: str = _key("newton", str)
    require_ordered_pair: bool = _key(True, _parse_bool)
    linear_method: str = _key("direct", str)
    max_steps_per_stage: int = _key(50, int)


@dataclass(frozen=True)
class ReconstructSection:
    M1: float = _key(0.25, float)
    M2: float = _key(0.25, float)
    zero_floor: Optional[float] = _key(None, _parse_optional_float)
    exclusion: float = _key(5.0, float)


@dataclass(frozen=True)
class RefineSection:
    eps: Tuple[float, ...] = _key((0.2, 0.1, 0.05), _parse_floats)
    R: Tuple[float, ...] = _key((6.0,), _parse_floats)
    window_outer: float = _key(3.0, float)
    window_inner: float = _key(0.5, float)


@dataclass(frozen=True)
class VekuaSection:
    A: complex = _key(1 + 0j, _parse_complex)
    B: complex = _key(0j, _parse_complex)
    samples: int = _key(10, int)
    p: float = _key(2.0, float)
    nu: float = _key(2.0, float)
    decay_M: Optional[float] = _key(None, _parse_optional_float)
    decay_N: Optional[float] = _key(None, _parse_optional_float)


@dataclass(frozen=True)
class VerifySection:
    fields_dir: str = _key("", str)
    tol_main: float = _key(1e-2, float)
    exclusion: float = _key(5.0, float)
    envelope: bool = _key(True, _parse_bool)


@dataclass(frozen=True)
class EnergySection:
    count: int = _key(5, int)
    R: float = _key(6.0, float)
    width: float = _key(1.0, float)
    support_radius: float = _key(0.0, float)


_SECTIONS: Dict[str, type] = {
    "run": RunSection,
    "grid": GridSection,
    "family": FamilySection,
    "solve": SolveSection,
    "reconstruct": ReconstructSection,
    "refine": RefineSection,
    "vekua": VekuaSection,
    "verify": VerifySection,
    "energy": EnergySection,
}


@dataclass(frozen=True)
class RunConfig:
    """
    A parsed configuration. Sections that are absent from the text stay None, except ``run`` and
    ``grid``, which always exist.
    """

    run: RunSection = field(default_factory=RunSection)
    grid: GridSection = field(default_factory=GridSection)
    family: Optional[FamilySection] = None
    solve: Optional[SolveSection] = None
    reconstruct: Optional[ReconstructSection] = None
    refine: Optional[RefineSection] = None
    vekua: Optional[VekuaSection] = None
    verify: Optional[VerifySection] = None
    energy: Optional[EnergySection] = None

    def with_overrides(self, *, n: Optional[int] = None, seed: Optional[int] = None) -> "RunConfig":
        """Applies command-line overrides of ``[grid] n`` and ``[run] seed``."""
        cfg = self
        if n is not None:
            cfg = replace(cfg, grid=replace(cfg.grid, n=n))
        if seed is not None:
            cfg = replace(cfg, run=replace(cfg.run, seed=seed))
        _validate(cfg, {})
        return cfg


def _key_names(section_type: type) -> Dict[str, Any]:
    names = {}
    for f in fields(section_type):
        names[f.metadata.get("alias") or f.name] = f
    return names


def _fail(lines: Dict[Tuple[str, str], int], section: str, key: str, message: str) -> None:
    line = lines.get((section, key))
    where = f"line {line}: " if line is not None else ""
    raise ConfigurationError(f"{where}[{section}] {key}: {message}", {"section": section, "key": key, "line": line})


def _validate(cfg: RunConfig, lines: Dict[Tuple[str, str], int]) -> None:
    if cfg.grid.n < 5:
        _fail(lines, "grid", "n", f"{cfg.grid.n} is below the minimum 5")
    if cfg.run.seed < 0 or cfg.run.seed > 2**32 - 1:
        _fail(lines, "run", "seed", f"{cfg.run.seed} is outside the uint32 range")
    if cfg.family is not None:
        fam = cfg.family
        if fam.kind not in ("divisor", "plane_wave", "higgs"):
            _fail(lines, "family", "kind", f"'{fam.kind}' is not one of divisor, plane_wave, higgs")
        if fam.connection not in ("literal", "consistent"):
            _fail(lines, "family", "connection", f"'{fam.connection}' is not literal or consistent")
        if fam.sign not in (1, -1):
            _fail(lines, "family", "sign", f"{fam.sign} is not +1 or -1")
        if fam.c1 == 0:
            _fail(lines, "family", "c1", "must be nonzero")
        _check_divisor(lines, "family", fam.vortices, 1)
    if cfg.solve is not None:
        s = cfg.solve
        if not 0.0 < s.M < 1.0:
            _fail(lines, "solve", "M", f"{s.M} is outside (0,1)")
        if s.Mprime < 0.0:
            _fail(lines, "solve", "Mprime", f"{s.Mprime} must be non-negative")
        if s.R <= 0.0:
            _fail(lines, "solve", "R", f"{s.R} must be positive")
        extent = cfg.grid.extent or s.R
        h = 2.0 * extent / (cfg.grid.n - 1)
        if s.eps < 2.0 * h:
            _fail(lines, "solve", "eps", f"{s.eps} is below 2h = {2.0 * h} on the {cfg.grid.n}-node grid")
        _check_divisor(lines, "solve", s.vortices, 2)
        if s.mode not in ("newton", "monotone"):
            _fail(lines, "solve", "mode", f"'{s.mode}' is not newton or monotone")
        if s.linear_method not in ("direct", "cg"):
            _fail(lines, "solve", "linear_method", f"'{s.linear_method}' is not direct or cg")
        if s.continuation_steps < 1:
            _fail(lines, "solve", "continuation_steps", "must be positive")
    if cfg.reconstruct is not None:
        for name in ("M1", "M2"):
            value = getattr(cfg.reconstruct, name)
            if not 0.0 < value < 1.0:
                _fail(lines, "reconstruct", name, f"{value} is outside (0,1)")
    if cfg.refine is not None:
        r = cfg.refine
        if not r.eps or not r.R:
            _fail(lines, "refine", "eps", "schedules must not be empty")
        if not 0.0 <= r.window_inner < r.window_outer:
            _fail(lines, "refine", "window_outer", "needs 0 <= window_inner < window_outer")
    if cfg.energy is not None and cfg.energy.count < 1:
        _fail(lines, "energy", "count", "must be positive")


def _check_divisor(
    lines: Dict[Tuple[str, str], int], section: str, vortices: Tuple[Vortex, ...], minimum: int
) -> None:
    try:
        VortexDivisor.from_pairs(vortices).require_min_multiplicity(minimum)
    except ConfigurationError as e:
        _fail(lines, section, "vortex", str(e))


def parse_config(text: str) -> RunConfig:
    """
    Parses and validates a configuration text.

    Raises:
        ConfigurationError: on a syntax error, an unknown section or key, a repeated key, an
            unparsable value or an out-of-range value; the message names the line and the key.
    """
    values: Dict[str, Dict[str, Any]] = {}
    lines: Dict[Tuple[str, str], int] = {}
    section: Optional[str] = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ConfigurationError(f"line {lineno}: malformed section header '{line}'")
            section = line[1:-1].strip()
            if section not in _SECTIONS:
                raise ConfigurationError(f"line {lineno}: unknown section [{section}]")
            values.setdefault(section, {})
            continue
        key, sep, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not sep or not key:
            raise ConfigurationError(f"line {lineno}: expected 'key = value', got '{line}'")
        if section is None:
            raise ConfigurationError(f"line {lineno}: key '{key}' appears before any section")
        known = _key_names(_SECTIONS[section])
        if key not in known:
            raise ConfigurationError(f"line {lineno}: unknown key '{key}' in [{section}]")
        spec = known[key]
        try:
            parsed = spec.metadata["parse"](value)
        except ValueError as e:
            raise ConfigurationError(
                f"line {lineno}: [{section}] {key}: cannot parse '{value}' ({e})"
            ) from e
        if spec.metadata["repeat"]:
            values[section].setdefault(spec.name, []).append(parsed)
        elif spec.name in values[section]:
            raise ConfigurationError(f"line {lineno}: [{section}] {key} is set twice")
        else:
            values[section][spec.name] = parsed
        lines[(section, key)] = lineno

    sections: Dict[str, Any] = {}
    for name, kwargs in values.items():
        kwargs = {k: tuple(v) if isinstance(v, list) else v for k, v in kwargs.items()}
        sections[name] = _SECTIONS[name](**kwargs)
    cfg = RunConfig(**sections)
    _validate(cfg, lines)
    return cfg


def render_config(cfg: RunConfig) -> str:
    """Writes ``cfg`` in the text format; :func:`parse_config` reads it back to an equal config."""
    out: List[str] = []
    for name in _SECTIONS:
        section = getattr(cfg, name)
        if section is None:
            continue
        out.append(f"[{name}]")
        for f in fields(section):
            key = f.metadata.get("alias") or f.name
            value = getattr(section, f.name)
            if f.metadata["repeat"]:
                for point, multiplicity in value:
                    out.append(f"{key} = {_format_complex(point)} : {multiplicity}")
            else:
                out.append(f"{key} = {_format_value(value)}")
        out.append("")
    return "\n".join(out)


def load_config(path: str) -> RunConfig:
    """Reads and parses a configuration file from any fsspec path."""
    with fs_open(path, "r") as f:
        text = f.read()
    logger.info(f"Loaded configuration from {path}")
    return parse_config(text)
