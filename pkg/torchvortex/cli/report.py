# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
JSON run reports.

Schema (version 1)::

    schema_version  int
    command         generate | solve | refine | verify | vekua | energy
    status          ok | failed
    config          the rendered configuration; parses back to the run's RunConfig
    grid            {"n", "extent", "h"}
    results         command specific, keyed by stage
    error           {"type", "message", "stage", "details"} when status is failed
    timing          seconds per stage
    created         UTC timestamp

Only ``timing`` and ``created`` vary between runs of the same configuration and seed.
"""

import json
import logging
import math
from dataclasses import asdict, is_dataclass
from enum import Enum
from typing import Any, Dict, List, Mapping

import numpy as np
import torch
from fsspec import open as fs_open
from tabulate import tabulate
from torchvortex.utils.fsspec import get_filesystem

logger: logging.Logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
REPORT_SUFFIX = "_report.json"
VOLATILE_KEYS = ("timing", "created")


def jsonable(obj: Any) -> Any:
    """
    Converts result objects into plain JSON values.

    Dataclasses and named tuples become objects, enums their lower-cased name, complex numbers
    ``[re, im]`` and non-finite floats ``null``.
    """
    if isinstance(obj, Enum):
        return obj.name.lower()
    if obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (float, np.floating)):
        return float(obj) if math.isfinite(obj) else None
    if isinstance(obj, complex):
        return [jsonable(obj.real), jsonable(obj.imag)]
    if isinstance(obj, torch.Tensor):
        return jsonable(obj.tolist())
    if isinstance(obj, np.ndarray):
        return jsonable(obj.tolist())
    if hasattr(obj, "_asdict"):
        return {k: jsonable(v) for k, v in obj._asdict().items()}
    if is_dataclass(obj) and not isinstance(obj, type):
        return {k: jsonable(v) for k, v in asdict(obj).items()}
    if isinstance(obj, Mapping):
        return {str(k): jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    raise TypeError(f"Cannot put a {type(obj).__name__} into a report")


def dumps_report(report: Mapping[str, Any]) -> str:
    return json.dumps(jsonable(report), indent=2, sort_keys=True, allow_nan=False) + "\n"


def write_report(report: Mapping[str, Any], path: str) -> None:
    with fs_open(path, "w") as f:
        f.write(dumps_report(report))
    logger.info(f"Wrote report to {path}")


def load_report(path: str) -> Dict[str, Any]:
    with fs_open(path, "r") as f:
        return json.load(f)


def strip_volatile(report: Mapping[str, Any]) -> Dict[str, Any]:
    """The report without its wall-clock fields."""
    return {k: v for k, v in report.items() if k not in VOLATILE_KEYS}


def _headline(report: Mapping[str, Any]) -> List[str]:
    """``key=value`` pairs of the top-level scalar results of every stage."""
    items = []
    for stage, result in sorted(report.get("results", {}).items()):
        if isinstance(result, Mapping):
            for key, value in sorted(result.items()):
                if isinstance(value, (int, float)) and not isinstance(value, bool):
                    items.append(f"{stage}.{key}={value:.4g}")
                elif isinstance(value, (bool, str)):
                    items.append(f"{stage}.{key}={value}")
        elif isinstance(result, (int, float, bool, str)):
            items.append(f"{stage}={result}")
    return items


def find_reports(out_dir: str) -> List[str]:
    fs = get_filesystem(out_dir)
    if not fs.exists(out_dir):
        return []
    return sorted(p for p in fs.ls(out_dir, detail=False) if p.endswith(REPORT_SUFFIX))


def summarize_reports(out_dir: str, max_items: int = 12) -> str:
    """
    Tabulates command, status, total wall-clock and headline results of every report in
    ``out_dir``.
    """
    rows = []
    for path in find_reports(out_dir):
        report = load_report(path)
        headline = _headline(report)
        if len(headline) > max_items:
            headline = headline[:max_items] + ["..."]
        rows.append(
            (
                report.get("command", "?"),
                report.get("status", "?"),
                sum(report.get("timing", {}).values()),
                "\n".join(headline),
            )
        )
    if not rows:
        return f"No reports in {out_dir}\n"
    table = tabulate(
        rows,
        headers=["Command", "Status", "Wall clock (s)", "Results"],
        tablefmt="grid",
        floatfmt=".3f",
    )
    return f"Run Reports\n{table}\n"
