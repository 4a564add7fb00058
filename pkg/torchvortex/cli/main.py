#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
The ``torchvortex`` command.

Exit status: 0 success, 2 configuration or parameter error, 3 solver or geometry failure,
4 verification threshold exceeded.
"""

import argparse
import logging
from typing import List, Optional, Sequence

from torchvortex.cli.config import load_config, RunConfig
from torchvortex.cli.export import export_csv, export_pgm
from torchvortex.cli.field_io import read_field
from torchvortex.cli.pipeline import COMMANDS, FIELD_SUFFIX, run_pipeline
from torchvortex.cli.report import summarize_reports
from torchvortex.core.errors import (
    ConfigurationError,
    GeometryError,
    ParameterError,
    SolverError,
    VerificationError,
    VortexError,
)
from torchvortex.utils.fsspec import get_filesystem
from torchvortex.utils.timer import log_elapsed_time

logger: logging.Logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_SOLVER = 3
EXIT_VERIFY = 4


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torchvortex",
        description="Planar vortex solutions: explicit families, sinh-Gordon solves and verification.",
    )
    parser.add_argument("command", choices=COMMANDS + ("report",))
    parser.add_argument("--config", default=None, help="path of the text configuration")
    parser.add_argument("--out", default="out", help="output directory (any fsspec URL)")
    parser.add_argument("--grid", type=int, default=None, help="override [grid] n")
    parser.add_argument("--seed", type=int, default=None, help="override [run] seed")
    parser.add_argument("--progress", action="store_true", help="show solver progress bars")
    parser.add_argument("--tensorboard", action="store_true", help="log solver histories to TensorBoard")
    parser.add_argument("--log-level", default="INFO", choices=["DEBUG", "INFO", "WARNING", "ERROR"])
    return parser


def export_fields(out_dir: str) -> List[str]:
    """Writes a CSV and a PGM heatmap next to every field file in ``out_dir``."""
    fs = get_filesystem(out_dir)
    exported = []
    for path in sorted(fs.ls(out_dir, detail=False)):
        if not path.endswith(FIELD_SUFFIX):
            continue
        f = read_field(path)
        stem = path[: -len(FIELD_SUFFIX)]
        export_csv(f, f"{stem}.csv")
        export_pgm(f, f"{stem}.pgm")
        exported.append(stem)
    return exported


def _report(out_dir: str) -> int:
    if not get_filesystem(out_dir).exists(out_dir):
        logger.error(f"Output directory {out_dir} does not exist")
        return EXIT_CONFIG
    print(summarize_reports(out_dir), end="")
    exported = export_fields(out_dir)
    logger.info(f"Exported {len(exported)} fields as CSV and PGM")
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=getattr(logging, args.log_level),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    try:
        if args.command == "report":
            return _report(args.out)
        cfg = load_config(args.config) if args.config else RunConfig()
        cfg = cfg.with_overrides(n=args.grid, seed=args.seed)
        with log_elapsed_time(f"torchvortex {args.command}"):
            report = run_pipeline(
                cfg, args.command, args.out, progress=args.progress, tensorboard=args.tensorboard
            )
    except (ConfigurationError, ParameterError) as e:
        logger.error(f"Configuration error: {e}")
        return EXIT_CONFIG
    except VerificationError as e:
        logger.error(f"Verification failed: {e}")
        return EXIT_VERIFY
    except (SolverError, GeometryError) as e:
        logger.error(f"Solver failure: {e}")
        return EXIT_SOLVER
    except VortexError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_SOLVER
    logger.info(f"{args.command} finished with status {report['status']}; report in {args.out}")
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
