# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from .config import load_config, parse_config, render_config, RunConfig
from .export import export_csv, export_pgm
from .field_io import decode_field, encode_field, FieldKind, read_field, write_field
from .pipeline import COMMANDS, run_pipeline
from .report import load_report, strip_volatile, summarize_reports, write_report

__all__ = [
    "load_config",
    "parse_config",
    "render_config",
    "RunConfig",
    "export_csv",
    "export_pgm",
    "decode_field",
    "encode_field",
    "FieldKind",
    "read_field",
    "write_field",
    "COMMANDS",
    "run_pipeline",
    "load_report",
    "strip_volatile",
    "summarize_reports",
    "write_report",
]
