# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""Plain-text exports of fields for external tools: CSV tables and PGM heatmaps."""

import csv
import io
import logging

import numpy as np
from fsspec import open as fs_open
from torchvortex.core.fields import Field

logger: logging.Logger = logging.getLogger(__name__)


def _plane(f: Field) -> np.ndarray:
    values = f.values
    return (values.abs() if f.is_complex else values).numpy()


def export_csv(f: Field, path: str) -> None:
    """
    One row per supported node: ``x0, x1, value`` for real fields and ``x0, x1, re, im`` for complex.
    """
    x0, x1 = f.mask.grid.coordinates()
    where = f.support
    buffer = io.StringIO()
    writer = csv.writer(buffer)
    if f.is_complex:
        writer.writerow(["x0", "x1", "re", "im"])
        vals = f.values[where]
        rows = zip(x0[where].tolist(), x1[where].tolist(), vals.real.tolist(), vals.imag.tolist())
    else:
        writer.writerow(["x0", "x1", "value"])
        rows = zip(x0[where].tolist(), x1[where].tolist(), f.values[where].tolist())
    writer.writerows(rows)
    with fs_open(path, "w") as out:
        out.write(buffer.getvalue())


def export_pgm(f: Field, path: str) -> None:
    """
    Binary PGM heatmap of the field (the modulus for complex fields), scaled to 0..255 over the
    support. Off-support nodes are black; rows run along ``x1`` from top to bottom.
    """
    plane = _plane(f)
    finite = np.isfinite(plane)
    image = np.zeros(plane.shape, dtype=np.uint8)
    if finite.any():
        lo, hi = float(plane[finite].min()), float(plane[finite].max())
        span = hi - lo if hi > lo else 1.0
        image[finite] = np.round(255.0 * (plane[finite] - lo) / span).astype(np.uint8)
    # image rows are x1 from high to low, columns x0
    image = np.flipud(image.T)
    n_rows, n_cols = image.shape
    with fs_open(path, "wb") as out:
        out.write(f"P5\n{n_cols} {n_rows}\n255\n".encode("ascii"))
        out.write(np.ascontiguousarray(image).tobytes())
    logger.debug(f"Wrote heatmap to {path}")
