# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

"""
The VORTX1 field file format.

Layout, all little-endian::

    magic       7 bytes   b"VORTX1\\n"
    version     uint32    1
    kind        uint8     0 real, 1 complex
    n           uint32    nodes per axis
    extent      float64   half width of the grid
    R           float64   outer radius of the mask
    punctures   uint32    count, followed by (re, im, eps) float64 triples
    payload     float64   n*n values in row-major order, complex interleaved as (re, im)

Nodes off the field's support hold a quiet NaN, so the mask and the support are recovered from the
file alone. Reading and writing round trip bit for bit.
"""

import logging
import struct
from enum import IntEnum

import numpy as np
import torch
from fsspec import open as fs_open
from torchvortex.core.errors import ConfigurationError
from torchvortex.core.fields import Field
from torchvortex.core.grid import build_mask, GridSpec

logger: logging.Logger = logging.getLogger(__name__)

MAGIC: bytes = b"VORTX1\n"
VERSION: int = 1
_HEADER = struct.Struct("<IBIddI")
_PUNCTURE = struct.Struct("<ddd")


class FieldKind(IntEnum):
    REAL = 0
    COMPLEX = 1


def encode_field(f: Field) -> bytes:
    mask = f.mask
    grid = mask.grid
    kind = FieldKind.COMPLEX if f.is_complex else FieldKind.REAL
    parts = [
        MAGIC,
        _HEADER.pack(VERSION, int(kind), grid.n, grid.extent, mask.radius, len(mask.punctures)),
    ]
    for p in mask.punctures:
        parts.append(_PUNCTURE.pack(p.center.real, p.center.imag, p.radius))
    values = f.values
    if f.is_complex:
        values = torch.view_as_real(values.contiguous())
    parts.append(np.ascontiguousarray(values.numpy(), dtype="<f8").tobytes())
    return b"".join(parts)


def decode_field(data: bytes) -> Field:
    """
    Raises:
        ConfigurationError: if the magic, the version or the payload length is wrong.
    """
    if not data.startswith(MAGIC):
        raise ConfigurationError("not a VORTX1 file")
    offset = len(MAGIC)
    if len(data) < offset + _HEADER.size:
        raise ConfigurationError("truncated VORTX1 header")
    version, kind, n, extent, radius, count = _HEADER.unpack_from(data, offset)
    if version != VERSION:
        raise ConfigurationError(f"unsupported VORTX1 version {version}")
    if kind not in (FieldKind.REAL, FieldKind.COMPLEX):
        raise ConfigurationError(f"unknown VORTX1 field kind {kind}")
    offset += _HEADER.size
    if len(data) < offset + count * _PUNCTURE.size:
        raise ConfigurationError("truncated VORTX1 puncture list")
    punctures = []
    for _ in range(count):
        re, im, eps = _PUNCTURE.unpack_from(data, offset)
        punctures.append((complex(re, im), eps))
        offset += _PUNCTURE.size
    width = 2 if kind == FieldKind.COMPLEX else 1
    expected = n * n * width * 8
    if len(data) - offset != expected:
        raise ConfigurationError(
            f"payload length {len(data) - offset} does not match the expected {expected} bytes"
        )
    payload = np.frombuffer(data, dtype="<f8", offset=offset).astype(np.float64)
    values = torch.from_numpy(payload.copy())
    if kind == FieldKind.COMPLEX:
        values = torch.view_as_complex(values.reshape(n, n, 2))
        support = ~(torch.isnan(values.real) | torch.isnan(values.imag))
    else:
        values = values.reshape(n, n)
        support = ~torch.isnan(values)
    mask = build_mask(GridSpec(extent, n), radius, punctures)
    return Field(mask=mask, values=values, support=support)


def write_field(f: Field, path: str) -> None:
    """Writes ``f`` to any fsspec path."""
    with fs_open(path, "wb") as out:
        out.write(encode_field(f))
    logger.debug(f"Wrote field to {path}")


def read_field(path: str) -> Field:
    """
    Reads a field written by :func:`write_field`.

    Raises:
        ConfigurationError: on a malformed file.
    """
    with fs_open(path, "rb") as src:
        data = src.read()
    try:
        return decode_field(data)
    except ConfigurationError as e:
        raise ConfigurationError(f"{path}: {e}", {"path": path}) from e
