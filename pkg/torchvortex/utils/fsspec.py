# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

from typing import Any

import fsspec
from fsspec.core import url_to_fs


def get_filesystem(path: str, **kwargs: Any) -> fsspec.AbstractFileSystem:
    """Returns the filesystem that serves ``path`` (local paths and any fsspec URL)."""
    fs, _ = url_to_fs(path, **kwargs)
    return fs


def ensure_dir(path: str) -> None:
    """Creates the directory ``path`` and its parents if missing."""
    get_filesystem(path).makedirs(path, exist_ok=True)


def join(base: str, name: str) -> str:
    return base.rstrip("/") + "/" + name
