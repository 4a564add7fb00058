#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import io
import logging
from typing import Optional, TextIO, Union

from tqdm.auto import tqdm

logger: logging.Logger = logging.getLogger(__name__)


def create_progress_bar(
    *,
    desc: str,
    num_stages_completed: int,
    max_steps_per_stage: Optional[int],
    file: Optional[Union[TextIO, io.StringIO]] = None,
) -> tqdm:
    """Constructs a :func:`tqdm` progress bar for one continuation stage.

    Args:
        desc: a description for the progress bar.
        num_stages_completed: number of stages finished so far; shown in the description.
        max_steps_per_stage: iteration cap of a stage, used as the bar total when given.
        file: where to write the bar (default: sys.stderr).
    """
    return tqdm(
        desc=f"{desc} {num_stages_completed}",
        total=max_steps_per_stage,
        bar_format="{l_bar}{bar}{r_bar}\n",
        file=file,
    )


def update_progress_bar(
    progress_bar: tqdm, num_steps_completed: int, refresh_rate: int, postfix: str = ""
) -> None:
    """Advances the bar every ``refresh_rate`` steps."""
    if num_steps_completed % refresh_rate == 0:
        if postfix:
            progress_bar.set_postfix_str(postfix, refresh=False)
        progress_bar.update(refresh_rate)


def close_progress_bar(progress_bar: tqdm, num_steps_completed: int, refresh_rate: int) -> None:
    """Accounts for the steps since the last refresh and closes the bar."""
    progress_bar.update(num_steps_completed % refresh_rate)
    progress_bar.close()
