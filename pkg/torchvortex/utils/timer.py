#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import logging
from collections import defaultdict
from contextlib import contextmanager
from time import perf_counter
from typing import Any, Dict, Generator, List, Protocol, runtime_checkable, Sequence

import numpy as np
from tabulate import tabulate

logger: logging.Logger = logging.getLogger(__name__)


@contextmanager
def log_elapsed_time(action_name: str) -> Generator[None, None, None]:
    """Measures and logs the wall-clock time of the enclosed block.

    Args:
        action_name: the name of the event being timed.
    """
    start_time: float = perf_counter()
    try:
        yield
    finally:
        logger.info(f"{action_name} took {perf_counter() - start_time:.4f} seconds")


@runtime_checkable
class TimerProtocol(Protocol):
    """
    A timer with a ``time`` context manager, a ``reset`` method and a ``recorded_durations``
    mapping from action name to the list of measured durations in seconds.
    """

    recorded_durations: Dict[str, List[float]]

    @contextmanager
    def time(self, action_name: str) -> Generator[None, None, None]:
        """
        Times the enclosed block.

        Args:
            action_name: the name under which to store the timing.
        """
        ...

    def reset(self) -> None:
        ...


class Timer(TimerProtocol):
    """
    Stores wall-clock timings of named actions in ``recorded_durations``.

    Args:
        verbose: log every measured duration at info level.
    """

    def __init__(self, *, verbose: bool = False) -> None:
        self.verbose = verbose
        self.recorded_durations: Dict[str, List[float]] = defaultdict(list)

    @contextmanager
    def time(self, action_name: str) -> Generator[None, None, None]:
        start_time: float = perf_counter()
        try:
            yield
        finally:
            interval_time: float = perf_counter() - start_time
            if self.verbose:
                logger.info(f"{action_name} took {interval_time} seconds.")
            self.recorded_durations[action_name].append(interval_time)

    def reset(self) -> None:
        self.recorded_durations = defaultdict(list)

    def total(self, action_name: str) -> float:
        """Sum of the recorded durations of ``action_name``, 0 if it never ran."""
        return float(np.sum(self.recorded_durations.get(action_name, [])))


class BoundedTimer(Timer):
    """
    A :class:`Timer` that keeps a bounded number of samples per action.

    When an action reaches ``upper_bound`` samples only the ``lower_bound`` most recent ones are kept.
    """

    def __init__(self, lower_bound: int, upper_bound: int, **kwargs: Any) -> None:
        super().__init__(**kwargs)
        if not 0 < lower_bound < upper_bound:
            raise ValueError(
                f"Expected 0 < lower_bound < upper_bound, got {lower_bound} and {upper_bound}"
            )
        self.lower_bound = lower_bound
        self.upper_bound = upper_bound

    @contextmanager
    def time(self, action_name: str) -> Generator[None, None, None]:
        with super().time(action_name):
            yield
        samples = self.recorded_durations[action_name]
        if len(samples) >= self.upper_bound:
            self.recorded_durations[action_name] = samples[-self.lower_bound :]


def get_timer_summary(timer: TimerProtocol) -> str:
    """Tabulates mean duration, call count, total time and share of every recorded action.

    Args:
        timer: the timer to summarize.
    """
    if len(timer.recorded_durations) == 0:
        return "Timer Report\n"
    total_time = sum(float(np.sum(d)) for d in timer.recorded_durations.values())
    rows = [
        (
            action,
            float(np.mean(d)) if d else 0.0,
            len(d),
            float(np.sum(d)),
            100.0 * float(np.sum(d)) / total_time if total_time > 0 else 0.0,
        )
        for action, d in timer.recorded_durations.items()
    ]
    rows.sort(key=lambda row: row[4], reverse=True)
    rows.insert(0, ("Total", float("nan"), sum(r[2] for r in rows), total_time, 100.0))
    table = tabulate(
        rows,
        headers=["Action", "Mean duration (s)", "Num calls", "Total time (s)", "Percentage %"],
        tablefmt="pipe",
        floatfmt=".5g",
    )
    return f"Timer Report\n{table}\n"


def get_durations_histogram(
    recorded_durations: Dict[str, List[float]],
    percentiles: Sequence[float],
) -> Dict[str, Dict[str, float]]:
    """Percentiles and mean of every action's recorded durations.

    Args:
        recorded_durations: mapping of action name to durations.
        percentiles: percentiles in ``[0, 100]``.

    Raises:
        ValueError: If a percentile is outside ``[0, 100]``.
    """
    for p in percentiles:
        if p < 0 or p > 100:
            raise ValueError(f"Percentile must be between 0 and 100. Got {p}")
    percentiles = sorted(percentiles)
    ret: Dict[str, Dict[str, float]] = {}
    for name, timings in recorded_durations.items():
        if not timings:
            continue
        # snap to recorded values instead of interpolating
        values = np.percentile(timings, percentiles, method="lower")
        ret[name] = {f"p{p}": float(v) for p, v in zip(percentiles, values)}
        ret[name]["avg"] = float(np.mean(timings))
    return ret
