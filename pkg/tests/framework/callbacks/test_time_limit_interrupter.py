#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest
from datetime import datetime, timedelta
from unittest.mock import MagicMock, Mock, patch

import torchvortex.framework.callbacks.time_limit_interrupter as time_limit_interrupter
from torchvortex.framework._test_utils import get_dummy_state, HalvingUnit
from torchvortex.framework.callbacks.time_limit_interrupter import parse_duration, TimeLimitInterrupter
from torchvortex.framework.solve import solve


class TimeLimitInterrupterTest(unittest.TestCase):
    def test_str_to_timedelta_conversion(self) -> None:
        tli = TimeLimitInterrupter(duration="02:10:20")
        self.assertEqual(tli._duration, timedelta(days=2, hours=10, minutes=20).total_seconds())

        for bad in ("2:10:20", "02:24:20", "02:23:60"):
            with self.assertRaisesRegex(ValueError, "Invalid duration format"):
                TimeLimitInterrupter(duration=bad)

    def test_parse_duration_passthrough(self) -> None:
        self.assertEqual(parse_duration(timedelta(minutes=5)), timedelta(minutes=5))

    def test_invalid_arguments(self) -> None:
        with self.assertRaisesRegex(ValueError, "at least one of duration or timestamp"):
            TimeLimitInterrupter()
        with self.assertRaisesRegex(ValueError, "timezone aware"):
            TimeLimitInterrupter(timestamp=datetime(2024, 1, 1))

    @patch("time.monotonic")
    def test_should_stop(self, mock_time_monotonic: MagicMock) -> None:
        for duration in ("00:00:42", timedelta(minutes=42)):
            tli = TimeLimitInterrupter(duration=duration)
            state = get_dummy_state()

            mock_time_monotonic.return_value = 0
            tli.on_solve_start(state, Mock())

            mock_time_monotonic.return_value = 41 * 60
            tli._check(state)
            self.assertFalse(state.should_stop)

            mock_time_monotonic.return_value = 42 * 60
            tli._check(state)
            self.assertTrue(state.should_stop)

    @patch(f"{time_limit_interrupter.__name__}.datetime", wraps=datetime)
    def test_should_stop_with_timestamp_limit(self, mock_datetime: MagicMock) -> None:
        deadline = datetime(2024, 3, 12, 15, 25, 0).astimezone()
        tli = TimeLimitInterrupter(timestamp=deadline)
        state = get_dummy_state()
        tli.on_solve_start(state, Mock())

        mock_datetime.now.return_value = deadline - timedelta(seconds=1)
        tli._check(state)
        self.assertFalse(state.should_stop)

        mock_datetime.now.return_value = deadline
        tli._check(state)
        self.assertTrue(state.should_stop)

    @patch("time.monotonic")
    def test_interval_stage(self, mock_time_monotonic: MagicMock) -> None:
        """With interval 'stage' steps are never checked."""
        mock_time_monotonic.return_value = 0
        tli = TimeLimitInterrupter(duration="00:00:01", interval="stage")
        unit = HalvingUnit()
        state = get_dummy_state()
        tli.on_solve_start(state, unit)
        mock_time_monotonic.return_value = 3600
        tli.on_step_end(state, unit)
        self.assertFalse(state.should_stop)
        unit.solve_progress.increment_stage()
        tli.on_stage_end(state, unit)
        self.assertTrue(state.should_stop)

    @patch("time.monotonic")
    def test_stops_solve(self, mock_time_monotonic: MagicMock) -> None:
        """An exhausted budget ends the solve loop after the current step."""
        mock_time_monotonic.return_value = 0
        unit = HalvingUnit()
        tli = TimeLimitInterrupter(duration="00:00:01")
        original = unit.solve_step

        def slow_step(state, stage):  # pyre-ignore[2,3]
            mock_time_monotonic.return_value += 30
            return original(state, stage)

        unit.solve_step = slow_step
        state = solve(unit, [1e-12], callbacks=[tli])
        self.assertTrue(state.should_stop)
        self.assertEqual(unit.solve_progress.num_steps_completed, 2)
