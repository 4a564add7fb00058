#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest
from pathlib import Path
from tempfile import TemporaryDirectory

from parameterized import parameterized
from torchvortex.cli.config import load_config, parse_config, render_config, RunConfig
from torchvortex.core.errors import ConfigurationError

SOLVE_CONFIG = """
# double vortex at the origin
[run]
seed = 7

[grid]
n = 257

[solve]
M = 0.25
R = 6
eps = 0.1
vortex = 0+0i : 2
"""


class ParseConfigTest(unittest.TestCase):
    def test_solve_section(self) -> None:
        cfg = parse_config(SOLVE_CONFIG)
        solve = cfg.solve
        assert solve is not None
        self.assertEqual(solve.M, 0.25)
        self.assertEqual(solve.R, 6.0)
        self.assertEqual(solve.vortices, ((0j, 2),))
        self.assertEqual(cfg.run.seed, 7)
        self.assertEqual(cfg.grid.n, 257)
        self.assertIsNone(cfg.family)
        self.assertEqual(solve.mode, "newton")

    def test_defaults(self) -> None:
        cfg = parse_config("")
        self.assertEqual(cfg, RunConfig())
        self.assertEqual(cfg.grid.n, 129)

    def test_repeated_vortex_and_complex_values(self) -> None:
        cfg = parse_config(
            "[family]\nkind = divisor\nc1 = 0.5-1i\nvortex = 1+0i : 1\nvortex = -1+0.5i : 2\n"
        )
        family = cfg.family
        assert family is not None
        self.assertEqual(family.c1, 0.5 - 1j)
        self.assertEqual(family.vortices, ((1 + 0j, 1), (-1 + 0.5j, 2)))

    def test_render_round_trip(self) -> None:
        text = SOLVE_CONFIG + "\n[refine]\neps = 0.2, 0.1\n[vekua]\nA = 1+0.5i\n[verify]\nenvelope = false\n"
        cfg = parse_config(text)
        self.assertEqual(parse_config(render_config(cfg)), cfg)

    @parameterized.expand(
        [
            ("[solve]\nM = 1.5\n[grid]\nn = 257\n", "line 2: \\[solve\\] M: 1.5 is outside \\(0,1\\)"),
            ("[solve]\nM = 0\n[grid]\nn = 257\n", "outside \\(0,1\\)"),
            ("[solve]\neps = 0.1\n", "below 2h"),
            ("[solve]\nvortex = 0+0i : 1\n[grid]\nn = 257\n", "at least 2 is required"),
            ("[grid]\nn = 3\n", "below the minimum 5"),
            ("[grid]\nsize = 3\n", "unknown key 'size'"),
            ("[nowhere]\n", "unknown section"),
            ("n = 3\n", "appears before any section"),
            ("[grid]\nn 3\n", "expected 'key = value'"),
            ("[grid]\nn = 3\nn = 5\n", "set twice"),
            ("[grid]\nn = many\n", "cannot parse 'many'"),
            ("[family]\nkind = spiral\n", "not one of divisor"),
            ("[family]\nvortex = 1+0i\n", "expected 'z : m'"),
            ("[run]\nseed = -1\n", "uint32"),
            ("[refine]\nwindow_inner = 4\nwindow_outer = 3\n", "window_inner < window_outer"),
            ("[verify]\nenvelope = maybe\n", "expected true or false"),
        ]
    )
    def test_invalid(self, text: str, message: str) -> None:
        with self.assertRaisesRegex(ConfigurationError, message):
            parse_config(text)

    def test_error_details_name_the_key(self) -> None:
        with self.assertRaises(ConfigurationError) as ctx:
            parse_config("[grid]\nn = 257\n[solve]\nM = 1.5\n")
        self.assertEqual(ctx.exception.details, {"section": "solve", "key": "M", "line": 4})


class OverridesTest(unittest.TestCase):
    def test_overrides(self) -> None:
        cfg = parse_config(SOLVE_CONFIG).with_overrides(n=513, seed=3)
        self.assertEqual(cfg.grid.n, 513)
        self.assertEqual(cfg.run.seed, 3)

    def test_override_is_validated(self) -> None:
        with self.assertRaisesRegex(ConfigurationError, "below 2h"):
            parse_config(SOLVE_CONFIG).with_overrides(n=65)

    def test_load_config(self) -> None:
        with TemporaryDirectory() as tmpdir:
            path = Path(tmpdir, "run.cfg").as_posix()
            with open(path, "w") as f:
                f.write(SOLVE_CONFIG)
            self.assertEqual(load_config(path), parse_config(SOLVE_CONFIG))
