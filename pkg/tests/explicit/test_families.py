#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import math
import unittest

import torch
from parameterized import parameterized
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import GeometryError, ParameterError
from torchvortex.core.grid import build_mask, GridSpec
from torchvortex.explicit.families import (
    FamilyParams,
    generate_divisor_solution,
    generate_higgs_solution,
    generate_plane_wave,
    HiggsConnection,
)
from torchvortex.explicit.solution import SolutionFields
from torchvortex.gauge.residuals import residual_higgs, residual_maineq

_DIVISOR = VortexDivisor.from_pairs([(0, 1), (1, 2)])
_PARAMS = FamilyParams(c1=1.0, c2=0.5, theta=math.pi / 3, divisor=_DIVISOR)


def _divisor_solution(n: int) -> SolutionFields:
    mask = build_mask(GridSpec(4.0, n), 4.0)
    return generate_divisor_solution(mask, _PARAMS)


class DivisorFamilyTest(unittest.TestCase):
    def test_second_order_residual(self) -> None:
        """The stencil residual shrinks by about four when the grid spacing halves."""
        coarse = residual_maineq(_divisor_solution(129))
        s = _divisor_solution(257)
        fine = residual_maineq(s)
        ratio = max(coarse) / max(fine)
        self.assertGreaterEqual(ratio, 3.2)
        self.assertLessEqual(ratio, 4.8)
        scale = max(s.psi1.sup(s.mask.interior), s.psi2.sup(s.mask.interior))
        self.assertLessEqual(max(fine) / scale, 1e-2)
        # |psi1| = |psi2| and the connection is flat
        self.assertLess(fine.r3, 1e-9)

    def test_fields(self) -> None:
        s = _divisor_solution(129)
        self.assertTrue(s.connection_real)
        self.assertAlmostEqual(s.A0.sup(), 1.0)
        self.assertEqual(s.A1.sup(), 0.0)
        self.assertIsNone(s.higgs)
        # psi2 vanishes at the divisor nodes, psi1 is a rotated conjugate of the same polynomial
        i, j = s.mask.grid.index_of(1.0 + 0j)
        self.assertLess(abs(s.psi2.values[i, j].item()), 1e-12)
        a, b = s.mask.grid.index_of(0.5 + 0.5j)
        self.assertAlmostEqual(abs(s.psi1.values[a, b].item()), abs(s.psi2.values[a, b].item()))

    def test_empty_divisor_is_plane_wave(self) -> None:
        mask = build_mask(GridSpec(2.0, 33), 2.0)
        a = generate_divisor_solution(mask, FamilyParams(c1=1 + 1j, c2=0.25))
        b = generate_plane_wave(mask, 1 + 1j, 0.25)
        for x, y in zip((a.A0, a.A1, a.psi1, a.psi2), (b.A0, b.A1, b.psi1, b.psi2)):
            self.assertTrue(torch.allclose(x.filled(), y.filled(), atol=1e-14))

    def test_zero_amplitude(self) -> None:
        with self.assertRaisesRegex(ParameterError, "c1 must be nonzero"):
            FamilyParams(c1=0, c2=0.5)


class PlaneWaveTest(unittest.TestCase):
    def setUp(self) -> None:
        self.mask = build_mask(GridSpec(4.0, 129), 4.0)

    @parameterized.expand([(1,), (-1,)])
    def test_residual(self, sign: int) -> None:
        s = generate_plane_wave(self.mask, 2.0, 0.5, sign)  # pyre-ignore[6]
        self.assertLess(max(residual_maineq(s)), 2e-3)
        self.assertAlmostEqual(s.psi1.sup(), 2.0)

    def test_complex_frequency(self) -> None:
        s = generate_plane_wave(self.mask, 1.0, 0.5 + 0.1j)
        self.assertFalse(s.connection_real)

    def test_invalid(self) -> None:
        with self.assertRaisesRegex(ParameterError, "c1 must be nonzero"):
            generate_plane_wave(self.mask, 0.0, 0.5)
        with self.assertRaisesRegex(ParameterError, "sign must be"):
            generate_plane_wave(self.mask, 1.0, 0.5, 2)  # pyre-ignore[6]


class HiggsFamilyTest(unittest.TestCase):
    def setUp(self) -> None:
        self.mask = build_mask(GridSpec(4.0, 129), 4.0)
        self.c2 = 0.5
        self.c1 = math.sqrt(2.0) * self.c2 * complex(math.cos(0.3), math.sin(0.3))

    def test_consistent_connection(self) -> None:
        s = generate_higgs_solution(self.mask, self.c1, self.c2, HiggsConnection.CONSISTENT)
        self.assertTrue(s.connection_real)
        self.assertIsNotNone(s.higgs)
        self.assertLess(max(residual_higgs(s)), 2e-3)

    def test_literal_connection(self) -> None:
        """The literal coefficients leave one spinor equation off by c2 |psi2|."""
        s = generate_higgs_solution(self.mask, self.c1, self.c2)
        self.assertFalse(s.connection_real)
        r = residual_higgs(s)
        self.assertAlmostEqual(r.r3, self.c2 * abs(self.c1), delta=2e-3)
        self.assertLess(max(r.r1, r.r2, r.r4), 2e-3)

    def test_constraint(self) -> None:
        with self.assertRaisesRegex(ParameterError, "requires"):
            generate_higgs_solution(self.mask, 1.0, self.c2)
        with self.assertRaisesRegex(ParameterError, "must be real"):
            generate_higgs_solution(self.mask, self.c1, 0.5 + 0.1j)  # pyre-ignore[6]
        with self.assertRaisesRegex(ParameterError, "must be positive"):
            generate_higgs_solution(self.mask, self.c1, -0.5)

    def test_mixed_masks(self) -> None:
        s = generate_plane_wave(self.mask, 1.0, 0.5)
        other = build_mask(GridSpec(4.0, 129), 3.5)
        with self.assertRaisesRegex(GeometryError, "share one mask"):
            s.replace(psi1=generate_plane_wave(other, 1.0, 0.5).psi1)
