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
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.fields import Field
from torchvortex.core.grid import build_mask, GridSpec
from torchvortex.explicit.divisor_map import divisor_of
from torchvortex.explicit.families import FamilyParams, generate_divisor_solution, generate_plane_wave
from torchvortex.gauge.energy import ymh_functional
from torchvortex.gauge.residuals import residual_maineq
from torchvortex.gauge.synthetic import compact_fields
from torchvortex.gauge.transform import gauge_gradient, gauge_transform, gauge_transform_matter


def _chi(z: torch.Tensor) -> torch.Tensor:
    return 0.1 * z.real * z.imag


def _wavy(z: torch.Tensor) -> torch.Tensor:
    return 0.5 * torch.sin(z.real) * z.imag


class GaugeGradientTest(unittest.TestCase):
    def setUp(self) -> None:
        self.mask = build_mask(GridSpec(2.0, 41), 2.0)

    def test_callable_is_exact_on_bilinear(self) -> None:
        d0, d1 = gauge_gradient(self.mask, _chi)
        x0, x1 = self.mask.grid.coordinates()
        active = self.mask.active
        self.assertTrue(torch.allclose(d0.values[active], 0.1 * x1[active], atol=1e-12))
        self.assertTrue(torch.allclose(d1.values[active], 0.1 * x0[active], atol=1e-12))
        self.assertTrue(bool((d0.support == active).all()))

    def test_field_loses_support(self) -> None:
        chi = Field.from_function(self.mask, _chi)
        d0, _ = gauge_gradient(self.mask, chi)
        self.assertLess(int(d0.support.sum()), int(self.mask.active.sum()))


class GaugeTransformTest(unittest.TestCase):
    def setUp(self) -> None:
        self.mask = build_mask(GridSpec(4.0, 129), 4.0)
        self.divisor = VortexDivisor.from_pairs([(0.5, 1), (-1 + 1j, 2)])
        self.s = generate_divisor_solution(
            self.mask, FamilyParams(c1=1.0, c2=0.5, divisor=self.divisor)
        )

    def test_modulus_is_invariant(self) -> None:
        t = gauge_transform(self.s, _wavy)
        for before, after in ((self.s.psi1, t.psi1), (self.s.psi2, t.psi2)):
            diff = (before.abs() - after.abs()).sup()
            self.assertLessEqual(diff, 1e-12 * max(1.0, before.sup()))

    def test_divisor_is_invariant(self) -> None:
        t = gauge_transform(self.s, _wavy)
        before = sorted(divisor_of(self.s), key=lambda e: e[0].real)
        after = sorted(divisor_of(t), key=lambda e: e[0].real)
        self.assertEqual([m for _, m in before], [m for _, m in after])
        for (p, _), (q, _) in zip(before, after):
            self.assertLessEqual(abs(p - q), 2 * self.mask.grid.h)

    def test_transformed_plane_wave_still_solves(self) -> None:
        s = generate_plane_wave(self.mask, 2.0, 0.5)
        t = gauge_transform(s, _chi)
        self.assertLess(max(residual_maineq(t)), 1e-2)
        self.assertIsNone(t.higgs)

    def test_inverse_gauge(self) -> None:
        t = gauge_transform(gauge_transform(self.s, _wavy), lambda z: -_wavy(z))
        for a, b in ((self.s.A0, t.A0), (self.s.A1, t.A1), (self.s.psi2, t.psi2)):
            self.assertLessEqual((a - b).sup(), 1e-10)


class EnergyGaugeInvarianceTest(unittest.TestCase):
    def _defect(self, n: int) -> float:
        mask = build_mask(GridSpec(3.0, n), 3.0)
        A0, A1, phi = compact_fields(mask, 11)
        B0, B1, psi = gauge_transform_matter(A0, A1, phi, _wavy)
        self.assertLessEqual((phi.abs() - psi.abs()).sup(), 1e-12)
        return abs(ymh_functional(A0, A1, phi) - ymh_functional(B0, B1, psi))

    def test_second_order_defect(self) -> None:
        coarse = self._defect(121)
        fine = self._defect(241)
        self.assertGreater(coarse, 0.0)
        ratio = coarse / fine
        self.assertGreaterEqual(ratio, 3.0)
        self.assertLessEqual(ratio, 5.0)
        self.assertFalse(math.isnan(ratio))
