#!/usr/bin/env python3
# Copyright (c) Meta Platforms, Inc. and affiliates.
# All rights reserved.
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

# pyre-strict

import unittest

from parameterized import parameterized
from torchvortex.core.divisor import VortexDivisor
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.grid import build_mask, GridSpec
from torchvortex.explicit.families import FamilyParams, generate_divisor_solution, generate_plane_wave
from torchvortex.gauge.decay_fit import EnvelopeVerdict, fit_decay_envelopes
from torchvortex.gauge.synthetic import envelope_pair


class FitDecayEnvelopesTest(unittest.TestCase):
    def setUp(self) -> None:
        self.mask = build_mask(GridSpec(6.0, 121), 6.0)
        self.wide = build_mask(GridSpec(12.0, 241), 12.0)

    def _annulus_max(self, psi: Field) -> float:
        z = self.wide.grid.z()
        where = self.wide.interior & (z.abs() >= 6.0)
        return float((psi.values[where].abs() ** 2).max().item())

    @parameterized.expand([(1.0,), (1.5,)])
    def test_planted_envelope(self, rate: float) -> None:
        psi1, psi2 = envelope_pair(self.wide, M=0.5, N=0.3, rate=rate, ratio=0.8)
        report = fit_decay_envelopes(psi1, psi2)
        self.assertAlmostEqual(report.second.rate, rate, delta=0.05)
        self.assertAlmostEqual(report.first.rate, rate, delta=0.05)
        self.assertAlmostEqual(report.second.M, 0.5, places=5)
        self.assertAlmostEqual(report.first.M, 0.32, places=5)
        self.assertLessEqual(report.phase_defect, 1e-12)
        self.assertEqual(report.verdict, EnvelopeVerdict.CONSISTENT)
        M1, M2, _, _, _, _, verdict = report.as_tuple()
        self.assertEqual((M1, M2), (report.first.M, report.second.M))
        self.assertEqual(verdict, EnvelopeVerdict.CONSISTENT)

    def test_limits_are_annulus_maxima(self) -> None:
        """The limits never fall below the observed moduli."""
        psi1, psi2 = envelope_pair(self.wide, M=0.5, N=0.3, rate=1.0, ratio=0.8)
        report = fit_decay_envelopes(psi1, psi2)
        self.assertEqual(report.first.M, self._annulus_max(psi1))
        self.assertEqual(report.second.M, self._annulus_max(psi2))
        self.assertEqual(report.second.floor, 1e-8 * report.second.M)

    def test_slow_decay_is_inconsistent(self) -> None:
        psi1, psi2 = envelope_pair(self.wide, M=0.5, N=0.3, rate=0.5)
        report = fit_decay_envelopes(psi1, psi2)
        self.assertLess(report.second.rate, 0.95)
        self.assertEqual(report.verdict, EnvelopeVerdict.INCONSISTENT)

    def test_opposite_phases_are_inconsistent(self) -> None:
        psi1, psi2 = envelope_pair(self.mask, ratio=-1.0)
        report = fit_decay_envelopes(psi1, psi2)
        self.assertAlmostEqual(report.phase_defect, 3.141592653589793, places=6)
        self.assertEqual(report.verdict, EnvelopeVerdict.INCONSISTENT)

    def test_explicit_families(self) -> None:
        plane = generate_plane_wave(self.mask, 0.5, 0.25)
        self.assertEqual(fit_decay_envelopes(plane.psi1, plane.psi2).verdict, EnvelopeVerdict.DEGENERATE)
        s = generate_divisor_solution(
            self.mask, FamilyParams(c1=0.5, c2=0.25, divisor=VortexDivisor.from_pairs([(0, 1)]))
        )
        self.assertEqual(fit_decay_envelopes(s.psi1, s.psi2).verdict, EnvelopeVerdict.INCONSISTENT)

    def test_small_disk(self) -> None:
        mask = build_mask(GridSpec(3.0, 61), 3.0)
        psi1, psi2 = envelope_pair(mask)
        with self.assertRaisesRegex(GeometryError, "radius at least 4.0"):
            fit_decay_envelopes(psi1, psi2)

    def test_empty_annulus(self) -> None:
        psi1, psi2 = envelope_pair(self.mask)
        with self.assertRaisesRegex(GeometryError, "annulus nodes available"):
            fit_decay_envelopes(psi1, psi2, region=self.mask.grid.z().abs() < 1.0)

    def test_invalid_envelope(self) -> None:
        with self.assertRaisesRegex(ValueError, "M > N >= 0"):
            envelope_pair(self.mask, M=0.2, N=0.3)
