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
from torchvortex.core.errors import GeometryError
from torchvortex.core.fields import Field
from torchvortex.core.grid import build_mask, GridSpec
from torchvortex.core.quadrature import area_integral, contour_normal_flux, interpolate


class AreaIntegralTest(unittest.TestCase):
    def test_disk_area(self) -> None:
        mask = build_mask(GridSpec(extent=1.2, n=241), 1.0)
        one = Field.constant(mask, 1.0)
        self.assertAlmostEqual(area_integral(one), math.pi, delta=2e-2)

    def test_complex_and_restricted(self) -> None:
        grid = GridSpec(extent=1.2, n=121)
        mask = build_mask(grid, 1.0)
        f = Field.constant(mask, 1j)
        value = area_integral(f)
        self.assertIsInstance(value, complex)
        self.assertAlmostEqual(value.real, 0.0)
        # integrating over a smaller disk
        small = build_mask(grid, 0.5)
        self.assertAlmostEqual(area_integral(f, small).imag, math.pi / 4, delta=2e-2)

    def test_odd_integrand_vanishes(self) -> None:
        mask = build_mask(GridSpec(extent=1.2, n=121), 0.99)
        x0 = Field.from_function(mask, lambda z: z.real**3)
        self.assertAlmostEqual(area_integral(x0), 0.0, places=10)


class InterpolateTest(unittest.TestCase):
    def setUp(self) -> None:
        self.grid = GridSpec(extent=1.0, n=21)
        self.mask = build_mask(self.grid, 0.9)
        self.points = torch.tensor([0.123 + 0.456j, -0.31 - 0.07j], dtype=torch.complex128)

    def test_exact_on_linear_fields(self) -> None:
        f = Field.from_function(self.mask, lambda z: 2 * z.real + 3 * z.imag - 1)
        out = interpolate(f, self.points)
        expected = 2 * self.points.real + 3 * self.points.imag - 1
        self.assertEqual(out.shape, (2,))
        self.assertLess((out - expected).abs().max().item(), 1e-12)

    def test_complex_field(self) -> None:
        f = Field.from_function(self.mask, lambda z: (1 + 2j) * z)
        out = interpolate(f, self.points)
        self.assertTrue(out.is_complex())
        self.assertLess((out - (1 + 2j) * self.points).abs().max().item(), 1e-12)

    def test_node_values(self) -> None:
        f = Field.from_function(self.mask, lambda z: z.real * z.imag)
        node = torch.tensor([self.grid.point(7, 13)], dtype=torch.complex128)
        self.assertAlmostEqual(interpolate(f, node).item(), f.values[7, 13].item(), places=12)

    def test_strict_uncovered(self) -> None:
        mask = build_mask(self.grid, 0.9, [(0.0, 0.3)])
        f = Field.constant(mask, 1.0)
        near_center = torch.tensor([0.01 + 0.01j], dtype=torch.complex128)
        with self.assertRaisesRegex(GeometryError, "not covered"):
            interpolate(f, near_center)
        # lenient mode treats missing nodes as zero
        self.assertLess(interpolate(f, near_center, strict=False).item(), 1.0)


class ContourFluxTest(unittest.TestCase):
    def setUp(self) -> None:
        self.mask = build_mask(GridSpec(extent=2.0, n=201), 1.8, [(0.0, 0.2)])
        self.log_modulus = Field.from_function(self.mask, lambda z: torch.log(z.abs()))

    def test_log_modulus_flux(self) -> None:
        flux = contour_normal_flux(self.log_modulus, 0.0, 1.0)
        self.assertAlmostEqual(flux, 2 * math.pi, delta=5e-2)

    def test_harmonic_without_singularity(self) -> None:
        flux = contour_normal_flux(self.log_modulus, 1.0 + 0.0j, 0.5)
        self.assertAlmostEqual(flux, 0.0, delta=3e-2)

    def test_invalid(self) -> None:
        with self.assertRaisesRegex(GeometryError, "real field"):
            contour_normal_flux(self.log_modulus.as_complex(), 0.0, 1.0)
        with self.assertRaisesRegex(GeometryError, "must exceed"):
            contour_normal_flux(self.log_modulus, 0.0, 0.01)
        with self.assertRaisesRegex(GeometryError, "exits the field's support"):
            contour_normal_flux(self.log_modulus, 0.0, 1.9)
