#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_oracle
-----------

Tests for `exdom.oracle` module.
"""

import unittest

import numpy as np

from exdom.errors import ConfigurationError
from exdom.model import ModelParams
from exdom.oracle import (
    Case1Profile,
    characteristic_oracle,
    exact_alpha_case1,
    exact_radius_case1,
    initial_profile,
    plateau_profile,
)


class Test_Profiles(unittest.TestCase):
    def test_values_at_origin(self):
        self.assertAlmostEqual(float(initial_profile('i', 0.0)), 0.51)
        self.assertAlmostEqual(float(initial_profile('ii', 0.0)), 0.01)
        self.assertAlmostEqual(float(initial_profile('iii', 0.5)), 0.5)

    def test_support(self):
        for kind in Case1Profile:
            np.testing.assert_array_equal(
                initial_profile(kind, [-0.5, 1.5, 40.0]), 0.0)

    def test_unknown_profile(self):
        self.assertRaises(ConfigurationError,
                          Case1Profile.parse,
                          'iv')

    def test_plateau(self):
        profile = plateau_profile(0.8, 1.0)
        np.testing.assert_array_equal(profile([0.0, 0.5, 1.0, 1.01]),
                                      [0.8, 0.8, 0.8, 0.0])


class Test_ExactSolution(unittest.TestCase):
    def setUp(self):
        self.p = ModelParams()
        self.x = np.linspace(0.0, 6.0, 121)

    def test_initial_time(self):
        for kind in Case1Profile:
            np.testing.assert_allclose(
                exact_alpha_case1(0.0, self.x, kind),
                initial_profile(kind, self.x),
                rtol=0, atol=1e-15)

    def test_outside_support(self):
        self.assertEqual(float(exact_alpha_case1(2.0, 0.5, 'i')), 0.0)
        self.assertEqual(float(exact_alpha_case1(2.0, 3.5, 'i')), 0.0)

    def test_long_time_limit(self):
        self.assertAlmostEqual(float(exact_alpha_case1(50.0, 50.5, 'i')),
                               10.0 / 11.0, places=9)

    def test_radius(self):
        self.assertEqual(float(exact_radius_case1(5.0)), 6.0)

    def test_negative_time(self):
        self.assertRaises(ConfigurationError,
                          exact_alpha_case1,
                          -1.0,
                          0.5,
                          'i')

    def test_range(self):
        t, x = np.meshgrid(np.linspace(0.0, 5.0, 51), self.x)
        for kind in Case1Profile:
            values = exact_alpha_case1(t, x, kind)
            self.assertGreaterEqual(float(np.min(values)), 0.0)
            self.assertLessEqual(float(np.max(values)),
                                 1.0 - self.p.c2 + 1e-12)


class Test_CharacteristicOracle(unittest.TestCase):
    def test_agrees_with_closed_form(self):
        t, x = np.meshgrid(np.linspace(0.0, 5.0, 100),
                           np.linspace(0.0, 6.0, 100))
        for kind in Case1Profile:
            np.testing.assert_allclose(
                characteristic_oracle(t, x, kind),
                exact_alpha_case1(t, x, kind),
                rtol=0, atol=1e-8)

    def test_single_point(self):
        self.assertAlmostEqual(
            float(characteristic_oracle(5.0, 5.5, 'i', substeps=10000)),
            float(exact_alpha_case1(5.0, 5.5, 'i')),
            places=10)

    def test_bad_substeps(self):
        self.assertRaises(ConfigurationError,
                          characteristic_oracle,
                          1.0,
                          1.0,
                          'i',
                          substeps=0)


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())

# vim: set ts=4 sw=4 tw=0 et :
