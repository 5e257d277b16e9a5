#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_experiments
----------------

Tests for `exdom.experiments` module.
"""

import math
import os
import shutil
import tempfile
import unittest
import warnings

import numpy as np
import pandas as pd

from exdom.errors import (
    ConfigurationError,
    SimulationAborted,
)
from exdom.experiments import (
    ErrorReport,
    case1_windows,
    load_config,
    relative_difference,
    relative_radius_error,
    run_case1,
    run_case2,
    snapshot_name,
    sweep_thresholds,
    window_errors,
    write_csv,
)


def read_bytes(path):
    with open(path, 'rb') as f:
        return f.read()


class Test_Metrics(unittest.TestCase):
    def test_relative_radius_error(self):
        self.assertEqual(relative_radius_error(6.0, 6.0), 0.0)
        self.assertAlmostEqual(relative_radius_error(6.0, 5.99),
                               1.6667e-3, places=6)
        self.assertAlmostEqual(relative_radius_error(6.0, 5.98),
                               3.3333e-3, places=6)

    def test_relative_radius_error_bad_reference(self):
        self.assertRaises(ConfigurationError,
                          relative_radius_error,
                          0.0,
                          1.0)

    def test_relative_difference(self):
        self.assertAlmostEqual(relative_difference(10.5, 10.0), 0.05)

    def test_window_errors(self):
        linf, l1 = window_errors([1.0, 2.0, 3.0], [1.0, 1.5, 1.0], 0.1,
                                 [True, True, False])
        self.assertEqual(linf, 0.5)
        self.assertAlmostEqual(l1, 0.05)

    def test_empty_window(self):
        linf, l1 = window_errors([1.0], [0.0], 0.1, [False])
        self.assertTrue(math.isnan(linf))
        self.assertTrue(math.isnan(l1))

    def test_case1_windows(self):
        x = np.array([1.0, 4.9, 5.5, 5.9, 6.1])
        interior, front = case1_windows(x, 5.0, 6.0)
        np.testing.assert_array_equal(interior,
                                      [False, False, True, False, False])
        np.testing.assert_array_equal(front,
                                      [False, False, False, True, False])

    def test_report_rejects_negative(self):
        self.assertRaises(ValueError,
                          ErrorReport,
                          scheme='A',
                          method='M',
                          dx=0.02,
                          alpha_thr=0.004,
                          delta_ell=-1.0)


class Test_Output(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_empty_table_is_header_only(self):
        path = write_csv(pd.DataFrame(columns=['dx', '0.01']),
                         os.path.join(self.tmpdir, 'empty.csv'))
        self.assertEqual(read_bytes(path), b'dx,0.01\n')

    def test_single_cell_table(self):
        path = write_csv(pd.DataFrame([[0.02, 1.0 / 3.0]],
                                      columns=['dx', '0.004']),
                         os.path.join(self.tmpdir, 'one.csv'))
        self.assertEqual(read_bytes(path),
                         b'dx,0.004\n0.02,0.333333333\n')

    def test_snapshot_name(self):
        self.assertEqual(snapshot_name(0.0), 'snapshot_0.csv')
        self.assertEqual(snapshot_name(25.0), 'snapshot_25.csv')
        self.assertEqual(snapshot_name(0.5), 'snapshot_0.5.csv')


class Test_Case1(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_initial_radius(self):
        config = load_config(preset='case1_muscl.cfg', T=0.0)
        result = run_case1(config, out_dir=self.tmpdir)
        report = result.report('A')
        self.assertLessEqual(report.delta_ell, config.dx)
        for name in ('errors.csv', 'front_history.csv', 'snapshot_0.csv',
                     'diagnostics_A.csv', 'diagnostics_B.csv'):
            self.assertTrue(os.path.exists(os.path.join(self.tmpdir, name)))
        snapshot = pd.read_csv(os.path.join(self.tmpdir, 'snapshot_0.csv'))
        self.assertIn('alpha_exact', snapshot.columns)
        self.assertEqual(len(snapshot), config.grid().M)

    def test_upwind_unit_courant(self):
        config = load_config(preset='case1_upwind.cfg', dx=0.02, dt=0.02,
                             T=1.0)
        result = run_case1(config)
        report = result.report('A')
        self.assertAlmostEqual(report.ell_h, 2.0, places=9)
        self.assertLess(report.delta_ell, 1e-9)
        self.assertEqual(report.status, 'ok')
        self.assertAlmostEqual(result.report('B').ell_h, 2.0, places=9)

    def test_muscl_interior_beats_upwind(self):
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            muscl = run_case1(load_config(preset='case1_muscl.cfg'))
            upwind = run_case1(load_config(preset='case1_upwind.cfg'))
        linf_m = muscl.report('A').linf_interior
        linf_u = upwind.report('A').linf_interior
        self.assertLess(linf_m, linf_u)
        self.assertLess(linf_m, 0.05)
        # First order smearing of the rear jump reaches into the window.
        self.assertLess(linf_u, 0.2)

    def test_output_is_deterministic(self):
        config = load_config(preset='case1_muscl.cfg', T=0.1)
        first = os.path.join(self.tmpdir, 'first')
        second = os.path.join(self.tmpdir, 'second')
        run_case1(config, out_dir=first)
        run_case1(config, out_dir=second)
        for name in ('errors.csv', 'front_history.csv', 'snapshot_0.1.csv'):
            self.assertEqual(read_bytes(os.path.join(first, name)),
                             read_bytes(os.path.join(second, name)))


class Test_Sweep(unittest.TestCase):
    def test_single_cell_matches_run(self):
        config = load_config(preset='case1_muscl.cfg', T=0.5)
        table, cells = sweep_thresholds(config, [0.02], [0.004])
        self.assertEqual(list(table.columns), ['dx', '0.004'])
        self.assertEqual(table.shape, (1, 2))
        report = run_case1(config).report('A')
        self.assertEqual(table.loc[0, '0.004'], report.delta_ell)
        self.assertEqual(list(cells['status']), ['ok'])

    def test_failed_cell_is_nan(self):
        config = load_config(preset='case1_upwind.cfg', dt=0.02, T=0.1)
        with warnings.catch_warnings():
            warnings.simplefilter('ignore')
            table, cells = sweep_thresholds(config, [0.02, 0.01], [0.04])
        self.assertFalse(math.isnan(table.loc[0, '0.04']))
        self.assertTrue(math.isnan(table.loc[1, '0.04']))
        self.assertEqual(list(cells['status']), ['ok', 'cfl_violation'])

    def test_empty_sweep(self):
        self.assertRaises(ConfigurationError,
                          sweep_thresholds,
                          load_config(preset='case1_muscl.cfg'),
                          [],
                          [0.004])


class Test_SweepAnchors(unittest.TestCase):
    # (preset, dx, alpha_thr, published relative radius error)
    ANCHORS = (
        ('case1_sweep_muscl.cfg', 0.01, 0.004, 1.67e-3),
        ('case1_sweep_muscl.cfg', 0.02, 0.004, 1.33e-2),
        ('case1_sweep_muscl.cfg', 0.1, 0.004, 5.0e-2),
        ('case1_sweep_upwind.cfg', 0.01, 0.04, 3.33e-3),
        ('case1_sweep_upwind.cfg', 0.04, 0.02, 6.66e-3),
    )

    def test_anchors_within_two_cells(self):
        # Errors are multiples of dx / ell(T) with ell(T) = 6.
        for preset, dx, thr, published in self.ANCHORS:
            with self.subTest(preset=preset, dx=dx, alpha_thr=thr):
                config = load_config(preset=preset)
                table, cells = sweep_thresholds(config, [dx], [thr])
                self.assertEqual(list(cells['status']), ['ok'])
                lag = table.loc[0, f'{thr:g}'] * 6.0 / dx
                self.assertLessEqual(abs(lag - round(published * 6.0 / dx)),
                                     2.0 + 1e-6)


class Test_Case2(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def test_short_run(self):
        config = load_config(preset='case2_upwind.cfg', dx=0.05, T=0.1)
        result = run_case2(config, out_dir=self.tmpdir)
        for report in result.reports:
            self.assertGreaterEqual(report.scheme_diff, 0.0)
            self.assertTrue(math.isnan(report.linf_interior))
        for name in ('snapshot_0.csv', 'snapshot_0.1.csv', 'errors.csv'):
            self.assertTrue(os.path.exists(os.path.join(self.tmpdir, name)))

    def test_schemes_agree_and_converge(self):
        config = load_config(preset='case2_muscl.cfg', L=5.0, T=25.0)
        coarse = run_case2(config).report('A')
        fine = run_case2(config.replace(dx=0.005)).report('A')
        self.assertAlmostEqual(coarse.ell_ref, 3.958, delta=2e-3)
        self.assertLess(coarse.scheme_diff, 0.03)
        self.assertLess(fine.scheme_diff, coarse.scheme_diff)

    def test_lost_front_writes_status(self):
        config = load_config(preset='case2_upwind.cfg', alpha_thr=0.9)
        with self.assertRaises(SimulationAborted) as context:
            run_case2(config, out_dir=self.tmpdir)
        self.assertEqual(context.exception.exit_code, 7)
        errors = pd.read_csv(os.path.join(self.tmpdir, 'errors.csv'))
        self.assertEqual(list(errors['status']),
                         ['front_lost', 'front_lost'])


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())

# vim: set ts=4 sw=4 tw=0 et :
