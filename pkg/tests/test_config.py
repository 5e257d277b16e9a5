#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_config
-----------

Tests for run configuration (`exdom.schemes` and `exdom.experiments`).
"""

import os
import shutil
import tempfile
import textwrap
import unittest

from exdom.errors import (
    ConfigurationError,
    MissingParameter,
)
from exdom.experiments import (
    list_presets,
    load_config,
    load_sweep,
    preset_name,
)
from exdom.fem import OxygenMass
from exdom.oracle import Case1Profile
from exdom.schemes import (
    CASE2_SNAPSHOT_TIMES,
    Case,
    SimulationConfig,
    read_config,
)
from exdom.transport import TransportMethod


class Test_Presets(unittest.TestCase):
    def test_preset_names(self):
        self.assertEqual(preset_name('case1', 'M'), 'case1_muscl.cfg')
        self.assertEqual(preset_name('case2', 'u'), 'case2_upwind.cfg')
        self.assertEqual(preset_name('case1', 'U', sweep=True),
                         'case1_sweep_upwind.cfg')

    def test_all_presets_load(self):
        presets = list_presets()
        self.assertEqual(len(presets), 6)
        for name in presets:
            config = load_config(preset=name)
            self.assertIsInstance(config, SimulationConfig)

    def test_case2_preset(self):
        config = load_config(preset='case2_upwind.cfg')
        self.assertIs(config.case, Case.CASE2)
        self.assertIs(config.method, TransportMethod.U)
        self.assertEqual(config.L, 25.0)
        self.assertEqual(config.T, 228.0)
        self.assertEqual(config.snapshot_times, CASE2_SNAPSHOT_TIMES)
        self.assertEqual(config.grid().M, 2500)
        self.assertEqual(config.time_control().N, 22800)

    def test_unknown_preset(self):
        self.assertRaises(ConfigurationError,
                          load_config,
                          preset='case3_muscl.cfg')

    def test_sweep_lists(self):
        config, dx_list, thr_list = load_sweep(preset='case1_sweep_muscl.cfg')
        self.assertEqual(len(dx_list), 6)
        self.assertEqual(thr_list, [0.01, 0.008, 0.006, 0.004, 0.002])
        for dx in dx_list:
            config.replace(dx=dx).grid()


class Test_Overrides(unittest.TestCase):
    def setUp(self):
        self.tmpdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tmpdir)

    def write(self, name, text):
        path = os.path.join(self.tmpdir, name)
        with open(path, 'w') as f:
            f.write(textwrap.dedent(text))
        return path

    def test_precedence(self):
        path = self.write('user.cfg', """\
            [run]
            alpha_thr = 0.02
            profile = iii

            [oxygen]
            mass = lumped
            """)
        config = load_config(preset='case1_muscl.cfg', config_file=path,
                             dx=0.04, profile=None)
        self.assertEqual(config.alpha_thr, 0.02)
        self.assertIs(config.profile, Case1Profile.EXP_RATIO)
        self.assertIs(config.oxygen_mass, OxygenMass.LUMPED)
        self.assertEqual(config.dx, 0.04)
        self.assertEqual(config.dt, 0.01)

    def test_short_horizon_drops_late_snapshots(self):
        config = load_config(preset='case2_muscl.cfg', T=60.0)
        self.assertEqual(config.snapshot_times, (25.0, 50.0))

    def test_missing_config_file(self):
        self.assertRaises(ConfigurationError,
                          load_config,
                          preset='case1_muscl.cfg',
                          config_file=os.path.join(self.tmpdir, 'none.cfg'))

    def test_missing_stress_parameters(self):
        path = self.write('bare.cfg', """\
            [model]
            Q = 0.5

            [grid]
            L = 6
            """)
        self.assertRaises(MissingParameter,
                          SimulationConfig.from_parser,
                          read_config(path))

    def test_missing_model_section(self):
        path = self.write('nomodel.cfg', """\
            [grid]
            L = 6
            """)
        self.assertRaises(ConfigurationError,
                          load_config,
                          config_file=path)

    def test_bad_value(self):
        path = self.write('bad.cfg', """\
            [run]
            alpha_thr = lots
            """)
        self.assertRaises(ConfigurationError,
                          load_config,
                          preset='case1_muscl.cfg',
                          config_file=path)

    def test_snapshot_beyond_horizon(self):
        self.assertRaises(ConfigurationError,
                          SimulationConfig,
                          T=1.0,
                          snapshot_times=(2.0,))

    def test_snapshot_steps(self):
        config = SimulationConfig(T=1.0, dt=0.01, snapshot_times=(0.5,))
        self.assertEqual(config.snapshot_steps(), [0, 50, 100])


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())

# vim: set ts=4 sw=4 tw=0 et :
