#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
test_extended
-------------

Tests for `exdom.schemes.extended` module.
"""

import unittest
import warnings

import numpy as np

from exdom.errors import (
    FrontAtDomainEnd,
    FrontLost,
    InadmissibleState,
    SimulationAborted,
)
from exdom.mesh import Grid
from exdom.model import (
    Bounds,
    ModelParams,
)
from exdom.oracle import (
    exact_radius_case1,
    plateau_profile,
)
from exdom.schemes import (
    Case,
    SimulationConfig,
)
from exdom.schemes.extended import (
    init_state,
    simulate_extended,
    step,
)
from exdom.transport import TransportMethod


def quiet(function, *args, **kwargs):
    """Call ``function`` with the domain-end warning silenced."""
    with warnings.catch_warnings():
        warnings.simplefilter('ignore')
        return function(*args, **kwargs)


class Test_InitState(unittest.TestCase):
    def setUp(self):
        self.p = ModelParams()
        self.grid = Grid.from_spacing(25.0, 0.01)

    def tearDown(self):
        pass

    def test_case2_plateau(self):
        state = init_state(plateau_profile(0.8, 1.0), self.grid, self.p,
                           alpha_thr=0.01)
        self.assertEqual(state.front.j_front, 100)
        self.assertAlmostEqual(state.ell, 1.0, places=12)
        self.assertEqual(state.u.values[0], 0.0)
        self.assertEqual(state.C.values[state.front.j_front], 1.0)
        self.assertEqual(state.violations(), [])

    def test_case1_is_pinned(self):
        state = init_state(plateau_profile(0.5, 1.0), self.grid, self.p,
                           alpha_thr=0.01, case=Case.CASE1)
        self.assertTrue(state.pinned)
        np.testing.assert_array_equal(state.u.values, 1.0)
        np.testing.assert_array_equal(state.C.values, 1.0)
        self.assertEqual(state.violations(), [])

    def test_zero_fraction_loses_front(self):
        self.assertRaises(FrontLost,
                          init_state,
                          lambda x: 0.0 * x,
                          self.grid,
                          self.p,
                          alpha_thr=0.01)

    def test_inadmissible(self):
        self.assertRaises(InadmissibleState,
                          init_state,
                          plateau_profile(0.995, 1.0),
                          self.grid,
                          self.p,
                          alpha_thr=0.01)


class Test_Step(unittest.TestCase):
    def setUp(self):
        self.p = ModelParams()
        self.grid = Grid.from_spacing(5.0, 0.05)

    def test_case2_invariants_and_mass(self):
        bounds = Bounds()
        for seed in (11, 12, 13):
            for method in TransportMethod:
                with self.subTest(seed=seed, method=method.value):
                    self._check_invariants(seed, method, bounds)

    def _check_invariants(self, seed, method, bounds):
        rng = np.random.default_rng(seed)
        values = np.where(self.grid.centres < 1.0,
                          rng.uniform(0.1, 0.6, self.grid.M), 0.0)
        state = init_state(values, self.grid, self.p, alpha_thr=0.01)
        for n in range(1, 501):
            mass = state.alpha.mass()
            state = step(state, 0.01, method, self.p,
                         alpha_thr=0.01, index=n)
            d = state.last_step
            self.assertEqual(state.violations(bounds), [])
            self.assertLess(abs(d.mass_residual), 1e-12)
            self.assertAlmostEqual(
                d.mass,
                mass + d.source - d.boundary_outflow - d.truncation_loss,
                delta=1e-12)
        self.assertAlmostEqual(state.t, 5.0, places=12)

    def test_case1_upwind_unit_courant(self):
        # u = 1 and dt = h shift the front exactly one cell per step.
        state = init_state(plateau_profile(0.5, 1.0), self.grid, self.p,
                           alpha_thr=0.04, case=Case.CASE1)
        for n in range(1, 21):
            state = step(state, 0.05, TransportMethod.U, self.p,
                         alpha_thr=0.04, index=n)
            self.assertAlmostEqual(state.ell,
                                   float(exact_radius_case1(state.t)),
                                   places=9)
            self.assertEqual(state.violations(), [])


class Test_Simulate(unittest.TestCase):
    def test_zero_horizon(self):
        config = SimulationConfig(T=0.0)
        trajectory = simulate_extended(config)
        self.assertEqual(len(trajectory.snapshots), 1)
        self.assertEqual(trajectory.times, [0.0])
        self.assertEqual(trajectory.summary()['steps'], 0)

    def test_case1_upwind_front_tracks_exact(self):
        config = SimulationConfig(method='U', dx=0.02, dt=0.02, T=1.0,
                                  alpha_thr=0.04)
        trajectory = simulate_extended(config)
        frame = trajectory.front_frame()
        np.testing.assert_allclose(frame['ell_h'], 1.0 + frame['t'],
                                   rtol=0, atol=1e-9)
        self.assertEqual(trajectory.summary()['steps'], 50)

    def test_case1_muscl_unit_courant(self):
        config = SimulationConfig(method='M', L=6.0, dx=0.01, dt=0.01,
                                  T=2.0, alpha_thr=0.004)
        trajectory = simulate_extended(config)
        frame = trajectory.front_frame()
        np.testing.assert_allclose(frame['ell_h'], 1.0 + frame['t'],
                                   rtol=0, atol=1e-9)
        final = trajectory.final
        self.assertEqual(final.violations(), [])
        self.assertLessEqual(float(np.max(final.alpha.values)), 1.0)

    def test_case1_muscl_reaches_domain_end(self):
        config = SimulationConfig()
        trajectory = quiet(simulate_extended, config)
        grid = config.grid()
        self.assertLessEqual(abs(trajectory.final.ell - 6.0), 2.0 * grid.h)
        for state in trajectory.snapshots:
            self.assertEqual(state.violations(), [])

    def test_domain_end_warning(self):
        config = SimulationConfig(method='U', L=1.5, dx=0.02, dt=0.02,
                                  T=1.0, alpha_thr=0.04)
        with self.assertWarns(FrontAtDomainEnd):
            trajectory = simulate_extended(config)
        self.assertTrue(trajectory.front_at_domain_end)

    def test_snapshot_times(self):
        config = SimulationConfig(method='U', dx=0.02, dt=0.02, T=1.0,
                                  alpha_thr=0.04,
                                  snapshot_times=(0.5, 0.2))
        trajectory = simulate_extended(config)
        np.testing.assert_allclose(trajectory.times, [0.0, 0.2, 0.5, 1.0],
                                   rtol=0, atol=1e-12)
        self.assertEqual(len(trajectory.snapshots), 4)
        self.assertAlmostEqual(trajectory.snapshot_at(0.5).ell, 1.5,
                               places=9)

    def test_cfl_violation_aborts(self):
        config = SimulationConfig(method='U', dx=0.02, dt=0.05, T=0.1)
        with self.assertRaises(SimulationAborted) as context:
            simulate_extended(config)
        self.assertEqual(context.exception.step, 1)
        self.assertEqual(context.exception.category, 'cfl_violation')
        self.assertEqual(context.exception.exit_code, 3)


if __name__ == '__main__':
    import sys
    sys.exit(unittest.main())

# vim: set ts=4 sw=4 tw=0 et :
