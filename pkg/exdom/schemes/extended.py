# -*- coding: utf-8 -*-

"""
Scheme A: the extended-domain algorithm.

Every step recovers the front from the volume fraction, solves the
velocity and oxygen problems by finite elements on (0, ell_h), extends
them to (0, L) with u = 0 and C = 1, transports the volume fraction over
the whole fixed grid and truncates it at the re-recovered front. The
grid never moves.
"""

import logging

import numpy as np

from exdom.errors import (
    ExdomError,
    InadmissibleState,
    SimulationAborted,
)
from exdom.fem import (
    OxygenMass,
    OxygenTimeScheme,
    TruncatedMesh,
    advance_oxygen,
    solve_velocity,
)
from exdom.front import (
    extend_outer_fields,
    recover_front,
    truncate_alpha,
    truncation_loss,
)
from exdom.mesh import (
    CellField,
    NodalField,
    nodal_average,
)
from exdom.model import Bounds
from exdom.schemes import (
    Case,
    SimulationState,
    StepDiagnostics,
    Trajectory,
)
from exdom.transport import (
    Limiter,
    advance_alpha_with_budget,
    cfl_number,
)

SCHEME_NAME = 'A'

logger = logging.getLogger(__name__)


def _sample(ic, grid):
    if callable(ic):
        return np.asarray(ic(grid.centres), dtype=float)
    values = np.asarray(ic, dtype=float)
    if values.shape != (grid.M,):
        raise InadmissibleState(
            f'initial volume fraction needs {grid.M} cell values '
            f'(got shape {values.shape})')
    return values


def _check_admissible(values, bounds):
    support = values[values > 0.0]
    if np.any(values < 0.0) or not np.all(np.isfinite(values)):
        raise InadmissibleState('initial volume fraction must be finite '
                                'and non-negative')
    if support.size and not bounds.contains(support):
        raise InadmissibleState(
            f'initial volume fraction leaves [{bounds.m_alpha:g}, '
            f'{bounds.M_alpha:g}] on its support (range '
            f'{float(support.min()):.4g}..{float(support.max()):.4g})')


def _fem_fields(alpha, front, C_old, dt, p, oxygen_mass, oxygen_time_scheme):
    """Velocity and oxygen on (0, ell_h), extended to the whole grid."""
    grid = alpha.grid
    mesh = TruncatedMesh.from_front(grid, front)
    alpha_nodes = nodal_average(alpha.values[:front.j_front])
    u = solve_velocity(mesh, alpha_nodes, p)
    if dt is None:
        C = np.array(C_old[:mesh.n_nodes])
        C[-1] = 1.0
    else:
        C = advance_oxygen(mesh, C_old[:mesh.n_nodes], alpha_nodes, dt, p,
                           mass=oxygen_mass, time_scheme=oxygen_time_scheme)
    return extend_outer_fields(u, C, front, grid)


def _reextend(u, C, front):
    """Reapply u = 0, C = 1 right of a front that moved during transport."""
    u_values = np.array(u.values)
    C_values = np.array(C.values)
    u_values[front.j_front + 1:] = 0.0
    C_values[front.j_front + 1:] = 1.0
    return NodalField(u.grid, u_values), NodalField(C.grid, C_values)


def init_state(ic, grid, p, *, alpha_thr, case=Case.CASE2, C0=1.0,
               bounds=None):
    """Initial state of scheme A.

    ``ic`` is alpha_0 as a callable of x (sampled at the cell centres) or
    an array of cell values. Case 1 pins u = C = 1; otherwise the
    velocity is solved from alpha_0 and C starts at ``C0``.
    """
    case = Case.parse(case)
    bounds = Bounds() if bounds is None else bounds
    grid.check_contains(p.ell0)
    values = _sample(ic, grid)
    _check_admissible(values, bounds)
    alpha = CellField(grid, values)
    front = recover_front(alpha, alpha_thr)
    alpha = truncate_alpha(alpha, front)
    if case is Case.CASE1:
        return SimulationState(
            t=0.0, alpha=alpha,
            u=NodalField.constant(grid, 1.0),
            C=NodalField.constant(grid, 1.0),
            front=front, pinned=True)
    C_start = np.full(grid.M + 1, float(C0))
    u, C = _fem_fields(alpha, front, C_start, None, p, None, None)
    logger.debug(f'[+] scheme A initial front at x={front.ell_h:.6g} '
                 f'(node {front.j_front})')
    return SimulationState(t=0.0, alpha=alpha, u=u, C=C, front=front)


def step(state, dt, method, p, *, alpha_thr, limiter=Limiter.MINMOD,
         oxygen_mass=OxygenMass.CONSISTENT,
         oxygen_time_scheme=OxygenTimeScheme.IMPLICIT,
         index=None):
    """Advance scheme A by one time step of length ``dt``."""
    grid = state.grid
    front = recover_front(state.alpha, alpha_thr, warn=False)
    if state.pinned:
        u, C = state.u, state.C
    else:
        u, C = _fem_fields(state.alpha, front, state.C.values, dt, p,
                           oxygen_mass, oxygen_time_scheme)
    cfl = cfl_number(u, dt, grid.h)
    transported, budget = advance_alpha_with_budget(
        state.alpha, u, C, dt, method, p, limiter)
    new_front = recover_front(transported, alpha_thr, warn=False)
    loss = truncation_loss(transported, new_front)
    alpha = truncate_alpha(transported, new_front)
    if not state.pinned:
        u, C = _reextend(u, C, new_front)
    t = state.t + dt if index is None else index * dt
    diagnostics = StepDiagnostics(
        step=int(round(t / dt)) if index is None else int(index),
        t=t,
        ell_h=new_front.ell_h,
        cfl=cfl,
        mass=alpha.mass(),
        source=budget.source,
        boundary_outflow=budget.boundary_outflow,
        mass_residual=budget.residual,
        truncation_loss=loss,
    )
    return SimulationState(t=t, alpha=alpha, u=u, C=C, front=new_front,
                           pinned=state.pinned, last_step=diagnostics)


def simulate_extended(config):
    """Run scheme A over (0, T) and collect a :class:`Trajectory`."""
    grid = config.grid()
    tc = config.time_control()
    p = config.params
    trajectory = Trajectory(scheme=SCHEME_NAME, config=config)
    snapshot_steps = set(config.snapshot_steps())
    budget = config.truncation_budget * grid.h
    logger.info(f'[+] scheme A: {config.case.value} method '
                f'{config.method.value} on L={grid.L:g} with {grid.M} cells, '
                f'{tc.N} steps of dt={tc.dt:g}')
    try:
        state = init_state(config.initial_condition(), grid, p,
                           alpha_thr=config.alpha_thr, case=config.case,
                           C0=config.C0, bounds=config.bounds)
    except ExdomError as err:
        raise SimulationAborted(err, 0, 0.0) from err
    trajectory.record_snapshot(state)
    trajectory.record_front(state.t, state.ell)
    for n in range(1, tc.N + 1):
        try:
            state = step(state, tc.dt, config.method, p,
                         alpha_thr=config.alpha_thr,
                         limiter=config.limiter,
                         oxygen_mass=config.oxygen_mass,
                         oxygen_time_scheme=config.oxygen_time_scheme,
                         index=n)
        except ExdomError as err:
            raise SimulationAborted(err, n, state.t + tc.dt) from err
        diagnostics = state.last_step
        logger.debug(f'[+] A step {n}: ell_h={diagnostics.ell_h:.6g} '
                     f'cfl={diagnostics.cfl:.4g} '
                     f'loss={diagnostics.truncation_loss:.3g} '
                     f'residual={diagnostics.mass_residual:.3g}')
        trajectory.record_step(diagnostics)
        trajectory.record_front(state.t, state.ell)
        if diagnostics.truncation_loss > budget:
            trajectory.truncation_exceedances += 1
        if not trajectory.front_at_domain_end and \
                state.front.at_domain_end(grid):
            trajectory.front_at_domain_end = True
            # Warn once per run.
            recover_front(state.alpha, config.alpha_thr, warn=True)
        if n in snapshot_steps:
            trajectory.record_snapshot(state)
    summary = trajectory.summary()
    logger.info(f"[+] scheme A finished: ell_h={summary['final_ell']:.6g} "
                f"max CFL {summary['max_cfl']:.4g}, max mass residual "
                f"{summary['max_mass_residual']:.3g}")
    if trajectory.truncation_exceedances:
        logger.info(f'[!] truncation loss exceeded the per-step budget '
                    f'{budget:.3g} in {trajectory.truncation_exceedances} '
                    'steps')
    return trajectory


# vim: set ts=4 sw=4 tw=0 et :
