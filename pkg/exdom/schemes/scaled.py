# -*- coding: utf-8 -*-

"""
Scheme B: the reference solver on the scaled domain xi = x / ell(t).

The tumour always occupies (0, 1) in xi, so the mesh moves with the
boundary. Transport works on the conserved content ell * alpha,

    (ell alpha)_t + ((u - xi ell') alpha)_xi = ell alpha f,

whose face speed u - xi ell' vanishes at xi = 1 because ell' = u(1).
The elliptic and parabolic problems are the physical ones on a mesh of
element width ell * dxi; the oxygen equation picks up the mesh
advection -xi ell' dC/dx. The radius follows ell' = u(1) by forward
Euler with ell' lagged at the start of the step.
"""

import logging
import math

import numpy as np

from exdom.errors import (
    ConfigurationError,
    ExdomError,
    InadmissibleState,
    NonFiniteState,
    RadiusCollapse,
    SimulationAborted,
)
from exdom.fem import (
    OxygenMass,
    OxygenTimeScheme,
    TruncatedMesh,
    advance_oxygen,
    solve_velocity,
)
from exdom.front import FrontEstimate
from exdom.mesh import (
    SPACING_RTOL,
    nodal_average,
)
from exdom.model import (
    Bounds,
    f_growth,
)
from exdom.schemes import (
    Case,
    ScaledState,
    SimulationState,
    StepDiagnostics,
    Trajectory,
)
from exdom.transport import (
    Limiter,
    TransportBudget,
    cfl_number,
    check_cfl,
    face_fluxes,
)

SCHEME_NAME = 'B'

logger = logging.getLogger(__name__)


def scaled_cells(dxi):
    """Number of cells of width ``dxi`` in (0, 1)."""
    if not 0.0 < dxi < 1.0:
        raise ConfigurationError(f'dxi must lie in (0, 1) (got {dxi})')
    cells = int(round(1.0 / dxi))
    if not math.isclose(cells * dxi, 1.0, rel_tol=SPACING_RTOL):
        raise ConfigurationError(
            f'dxi={dxi} does not divide (0, 1) into whole cells')
    return cells


def scaled_mesh(ell, cells):
    """The physical finite element mesh of the scaled domain."""
    if not ell > 0.0:
        raise RadiusCollapse(f'radius collapsed to ell={ell:.6g}')
    return TruncatedMesh(h=ell / cells, j_front=cells)


def scaled_transport(alpha, u, C, ell, ell_dot, dt, method, p,
                     limiter=Limiter.MINMOD, with_source=True):
    """One forward Euler step of the scaled volume fraction equation.

    Returns ``(alpha_new, ell_new, cfl, budget)``; the budget is in
    physical mass ell * dxi * sum(alpha).
    """
    alpha = np.asarray(alpha, dtype=float)
    cells = alpha.size
    dxi = 1.0 / cells
    xi_nodes = np.arange(cells + 1) * dxi
    w = np.asarray(u, dtype=float) - xi_nodes * ell_dot
    cfl = check_cfl(cfl_number(w, dt, ell * dxi))
    fluxes = face_fluxes(alpha, w, method, limiter,
                         courant=np.abs(w) * dt / (ell * dxi))
    if with_source:
        C = np.asarray(C, dtype=float)
        growth = alpha * f_growth(alpha, 0.5 * (C[:-1] + C[1:]), p)
    else:
        growth = np.zeros(cells)
    ell_new = ell + dt * ell_dot
    if not ell_new > 0.0:
        raise RadiusCollapse(
            f'radius update gives ell={ell_new:.6g} (ell\'={ell_dot:.6g})')
    content = (ell * alpha - (dt / dxi) * (fluxes[1:] - fluxes[:-1])
               + dt * ell * growth)
    new = content / ell_new
    if not np.all(np.isfinite(new)):
        raise NonFiniteState('scaled volume fraction update produced '
                             'non-finite values')
    budget = TransportBudget(
        mass_before=ell * dxi * float(np.sum(alpha)),
        mass_after=ell_new * dxi * float(np.sum(new)),
        source=dt * ell * dxi * float(np.sum(growth)),
        boundary_outflow=dt * float(fluxes[-1] - fluxes[0]),
    )
    return new, ell_new, cfl, budget


def init_scaled(ic, cells, p, *, case=Case.CASE2, C0=1.0, bounds=None):
    """Initial scheme B state with ``cells`` cells on (0, 1)."""
    case = Case.parse(case)
    bounds = Bounds() if bounds is None else bounds
    dxi = 1.0 / cells
    xi_centres = (np.arange(cells) + 0.5) * dxi
    alpha = np.asarray(ic(p.ell0 * xi_centres), dtype=float)
    if np.any(alpha <= 0.0) or not bounds.contains(alpha):
        raise InadmissibleState(
            f'initial volume fraction must lie in [{bounds.m_alpha:g}, '
            f'{bounds.M_alpha:g}] on (0, ell0)')
    if case is Case.CASE1:
        return ScaledState(t=0.0, ell=p.ell0, alpha=alpha,
                           u=np.ones(cells + 1), C=np.ones(cells + 1))
    mesh = scaled_mesh(p.ell0, cells)
    u = solve_velocity(mesh, nodal_average(alpha), p)
    C = np.full(cells + 1, float(C0))
    C[-1] = 1.0
    return ScaledState(t=0.0, ell=p.ell0, alpha=alpha, u=u, C=C)


def step_scaled(state, dt, method, p, *, pinned=False,
                limiter=Limiter.MINMOD,
                oxygen_mass=OxygenMass.CONSISTENT,
                oxygen_time_scheme=OxygenTimeScheme.IMPLICIT,
                index=None):
    """Advance scheme B by one time step."""
    cells = state.cells
    if pinned:
        u = np.ones(cells + 1)
        C = np.ones(cells + 1)
    else:
        mesh = scaled_mesh(state.ell, cells)
        alpha_nodes = nodal_average(state.alpha)
        u = solve_velocity(mesh, alpha_nodes, p)
        C = advance_oxygen(mesh, state.C, alpha_nodes, dt, p,
                           mass=oxygen_mass,
                           time_scheme=oxygen_time_scheme,
                           advection=-state.xi_nodes * u[-1])
    ell_dot = float(u[-1])
    alpha, ell, cfl, budget = scaled_transport(
        state.alpha, u, C, state.ell, ell_dot, dt, method, p, limiter)
    t = state.t + dt if index is None else index * dt
    diagnostics = StepDiagnostics(
        step=int(round(t / dt)) if index is None else int(index),
        t=t,
        ell_h=ell,
        cfl=cfl,
        mass=budget.mass_after,
        source=budget.source,
        boundary_outflow=budget.boundary_outflow,
        mass_residual=budget.residual,
    )
    return ScaledState(t=t, ell=ell, alpha=alpha, u=u, C=C,
                       last_step=diagnostics)


def to_extended(state, grid):
    """Resample a scaled state onto a fixed grid as a :class:`SimulationState`."""
    alpha, u, C = state.resample(grid)
    j = min(grid.M, int(math.ceil(state.ell / grid.h - SPACING_RTOL)))
    return SimulationState(t=state.t, alpha=alpha, u=u, C=C,
                           front=FrontEstimate(j_front=j, ell_h=state.ell),
                           last_step=state.last_step)


def simulate_scaled(config, resample=False):
    """Run scheme B over (0, T).

    Snapshots are :class:`ScaledState` objects, or scheme A style states
    on ``config.grid()`` when ``resample`` is set.
    """
    tc = config.time_control()
    p = config.params
    pinned = config.case is Case.CASE1
    cells = scaled_cells(config.scaled_spacing())
    grid = config.grid() if resample else None
    trajectory = Trajectory(scheme=SCHEME_NAME, config=config)
    snapshot_steps = set(config.snapshot_steps())
    logger.info(f'[+] scheme B: {config.case.value} method '
                f'{config.method.value} with {cells} scaled cells, '
                f'{tc.N} steps of dt={tc.dt:g}')

    def keep(state):
        trajectory.record_snapshot(
            to_extended(state, grid) if resample else state)

    try:
        state = init_scaled(config.initial_condition(), cells, p,
                            case=config.case, C0=config.C0,
                            bounds=config.bounds)
    except ExdomError as err:
        raise SimulationAborted(err, 0, 0.0) from err
    keep(state)
    trajectory.record_front(state.t, state.ell)
    for n in range(1, tc.N + 1):
        try:
            state = step_scaled(state, tc.dt, config.method, p,
                                pinned=pinned, limiter=config.limiter,
                                oxygen_mass=config.oxygen_mass,
                                oxygen_time_scheme=config.oxygen_time_scheme,
                                index=n)
        except ExdomError as err:
            raise SimulationAborted(err, n, state.t + tc.dt) from err
        trajectory.record_step(state.last_step)
        trajectory.record_front(state.t, state.ell)
        if n in snapshot_steps:
            keep(state)
    summary = trajectory.summary()
    logger.info(f"[+] scheme B finished: ell={summary['final_ell']:.6g} "
                f"max CFL {summary['max_cfl']:.4g}, max mass residual "
                f"{summary['max_mass_residual']:.3g}")
    return trajectory


# vim: set ts=4 sw=4 tw=0 et :
