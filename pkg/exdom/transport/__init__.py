# -*- coding: utf-8 -*-

"""
Explicit finite volume transport of the volume fraction.

Two methods are available: first order upwinding with the Godunov flux
(method U) and a MUSCL-Hancock reconstruction with minmod-limited slopes
feeding the same flux (method M). The Hancock traces are taken at the
half step, alpha_i +- (1 - |u| dt / h) slope_i / 2, so method M stays
stable up to a Courant number of 1 in a single explicit update. The flux function is u * alpha, linear in
alpha, so the Godunov flux reduces to taking the upwind trace.

Outside (0, L) the volume fraction is zero on both sides.
"""

import enum
import logging

from dataclasses import dataclass

import numpy as np

from exdom.errors import (
    CflViolation,
    ConfigurationError,
    NonFiniteState,
)
from exdom.mesh import (
    CellField,
    NodalField,
    node_to_face_velocity,
)
from exdom.model import f_growth

# Round-off allowance on the CFL bound (Case 2 runs at exactly 1).
CFL_TOLERANCE = 1e-12

logger = logging.getLogger(__name__)


class TransportMethod(enum.Enum):
    U = 'U'
    M = 'M'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().upper())
        except ValueError:
            raise ConfigurationError(
                f"method must be one of {[m.value for m in cls]} "
                f"(got '{value}')")


class Limiter(enum.Enum):
    MINMOD = 'minmod'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ConfigurationError(
                f"limiter must be one of {[m.value for m in cls]} "
                f"(got '{value}')")


@dataclass(frozen=True)
class TransportBudget:
    """Mass accounting of one explicit transport step."""

    mass_before: float
    mass_after: float
    source: float
    boundary_outflow: float

    @property
    def residual(self):
        """Zero up to rounding: the fluxes telescope."""
        return (self.mass_after - self.mass_before
                - self.source + self.boundary_outflow)


def _values(field):
    return field.values if hasattr(field, 'values') else np.asarray(
        field, dtype=float)


def numerical_flux(alpha_left, alpha_right, u_face):
    """Godunov flux of u * alpha: upwind on the sign of the face speed."""
    u_face = np.asarray(u_face, dtype=float)
    return np.where(u_face >= 0.0,
                    u_face * np.asarray(alpha_left, dtype=float),
                    u_face * np.asarray(alpha_right, dtype=float))


def minmod(a, b):
    """Smallest-magnitude argument when signs agree, else zero."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.where(a * b > 0.0,
                    np.sign(a) * np.minimum(np.abs(a), np.abs(b)),
                    0.0)


def limited_slopes(values, limiter=Limiter.MINMOD):
    """Undivided cell slopes; the two boundary cells get zero slope."""
    values = np.asarray(values, dtype=float)
    slopes = np.zeros_like(values)
    if Limiter.parse(limiter) is Limiter.MINMOD:
        slopes[1:-1] = minmod(values[1:-1] - values[:-2],
                              values[2:] - values[1:-1])
    return slopes


def hancock_factors(courant, faces):
    """Trace weights (1 - nu) / 2 per face, nu clipped to [0, 1]."""
    if courant is None:
        return np.full(faces, 0.5)
    nu = np.clip(np.abs(np.asarray(courant, dtype=float)), 0.0, 1.0)
    if nu.ndim == 0:
        nu = np.full(faces, float(nu))
    if nu.size != faces:
        raise ConfigurationError(
            f'expected {faces} face Courant numbers (got {nu.size})')
    return 0.5 * (1.0 - nu)


def muscl_face_values(cf, limiter=Limiter.MINMOD, courant=None):
    """Left and right traces at every face of a piecewise-linear reconstruction.

    Returns two arrays of length ``M + 1``. Entry ``i`` of ``left`` is the
    trace of cell ``i - 1`` at face ``i`` and entry ``i`` of ``right`` the
    trace of cell ``i``. The exterior traces at faces 0 and M are the
    zero ghost state.

    With ``courant`` (per face ``|u| dt / h``, or a scalar) the traces are
    the time-centred Hancock values; without it they are the plain
    cell-edge values.
    """
    values = _values(cf)
    if values.size < 3:
        raise ConfigurationError(
            f'MUSCL reconstruction needs at least 3 cells (got {values.size})')
    slopes = limited_slopes(values, limiter)
    weights = hancock_factors(courant, values.size + 1)
    left = np.zeros(values.size + 1)
    right = np.zeros(values.size + 1)
    left[1:] = values + weights[1:] * slopes
    right[:-1] = values - weights[:-1] * slopes
    return left, right


def upwind_face_values(cf):
    """Piecewise-constant traces, same layout as :func:`muscl_face_values`."""
    values = _values(cf)
    left = np.zeros(values.size + 1)
    right = np.zeros(values.size + 1)
    left[1:] = values
    right[:-1] = values
    return left, right


def face_fluxes(values, face_speed, method, limiter=Limiter.MINMOD,
                courant=None):
    """Godunov fluxes at all ``M + 1`` faces."""
    if TransportMethod.parse(method) is TransportMethod.M:
        left, right = muscl_face_values(values, limiter, courant)
    else:
        left, right = upwind_face_values(values)
    return numerical_flux(left, right, face_speed)


def cfl_number(u, dt, h):
    """Courant number max|u| dt / h."""
    speeds = _values(u)
    if speeds.size == 0:
        return 0.0
    return float(np.max(np.abs(speeds))) * dt / h


def check_cfl(cfl):
    if cfl > 1.0 + CFL_TOLERANCE:
        raise CflViolation(f'CFL number {cfl:.6g} exceeds 1')
    return cfl


def advance_alpha_with_budget(alpha, u, C, dt, method, p,
                              limiter=Limiter.MINMOD):
    """One forward Euler step of the volume fraction equation.

    The source alpha f(alpha, C) is integrated in the same explicit step
    (no splitting); C is taken at cell centres as the mean of the
    bounding nodes. Returns the new field and its mass budget.
    """
    grid = alpha.grid
    h = grid.h
    speed = node_to_face_velocity(u)
    check_cfl(cfl_number(speed, dt, h))
    old = alpha.values
    fluxes = face_fluxes(old, speed, method, limiter,
                         courant=np.abs(speed) * dt / h)
    C_cell = C.cell_averages() if isinstance(C, NodalField) else \
        np.asarray(C, dtype=float)
    growth = old * f_growth(old, C_cell, p)
    new = old - (dt / h) * (fluxes[1:] - fluxes[:-1]) + dt * growth
    if not np.all(np.isfinite(new)):
        raise NonFiniteState('volume fraction update produced '
                             'non-finite values')
    budget = TransportBudget(
        mass_before=h * float(np.sum(old)),
        mass_after=h * float(np.sum(new)),
        source=dt * h * float(np.sum(growth)),
        boundary_outflow=dt * float(fluxes[-1] - fluxes[0]),
    )
    return CellField(grid, new), budget


def advance_alpha(alpha, u, C, dt, method, p, limiter=Limiter.MINMOD):
    """Advance the volume fraction by one step on the whole of (0, L)."""
    new, _ = advance_alpha_with_budget(alpha, u, C, dt, method, p, limiter)
    return new


# vim: set ts=4 sw=4 tw=0 et :
