# -*- coding: utf-8 -*-

"""
Uniform fixed mesh on the extended domain (0, L) and the two field
representations living on it.

Cells are the intervals (x_i, x_{i+1}); the finite volume faces are the
finite element nodes, so the velocity computed at the nodes is used as
the face speed without interpolation.
"""

import logging
import math

from dataclasses import dataclass

import numpy as np

from exdom.errors import ConfigurationError

logger = logging.getLogger(__name__)

# Relative tolerance used when checking that dx divides L and dt divides T.
SPACING_RTOL = 1e-9


@dataclass(frozen=True)
class Grid:
    """Uniform mesh of ``M`` cells on (0, L)."""

    L: float
    M: int

    def __post_init__(self):
        if self.L <= 0:
            raise ConfigurationError(f'domain length must be positive '
                                     f'(got L={self.L})')
        if int(self.M) != self.M or self.M < 1:
            raise ConfigurationError(f'cell count must be a natural number '
                                     f'(got M={self.M})')

    @classmethod
    def from_spacing(cls, L, dx):
        """Grid on (0, L) with cell width ``dx``; ``dx`` must divide ``L``."""
        if dx <= 0:
            raise ConfigurationError(f'dx must be positive (got {dx})')
        M = int(round(L / dx))
        if M < 1 or not math.isclose(M * dx, L, rel_tol=SPACING_RTOL):
            raise ConfigurationError(
                f'dx={dx} does not divide L={L} into whole cells')
        return cls(L=float(L), M=M)

    @property
    def h(self):
        return self.L / self.M

    @property
    def nodes(self):
        return np.arange(self.M + 1) * self.h

    @property
    def centres(self):
        return (np.arange(self.M) + 0.5) * self.h

    def check_contains(self, ell0):
        """The extended domain must hold the initial tumour."""
        if not self.L > ell0:
            raise ConfigurationError(
                f'extended domain L={self.L} must exceed ell0={ell0}')
        return self


def _as_finite(values, length, what):
    values = np.array(values, dtype=float)
    if values.ndim != 1 or values.size != length:
        raise ConfigurationError(
            f'{what} needs {length} values (got shape {values.shape})')
    if not np.all(np.isfinite(values)):
        raise ConfigurationError(f'{what} has non-finite entries')
    values.setflags(write=False)
    return values


@dataclass(frozen=True, eq=False)
class CellField:
    """One value per cell (carries the volume fraction)."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, 'values', _as_finite(self.values, self.grid.M, 'CellField'))

    def mass(self):
        return self.grid.h * float(np.sum(self.values))


@dataclass(frozen=True, eq=False)
class NodalField:
    """One value per node (carries velocity and oxygen tension)."""

    grid: Grid
    values: np.ndarray

    def __post_init__(self):
        object.__setattr__(
            self, 'values',
            _as_finite(self.values, self.grid.M + 1, 'NodalField'))

    @classmethod
    def constant(cls, grid, value):
        return cls(grid, np.full(grid.M + 1, float(value)))

    def cell_averages(self):
        """Mean of the two bounding nodes of every cell."""
        return 0.5 * (self.values[:-1] + self.values[1:])


@dataclass(frozen=True)
class TimeControl:
    """Uniform time stepping with ``N`` steps of ``dt`` covering (0, T)."""

    dt: float
    T: float

    def __post_init__(self):
        if self.dt <= 0:
            raise ConfigurationError(f'dt must be positive (got {self.dt})')
        if self.T < 0:
            raise ConfigurationError(f'T must be >= 0 (got {self.T})')
        if self.T > 0 and not math.isclose(
                self.N * self.dt, self.T, rel_tol=SPACING_RTOL):
            raise ConfigurationError(
                f'dt={self.dt} does not divide T={self.T} into whole steps')

    @property
    def N(self):
        return int(round(self.T / self.dt))

    def step_of(self, t):
        """Index of the step that ends at time ``t``."""
        return int(round(t / self.dt))


def nodal_average(cell_values):
    """Average adjacent cells onto nodes; end nodes copy their only cell."""
    cell_values = np.asarray(cell_values, dtype=float)
    nodes = np.empty(cell_values.size + 1)
    nodes[1:-1] = 0.5 * (cell_values[:-1] + cell_values[1:])
    nodes[0] = cell_values[0]
    nodes[-1] = cell_values[-1]
    return nodes


def cell_to_node(cf):
    """Convert a cell field to a nodal field on the same grid."""
    return NodalField(cf.grid, nodal_average(cf.values))


def node_to_face_velocity(nf):
    """Face speeds of the finite volume scheme; faces are the nodes."""
    return nf.values


# vim: set ts=4 sw=4 tw=0 et :
