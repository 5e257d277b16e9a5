# -*- coding: utf-8 -*-

"""
Moving boundary recovery by thresholding the volume fraction.

ell_h is the smallest grid node x_j such that every cell of (x_j, L)
is below ``alpha_thr``. Cells right of ell_h are then zeroed and the
velocity and oxygen fields are extended past it with u = 0, C = 1.
"""

import logging
import warnings

from dataclasses import dataclass

import numpy as np

from exdom.errors import (
    ConfigurationError,
    FrontAtDomainEnd,
    FrontLost,
)
from exdom.mesh import (
    CellField,
    NodalField,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FrontEstimate:
    """Recovered boundary as a node index and its position."""

    j_front: int
    ell_h: float

    @classmethod
    def at_node(cls, grid, j_front):
        return cls(j_front=int(j_front), ell_h=float(j_front * grid.h))

    def at_domain_end(self, grid):
        return self.j_front == grid.M


def check_threshold(alpha_thr):
    if not 0.0 < alpha_thr < 1.0:
        raise ConfigurationError(
            f'alpha_thr must lie in (0, 1) (got {alpha_thr})')
    return alpha_thr


def recover_front(alpha, alpha_thr, warn=True):
    """Locate ell_h on ``alpha``'s grid.

    Raises ``FrontLost`` when no cell reaches the threshold. A front at
    x = L is returned but flagged with a ``FrontAtDomainEnd`` warning.
    """
    check_threshold(alpha_thr)
    grid = alpha.grid
    above = np.flatnonzero(alpha.values >= alpha_thr)
    if above.size == 0:
        raise FrontLost(
            f'no cell reaches alpha_thr={alpha_thr:g} '
            f'(max alpha {float(np.max(alpha.values)):.3g})')
    front = FrontEstimate.at_node(grid, above[-1] + 1)
    if warn and front.at_domain_end(grid):
        message = (f'[!] recovered front reached the end of the extended '
                   f'domain (L={grid.L:g}); choose a larger L')
        logger.warning(message)
        warnings.warn(message, FrontAtDomainEnd, stacklevel=2)
    return front


def truncate_alpha(alpha, front):
    """Zero every cell right of the front."""
    values = np.array(alpha.values)
    values[front.j_front:] = 0.0
    return CellField(alpha.grid, values)


def truncation_loss(alpha, front):
    """Mass :func:`truncate_alpha` removes."""
    return alpha.grid.h * float(np.sum(alpha.values[front.j_front:]))


def extend_outer_fields(u, C, front, grid):
    """Extend truncated nodal u and C to the whole grid (u = 0, C = 1).

    ``u`` and ``C`` hold values for nodes ``0..j_front``; node
    ``j_front`` keeps its solved value.
    """
    n = front.j_front + 1
    u = np.asarray(u, dtype=float)
    C = np.asarray(C, dtype=float)
    if u.size != n or C.size != n:
        raise ConfigurationError(
            f'expected {n} truncated nodal values '
            f'(got {u.size} and {C.size})')
    u_full = np.zeros(grid.M + 1)
    C_full = np.ones(grid.M + 1)
    u_full[:n] = u
    C_full[:n] = C
    return NodalField(grid, u_full), NodalField(grid, C_full)


# vim: set ts=4 sw=4 tw=0 et :
