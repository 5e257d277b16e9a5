# -*- coding: utf-8 -*-

"""
Conforming P1 finite elements on the truncated mesh (0, ell_h).

Nodal coefficients are treated as P1 interpolants and every element
integral is evaluated with 2-point Gauss quadrature. Both solvers end in
a tridiagonal system: the velocity system is symmetric positive definite
and is factored with a banded Cholesky; the oxygen system is solved with
a general banded solve (it is non-symmetric once a mesh-advection term
is present).
"""

import enum
import logging

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from exdom.errors import (
    ConfigurationError,
    DomainTooSmall,
    SingularCoefficient,
)
from exdom.model import (
    TractionMode,
    boundary_traction,
    sigma_stress,
)

logger = logging.getLogger(__name__)

_GAUSS_POINTS, _GAUSS_WEIGHTS = np.polynomial.legendre.leggauss(2)
# Reference coordinate s in [0, 1] and weights summing to 1.
GAUSS_S = 0.5 * (1.0 + _GAUSS_POINTS)
GAUSS_W = 0.5 * _GAUSS_WEIGHTS


class OxygenMass(enum.Enum):
    CONSISTENT = 'consistent'
    LUMPED = 'lumped'


class OxygenTimeScheme(enum.Enum):
    IMPLICIT = 'implicit'
    EXPLICIT = 'explicit'


@dataclass(frozen=True)
class TruncatedMesh:
    """Nodes 0..j_front of a uniform mesh with element width ``h``."""

    h: float
    j_front: int

    def __post_init__(self):
        if self.h <= 0:
            raise ConfigurationError(f'element width must be positive '
                                     f'(got {self.h})')
        if self.j_front < 2:
            raise DomainTooSmall(
                f'truncated mesh needs at least two elements '
                f'(front at node {self.j_front})')

    @classmethod
    def from_front(cls, grid, front):
        return cls(h=grid.h, j_front=front.j_front)

    @property
    def n_nodes(self):
        return self.j_front + 1

    @property
    def nodes(self):
        return np.arange(self.n_nodes) * self.h

    @property
    def length(self):
        return self.j_front * self.h

    def gauss_points(self):
        """Physical quadrature points, shape (elements, 2)."""
        left = self.nodes[:-1, None]
        return left + self.h * GAUSS_S[None, :]


class Tridiagonal(object):
    """Assembly buffer for a tridiagonal matrix of ``n`` unknowns."""

    def __init__(self, n):
        self.diag = np.zeros(n)
        self.upper = np.zeros(n - 1)
        self.lower = np.zeros(n - 1)

    def add_elements(self, e00, e01, e10, e11):
        """Scatter 2x2 element matrices of consecutive node pairs."""
        self.diag[:-1] += e00
        self.diag[1:] += e11
        self.upper += e01
        self.lower += e10
        return self

    def matvec(self, x):
        y = self.diag * x
        y[:-1] += self.upper * x[1:]
        y[1:] += self.lower * x[:-1]
        return y

    def scaled(self, factor):
        other = Tridiagonal(self.diag.size)
        other.diag = factor * self.diag
        other.upper = factor * self.upper
        other.lower = factor * self.lower
        return other

    def __add__(self, other):
        total = Tridiagonal(self.diag.size)
        total.diag = self.diag + other.diag
        total.upper = self.upper + other.upper
        total.lower = self.lower + other.lower
        return total

    def banded(self, start=0, stop=None):
        """``(1, 1)`` banded storage of rows/columns ``start:stop``."""
        stop = self.diag.size if stop is None else stop
        n = stop - start
        ab = np.zeros((3, n))
        ab[0, 1:] = self.upper[start:stop - 1]
        ab[1, :] = self.diag[start:stop]
        ab[2, :-1] = self.lower[start:stop - 1]
        return ab

    def is_symmetric(self):
        return np.array_equal(self.upper, self.lower)


def _interpolate(nodal, s=GAUSS_S):
    """P1 interpolant of nodal values at reference points, per element."""
    nodal = np.asarray(nodal, dtype=float)
    return (nodal[:-1, None] * (1.0 - s[None, :])
            + nodal[1:, None] * s[None, :])


def weighted_mass(mesh, coefficient):
    """Matrix of the integral of c * phi_j * phi_i."""
    c = _interpolate(coefficient)
    w = mesh.h * GAUSS_W[None, :] * c
    n0 = 1.0 - GAUSS_S[None, :]
    n1 = GAUSS_S[None, :]
    e00 = np.sum(w * n0 * n0, axis=1)
    e01 = np.sum(w * n0 * n1, axis=1)
    e11 = np.sum(w * n1 * n1, axis=1)
    return Tridiagonal(mesh.n_nodes).add_elements(e00, e01, e01, e11)


def weighted_stiffness(mesh, coefficient):
    """Matrix of the integral of c * phi_j' * phi_i'."""
    c = _interpolate(coefficient)
    mean = np.sum(GAUSS_W[None, :] * c, axis=1) / mesh.h
    return Tridiagonal(mesh.n_nodes).add_elements(mean, -mean, -mean, mean)


def weighted_advection(mesh, velocity):
    """Matrix of the integral of w * phi_j' * phi_i (non-symmetric)."""
    w = mesh.h * GAUSS_W[None, :] * _interpolate(velocity) / mesh.h
    n0 = 1.0 - GAUSS_S[None, :]
    n1 = GAUSS_S[None, :]
    # d(phi_0)/dx = -1/h, d(phi_1)/dx = +1/h; the 1/h is folded into w.
    e00 = np.sum(-w * n0, axis=1)
    e01 = np.sum(w * n0, axis=1)
    e10 = np.sum(-w * n1, axis=1)
    e11 = np.sum(w * n1, axis=1)
    return Tridiagonal(mesh.n_nodes).add_elements(e00, e01, e10, e11)


def consistent_mass(mesh):
    return weighted_mass(mesh, np.ones(mesh.n_nodes))


def lumped_mass(mesh):
    lumped = Tridiagonal(mesh.n_nodes)
    lumped.diag[:] = mesh.h
    lumped.diag[0] = lumped.diag[-1] = 0.5 * mesh.h
    return lumped


def stress_load(mesh, stress):
    """Vector of the integral of Sigma * phi_i'."""
    mean = np.sum(GAUSS_W[None, :] * _interpolate(stress), axis=1)
    load = np.zeros(mesh.n_nodes)
    load[:-1] -= mean
    load[1:] += mean
    return load


def source_load(mesh, source):
    """Vector of the integral of g * phi_i for a callable g(x)."""
    g = np.asarray(source(mesh.gauss_points()), dtype=float)
    w = mesh.h * GAUSS_W[None, :] * g
    load = np.zeros(mesh.n_nodes)
    load[:-1] += np.sum(w * (1.0 - GAUSS_S[None, :]), axis=1)
    load[1:] += np.sum(w * GAUSS_S[None, :], axis=1)
    return load


def velocity_boundary_term(alpha_front, p):
    """alpha * traction - Sigma at the moving boundary.

    With the natural traction the two terms are the same expression, so
    the contribution is exactly zero.
    """
    if p.traction_mode is TractionMode.NATURAL:
        return 0.0
    return float(alpha_front * boundary_traction(alpha_front, p)
                 - sigma_stress(alpha_front, p))


@dataclass
class VelocitySystem:
    """Assembled velocity problem (unknowns are nodes 1..j_front)."""

    matrix: Tridiagonal
    rhs: np.ndarray
    boundary_term: float

    def factor(self):
        """Banded Cholesky factor; fails unless the system is SPD."""
        ab = self.matrix.banded(1)
        upper = np.zeros((2, ab.shape[1]))
        upper[0, 1:] = ab[0, 1:]
        upper[1, :] = ab[1, :]
        try:
            return scipy.linalg.cholesky_banded(upper, lower=False)
        except np.linalg.LinAlgError as err:
            raise SingularCoefficient(
                f'velocity system is not positive definite ({err})')


def assemble_velocity(mesh, alpha_nodes, p, source=None):
    """Assemble the P1 Galerkin system of the cell velocity equation."""
    alpha = np.asarray(alpha_nodes, dtype=float)
    if alpha.size != mesh.n_nodes:
        raise ConfigurationError(
            f'expected {mesh.n_nodes} nodal volume fractions '
            f'(got {alpha.size})')
    stress = sigma_stress(alpha, p)   # also guards alpha < 1 - eps
    drag = p.k * alpha / (1.0 - alpha)
    matrix = weighted_mass(mesh, drag) + weighted_stiffness(mesh, p.mu * alpha)
    rhs = stress_load(mesh, stress)
    boundary_term = velocity_boundary_term(alpha[-1], p)
    rhs[-1] += boundary_term
    if source is not None:
        rhs += source_load(mesh, source)
    return VelocitySystem(matrix=matrix, rhs=rhs, boundary_term=boundary_term)


def solve_velocity(mesh, alpha_nodes, p, source=None):
    """Cell velocity on the truncated mesh, with u = 0 at x = 0.

    ``source`` is an optional extra load g(x) (used for manufactured
    solutions). Returns the nodal velocity, ``j_front + 1`` values.
    """
    system = assemble_velocity(mesh, alpha_nodes, p, source=source)
    factor = system.factor()
    u = np.zeros(mesh.n_nodes)
    u[1:] = scipy.linalg.cho_solve_banded((factor, False), system.rhs[1:])
    return u


def _parse_enum(enum_cls, value, what):
    if isinstance(value, enum_cls):
        return value
    try:
        return enum_cls(str(value).strip().lower())
    except ValueError:
        raise ConfigurationError(
            f"{what} must be one of {[m.value for m in enum_cls]} "
            f"(got '{value}')")


def advance_oxygen(mesh, C_old, alpha_nodes, dt, p,
                   mass=OxygenMass.CONSISTENT,
                   time_scheme=OxygenTimeScheme.IMPLICIT,
                   advection=None,
                   boundary_value=1.0):
    """One time step of the oxygen equation on the truncated mesh.

    The consumption term is linear in the unknown with its denominator
    lagged at ``C_old``. ``advection`` is an optional nodal velocity w
    adding w dC/dx to the operator. Zero flux at x = 0, Dirichlet value
    ``boundary_value`` at the front.
    """
    if dt <= 0:
        raise ConfigurationError(f'dt must be positive (got {dt})')
    mass = _parse_enum(OxygenMass, mass, 'oxygen mass')
    time_scheme = _parse_enum(OxygenTimeScheme, time_scheme,
                              'oxygen time scheme')
    C_old = np.asarray(C_old, dtype=float)
    alpha = np.asarray(alpha_nodes, dtype=float)
    if C_old.size != mesh.n_nodes or alpha.size != mesh.n_nodes:
        raise ConfigurationError(
            f'expected {mesh.n_nodes} nodal values for oxygen and '
            f'volume fraction (got {C_old.size} and {alpha.size})')
    denominator = 1.0 + p.Q1hat * C_old
    if np.any(denominator <= 0.0):
        raise SingularCoefficient(
            'oxygen consumption denominator 1 + Q1hat C is not positive')

    M = consistent_mass(mesh) if mass is OxygenMass.CONSISTENT \
        else lumped_mass(mesh)
    operator = (weighted_stiffness(mesh, np.ones(mesh.n_nodes))
                + weighted_mass(mesh, p.Q * alpha / denominator))
    if advection is not None:
        operator = operator + weighted_advection(mesh, advection)

    if time_scheme is OxygenTimeScheme.IMPLICIT:
        lhs = M.scaled(1.0 / dt) + operator
        rhs = M.matvec(C_old) / dt
    else:
        lhs = M.scaled(1.0 / dt)
        rhs = M.matvec(C_old) / dt - operator.matvec(C_old)

    J = mesh.j_front
    rhs = rhs[:J].copy()
    rhs[-1] -= lhs.upper[J - 1] * boundary_value
    C_new = np.empty(mesh.n_nodes)
    C_new[:J] = scipy.linalg.solve_banded((1, 1), lhs.banded(0, J), rhs)
    C_new[J] = boundary_value
    return C_new


# vim: set ts=4 sw=4 tw=0 et :
