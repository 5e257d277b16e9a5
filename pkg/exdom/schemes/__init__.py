# -*- coding: utf-8 -*-

"""
State, configuration and trajectory types shared by the extended-domain
solver (scheme A, ``exdom.schemes.extended``) and the scaled-domain
reference solver (scheme B, ``exdom.schemes.scaled``).
"""

import configparser
import enum
import logging

from dataclasses import (
    dataclass,
    field,
    replace,
)
from typing import (
    Optional,
    Tuple,
)

import numpy as np
import pandas as pd

from exdom.errors import ConfigurationError
from exdom.fem import (
    OxygenMass,
    OxygenTimeScheme,
)
from exdom.front import (
    FrontEstimate,
    check_threshold,
)
from exdom.mesh import (
    CellField,
    Grid,
    NodalField,
    TimeControl,
)
from exdom.model import (
    Bounds,
    ModelParams,
)
from exdom.oracle import (
    Case1Profile,
    initial_profile,
    plateau_profile,
)
from exdom.transport import (
    Limiter,
    TransportMethod,
)

# Fixed times at which Case 2 profiles are reported.
CASE2_SNAPSHOT_TIMES = tuple(float(t) for t in range(25, 226, 25))
# Default per-step truncation loss budget, as a multiple of h.
DEFAULT_TRUNCATION_BUDGET = 1e-6
# Invariant checks allow this much rounding.
STATE_TOLERANCE = 1e-12

logger = logging.getLogger(__name__)


class Case(enum.Enum):
    """``case1`` freezes u = C = 1; ``case2`` solves the full system."""

    CASE1 = 'case1'
    CASE2 = 'case2'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ConfigurationError(
                f"case must be one of {[m.value for m in cls]} "
                f"(got '{value}')")


def _parse_times(raw):
    if raw is None or str(raw).strip() == '':
        return ()
    try:
        return tuple(float(t) for t in str(raw).replace(' ', '').split(',')
                     if t != '')
    except ValueError:
        raise ConfigurationError(f"cannot parse snapshot times '{raw}'")


@dataclass(frozen=True)
class SimulationConfig:
    """Everything one simulation needs."""

    case: Case = Case.CASE1
    params: ModelParams = field(default_factory=ModelParams)
    bounds: Bounds = field(default_factory=Bounds)
    L: float = 6.0
    dx: float = 0.02
    dt: float = 0.01
    T: float = 5.0
    method: TransportMethod = TransportMethod.M
    limiter: Limiter = Limiter.MINMOD
    alpha_thr: float = 0.004
    profile: Case1Profile = Case1Profile.COSINE
    initial_value: float = 0.8
    C0: float = 1.0
    oxygen_mass: OxygenMass = OxygenMass.CONSISTENT
    oxygen_time_scheme: OxygenTimeScheme = OxygenTimeScheme.IMPLICIT
    truncation_budget: float = DEFAULT_TRUNCATION_BUDGET
    snapshot_times: Tuple[float, ...] = ()
    dxi: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, 'case', Case.parse(self.case))
        object.__setattr__(self, 'method', TransportMethod.parse(self.method))
        object.__setattr__(self, 'limiter', Limiter.parse(self.limiter))
        object.__setattr__(self, 'profile', Case1Profile.parse(self.profile))
        object.__setattr__(self, 'oxygen_mass', OxygenMass(
            getattr(self.oxygen_mass, 'value', self.oxygen_mass)))
        object.__setattr__(self, 'oxygen_time_scheme', OxygenTimeScheme(
            getattr(self.oxygen_time_scheme, 'value',
                    self.oxygen_time_scheme)))
        object.__setattr__(
            self, 'snapshot_times',
            tuple(sorted(set(float(t) for t in self.snapshot_times))))
        check_threshold(self.alpha_thr)
        if self.C0 < 0:
            raise ConfigurationError(f'C0 must be >= 0 (got {self.C0})')
        if self.truncation_budget < 0:
            raise ConfigurationError('truncation_budget must be >= 0')
        if self.dxi is not None and not 0.0 < self.dxi < 1.0:
            raise ConfigurationError(
                f'dxi must lie in (0, 1) (got {self.dxi})')
        for t in self.snapshot_times:
            if not 0.0 <= t <= self.T:
                raise ConfigurationError(
                    f'snapshot time {t} lies outside [0, {self.T}]')

    def replace(self, **changes):
        return replace(self, **changes)

    def grid(self):
        return Grid.from_spacing(self.L, self.dx).check_contains(
            self.params.ell0)

    def time_control(self):
        return TimeControl(dt=self.dt, T=self.T)

    def scaled_spacing(self):
        return self.dxi if self.dxi is not None else self.dx / self.params.ell0

    def initial_condition(self):
        """alpha_0 as a callable of x."""
        if self.case is Case.CASE1:
            profile = self.profile
            return lambda x: initial_profile(profile, x)
        return plateau_profile(self.initial_value, self.params.ell0)

    def snapshot_steps(self):
        """Step indices to snapshot: 0, the configured times and N."""
        tc = self.time_control()
        steps = {0, tc.N}
        steps.update(tc.step_of(t) for t in self.snapshot_times)
        return sorted(steps)

    @classmethod
    def from_parser(cls, parser):
        """Build a config from a ``configparser.ConfigParser``."""
        kwargs = {}
        if parser.has_section('model'):
            kwargs['params'] = ModelParams.from_section(parser['model'])
        else:
            raise ConfigurationError('configuration has no [model] section')
        try:
            if parser.has_section('bounds'):
                section = parser['bounds']
                kwargs['bounds'] = Bounds(
                    m_alpha=section.getfloat('m_alpha', Bounds.m_alpha),
                    M_alpha=section.getfloat('M_alpha', Bounds.M_alpha))
            if parser.has_section('grid'):
                section = parser['grid']
                for key in ('L', 'dx'):
                    if key in section:
                        kwargs[key] = section.getfloat(key)
            if parser.has_section('time'):
                section = parser['time']
                for key in ('dt', 'T'):
                    if key in section:
                        kwargs[key] = section.getfloat(key)
                if 'snapshot_times' in section:
                    kwargs['snapshot_times'] = _parse_times(
                        section['snapshot_times'])
            if parser.has_section('run'):
                section = parser['run']
                for key in ('case', 'method', 'limiter', 'profile'):
                    if key in section:
                        kwargs[key] = section[key]
                for key in ('alpha_thr', 'initial_value'):
                    if key in section:
                        kwargs[key] = section.getfloat(key)
            if parser.has_section('oxygen'):
                section = parser['oxygen']
                if 'C0' in section:
                    kwargs['C0'] = section.getfloat('C0')
                if 'mass' in section:
                    kwargs['oxygen_mass'] = section['mass'].strip().lower()
                if 'time_scheme' in section:
                    kwargs['oxygen_time_scheme'] = \
                        section['time_scheme'].strip().lower()
            if parser.has_section('diagnostics'):
                section = parser['diagnostics']
                if 'truncation_budget' in section:
                    kwargs['truncation_budget'] = section.getfloat(
                        'truncation_budget')
            if parser.has_section('scaled'):
                section = parser['scaled']
                if 'dxi' in section:
                    kwargs['dxi'] = section.getfloat('dxi')
        except ValueError as err:
            raise ConfigurationError(f'bad configuration value: {err}')
        return cls(**kwargs)


def read_config(*paths):
    """Parse INI files in order; later files override earlier ones."""
    # Keys are case sensitive (L, T, Q, M_alpha).
    parser = configparser.ConfigParser()
    parser.optionxform = str
    for path in paths:
        with open(path, 'r') as fp:
            parser.read_file(fp, source=str(path))
    return parser


@dataclass(frozen=True, eq=False)
class StepDiagnostics:
    """Observables recorded after every step."""

    step: int
    t: float
    ell_h: float
    cfl: float
    mass: float
    source: float
    boundary_outflow: float
    mass_residual: float
    truncation_loss: float = 0.0

    def as_dict(self):
        return {
            'step': self.step,
            't': self.t,
            'ell_h': self.ell_h,
            'cfl': self.cfl,
            'mass': self.mass,
            'source': self.source,
            'boundary_outflow': self.boundary_outflow,
            'mass_residual': self.mass_residual,
            'truncation_loss': self.truncation_loss,
        }


@dataclass(frozen=True, eq=False)
class SimulationState:
    """Snapshot of scheme A on the extended domain."""

    t: float
    alpha: CellField
    u: NodalField
    C: NodalField
    front: FrontEstimate
    pinned: bool = False
    last_step: Optional[StepDiagnostics] = None

    @property
    def grid(self):
        return self.alpha.grid

    @property
    def ell(self):
        return self.front.ell_h

    def violations(self, bounds=None):
        """Names of the state invariants that do not hold."""
        j = self.front.j_front
        alpha = self.alpha.values
        problems = []
        if np.any(alpha < -STATE_TOLERANCE):
            problems.append('alpha negative')
        if np.any(alpha[j:] != 0.0):
            problems.append('alpha nonzero beyond front')
        if bounds is not None and np.any(alpha[:j] > bounds.M_alpha):
            problems.append('alpha above M_alpha')
        # Pinned (Case 1) fields are u = C = 1 everywhere.
        if not self.pinned and np.any(self.u.values[j + 1:] != 0.0):
            problems.append('u nonzero beyond front')
        if np.any(self.C.values[j + 1:] != 1.0):
            problems.append('C not one beyond front')
        if not 0.0 < self.front.ell_h <= self.grid.L:
            problems.append('front outside (0, L]')
        return problems


@dataclass(frozen=True, eq=False)
class ScaledState:
    """Snapshot of scheme B on the scaled domain (0, 1)."""

    t: float
    ell: float
    alpha: np.ndarray
    u: np.ndarray
    C: np.ndarray
    last_step: Optional[StepDiagnostics] = None

    @property
    def cells(self):
        return self.alpha.size

    @property
    def dxi(self):
        return 1.0 / self.cells

    @property
    def xi_nodes(self):
        return np.arange(self.cells + 1) * self.dxi

    @property
    def xi_centres(self):
        return (np.arange(self.cells) + 0.5) * self.dxi

    def mass(self):
        return self.ell * self.dxi * float(np.sum(self.alpha))

    def violations(self, bounds=None):
        problems = []
        if not self.ell > 0.0:
            problems.append('radius not positive')
        if np.any(self.alpha < -STATE_TOLERANCE):
            problems.append('alpha negative')
        if bounds is not None and np.any(self.alpha > bounds.M_alpha):
            problems.append('alpha above M_alpha')
        return problems

    def resample(self, grid):
        """Linear interpolation onto a fixed grid in physical coordinates.

        Returns ``(alpha, u, C)``: alpha at the grid's cell centres, u and
        C at its nodes; beyond ell the extension alpha = 0, u = 0, C = 1
        applies.
        """
        xc = grid.centres
        xn = grid.nodes
        alpha = np.interp(xc, self.ell * self.xi_centres, self.alpha)
        alpha[xc > self.ell] = 0.0
        u = np.interp(xn, self.ell * self.xi_nodes, self.u)
        u[xn > self.ell] = 0.0
        C = np.interp(xn, self.ell * self.xi_nodes, self.C)
        C[xn > self.ell] = 1.0
        return CellField(grid, alpha), NodalField(grid, u), \
            NodalField(grid, C)


@dataclass
class Trajectory:
    """Snapshots, front history and per-step diagnostics of one run."""

    scheme: str
    config: SimulationConfig
    snapshots: list = field(default_factory=list)
    front_history: list = field(default_factory=list)
    diagnostics: list = field(default_factory=list)
    front_at_domain_end: bool = False
    truncation_exceedances: int = 0

    def record_snapshot(self, state):
        if self.snapshots and not state.t > self.snapshots[-1].t:
            raise ConfigurationError(
                'snapshot times must be strictly increasing')
        self.snapshots.append(state)

    def record_front(self, t, ell):
        self.front_history.append((float(t), float(ell)))

    def record_step(self, diagnostics):
        self.diagnostics.append(diagnostics)

    @property
    def times(self):
        return [s.t for s in self.snapshots]

    @property
    def final(self):
        return self.snapshots[-1]

    def snapshot_at(self, t, tol=1e-9):
        for state in self.snapshots:
            if abs(state.t - t) <= tol:
                return state
        raise KeyError(f'no snapshot at t={t}')

    def front_frame(self):
        return pd.DataFrame(self.front_history, columns=['t', 'ell_h'])

    def diagnostics_frame(self):
        return pd.DataFrame(
            [d.as_dict() for d in self.diagnostics],
            columns=list(StepDiagnostics.__dataclass_fields__))

    def summary(self):
        """Per-run figures logged at the end of a simulation."""
        frame = self.diagnostics_frame()
        if frame.empty:
            max_cfl = max_residual = total_loss = 0.0
        else:
            max_cfl = float(frame['cfl'].max())
            max_residual = float(frame['mass_residual'].abs().max())
            total_loss = float(frame['truncation_loss'].sum())
        return {
            'scheme': self.scheme,
            'steps': len(self.diagnostics),
            'final_ell': self.front_history[-1][1] if self.front_history
            else float('nan'),
            'max_cfl': max_cfl,
            'max_mass_residual': max_residual,
            'truncation_loss': total_loss,
            'truncation_exceedances': self.truncation_exceedances,
            'front_at_domain_end': self.front_at_domain_end,
        }


# vim: set ts=4 sw=4 tw=0 et :
