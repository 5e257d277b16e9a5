# -*- coding: utf-8 -*-

"""
Experiment harness: Case 1 and Case 2 runs, threshold sweeps, error
metrics and the CSV result files.

Experiment definitions live in INI presets under ``exdom/presets``. A
run configuration is built from the preset, then an optional user
config file, then command line overrides, in that order.
"""

import logging
import math
import os

from dataclasses import (
    asdict,
    dataclass,
    field,
)
from multiprocessing import Pool

import numpy as np
import pandas as pd

from exdom.errors import (
    ConfigurationError,
    ExdomError,
    OutputError,
    SimulationAborted,
)
from exdom.oracle import (
    Case1Profile,
    exact_alpha_case1,
    exact_radius_case1,
)
from exdom.schemes import (
    Case,
    SimulationConfig,
    Trajectory,
    read_config,
)
from exdom.schemes.extended import simulate_extended
from exdom.schemes.scaled import (
    simulate_scaled,
    to_extended,
)
from exdom.transport import TransportMethod
from exdom.utils import (
    check_fraction,
    check_positive,
    ensure_directory,
)

PRESETS_DIR = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'presets')
# Half width of the bands around the Case 1 jumps left out of interior errors.
FRONT_BAND = 0.2
FLOAT_FORMAT = '%.9g'

# Radius-error tables of the threshold study.
MUSCL_SWEEP_DX = (0.01, 0.02, 0.04, 0.06, 0.08, 0.1)
MUSCL_SWEEP_THR = (0.01, 0.008, 0.006, 0.004, 0.002)
UPWIND_SWEEP_DX = (0.01, 0.02, 0.04)
UPWIND_SWEEP_THR = (0.04, 0.03, 0.02, 0.01)
# Thresholds paired with each method in the profile comparison.
DEFAULT_THRESHOLDS = {
    TransportMethod.U: 0.04,
    TransportMethod.M: 0.004,
}

logger = logging.getLogger(__name__)


def preset_name(case, method, sweep=False):
    """Preset file name for a case and transport method."""
    method = TransportMethod.parse(method)
    suffix = 'muscl' if method is TransportMethod.M else 'upwind'
    kind = f'{Case.parse(case).value}_sweep' if sweep else \
        Case.parse(case).value
    return f'{kind}_{suffix}.cfg'


def preset_path(name):
    path = os.path.join(PRESETS_DIR, name)
    if not os.path.exists(path):
        raise ConfigurationError(f"no preset named '{name}'")
    return path


def list_presets():
    return sorted(f for f in os.listdir(PRESETS_DIR) if f.endswith('.cfg'))


def add_run_options(parser, profile=True):
    """Options shared by the experiment commands."""
    parser.add_argument(
        '--method',
        dest='method',
        type=str.upper,
        choices=[m.value for m in TransportMethod],
        default=None,
        help="Transport method, 'U' (upwind) or 'M' (MUSCL) (default: 'M')"
    )
    parser.add_argument(
        '--dx',
        metavar='<dx>',
        dest='dx',
        type=check_positive,
        default=None,
        help='Mesh size (default: from the preset)'
    )
    parser.add_argument(
        '--dt',
        metavar='<dt>',
        dest='dt',
        type=check_positive,
        default=None,
        help='Time step (default: from the preset)'
    )
    parser.add_argument(
        '--T',
        metavar='<T>',
        dest='T',
        type=float,
        default=None,
        help='Final time (default: from the preset)'
    )
    parser.add_argument(
        '--alpha-thr',
        metavar='<alpha_thr>',
        dest='alpha_thr',
        type=check_fraction,
        default=None,
        help='Front recovery threshold (default: from the preset)'
    )
    if profile:
        parser.add_argument(
            '--profile',
            dest='profile',
            choices=[p.value for p in Case1Profile],
            default=None,
            help="Case 1 initial profile (default: from the preset, 'i')"
        )
    parser.add_argument(
        '--config',
        metavar='<config-file>',
        dest='config_file',
        default=None,
        help='INI file overriding the preset (default: ``None``)'
    )
    parser.add_argument(
        '--out',
        metavar='<directory>',
        dest='out',
        default=None,
        help=('Directory for result files (default: a subdirectory '
              'of the data directory)')
    )
    return parser


def overrides_from_args(parsed_args):
    """Command line values that override the preset and config file."""
    names = ('method', 'dx', 'dt', 'T', 'alpha_thr', 'profile')
    return {name: getattr(parsed_args, name, None) for name in names}


def _read(preset, config_file):
    paths = []
    if preset is not None:
        paths.append(preset_path(preset))
    if config_file is not None:
        if not os.path.exists(config_file):
            raise ConfigurationError(
                f"config file '{config_file}' does not exist")
        paths.append(config_file)
    if not paths:
        raise ConfigurationError('no preset or config file given')
    return read_config(*paths)


def _apply_overrides(config, overrides):
    changes = {k: v for k, v in overrides.items() if v is not None}
    if 'T' in changes and 'snapshot_times' not in changes:
        # A shortened run keeps only the snapshots it reaches.
        changes['snapshot_times'] = tuple(
            t for t in config.snapshot_times if t <= changes['T'])
    if changes:
        logger.debug(f'[+] command line overrides: {changes}')
        config = config.replace(**changes)
    return config


def load_config(preset=None, config_file=None, **overrides):
    """Build a :class:`SimulationConfig` from a preset, a file and overrides.

    ``None`` overrides are ignored so unset command line options leave
    the file values alone.
    """
    config = SimulationConfig.from_parser(_read(preset, config_file))
    return _apply_overrides(config, overrides)


def _float_list(raw, what):
    try:
        values = [float(v) for v in str(raw).replace(' ', '').split(',') if v]
    except ValueError:
        raise ConfigurationError(f"cannot parse {what} '{raw}'")
    if not values:
        raise ConfigurationError(f'{what} is empty')
    return values


def load_sweep(preset=None, config_file=None, dx_list=None, thr_list=None,
               **overrides):
    """Config plus the dx and threshold lists of a ``[sweep]`` section."""
    parser = _read(preset, config_file)
    config = _apply_overrides(SimulationConfig.from_parser(parser), overrides)
    section = parser['sweep'] if parser.has_section('sweep') else {}
    if dx_list is None:
        dx_list = _float_list(section.get('dx_list', config.dx), 'dx_list')
    if thr_list is None:
        thr_list = _float_list(section.get('thr_list', config.alpha_thr),
                               'thr_list')
    return config, list(dx_list), list(thr_list)


@dataclass
class ErrorReport:
    """Error metrics of one scheme in one run.

    Metrics that do not apply (no exact solution, failed run) are NaN.
    """

    scheme: str
    method: str
    dx: float
    alpha_thr: float
    ell_h: float = math.nan
    ell_ref: float = math.nan
    delta_ell: float = math.nan
    linf_interior: float = math.nan
    l1_interior: float = math.nan
    linf_front: float = math.nan
    l1_front: float = math.nan
    scheme_diff: float = math.nan
    status: str = 'ok'

    def __post_init__(self):
        for name in ('delta_ell', 'linf_interior', 'l1_interior',
                     'linf_front', 'l1_front', 'scheme_diff'):
            if getattr(self, name) < 0:
                raise ValueError(f'{name} must be >= 0')

    def as_dict(self):
        return asdict(self)


@dataclass
class RunResult:
    """Reports, trajectories and files written by one experiment."""

    reports: list = field(default_factory=list)
    trajectories: dict = field(default_factory=dict)
    files: list = field(default_factory=list)

    def report(self, scheme):
        for report in self.reports:
            if report.scheme == scheme:
                return report
        raise KeyError(f'no report for scheme {scheme}')


def relative_radius_error(ell_exact, ell_h):
    """|ell(T) - ell_h| / ell(T)."""
    if not ell_exact > 0:
        raise ConfigurationError(
            f'exact radius must be positive (got {ell_exact})')
    return abs(ell_exact - ell_h) / ell_exact


def relative_difference(ell_a, ell_b):
    """Scheme A against scheme B, relative to scheme B."""
    return relative_radius_error(ell_b, ell_a)


def window_errors(numeric, reference, widths, inside):
    """L-infinity and L1 errors over the cells selected by ``inside``."""
    inside = np.asarray(inside, dtype=bool)
    if not np.any(inside):
        return math.nan, math.nan
    error = np.abs(np.asarray(numeric, dtype=float)[inside]
                   - np.asarray(reference, dtype=float)[inside])
    widths = np.broadcast_to(np.asarray(widths, dtype=float), inside.shape)
    return float(np.max(error)), float(np.sum(widths[inside] * error))


def case1_windows(x, T, ell_exact):
    """Interior and near-front cell masks for Case 1 errors.

    The exact solution is supported on (T, ell(T)) and jumps at both
    ends. The interior is that support less a band of ``FRONT_BAND`` at
    each jump; the near-front window is the band behind ell(T).
    """
    x = np.asarray(x, dtype=float)
    interior = (x >= T + FRONT_BAND) & (x <= ell_exact - FRONT_BAND)
    front = (x > ell_exact - FRONT_BAND) & (x <= ell_exact)
    return interior, front


def _final_profile(trajectory):
    """(x, alpha, cell widths, final radius) of a trajectory's last state."""
    final = trajectory.final
    if trajectory.scheme == 'B':
        return (final.ell * final.xi_centres, final.alpha,
                final.ell * final.dxi, final.ell)
    return (final.grid.centres, final.alpha.values, final.grid.h, final.ell)


def case1_report(trajectory, config):
    """Radius and profile errors of a Case 1 run against the exact solution."""
    T = config.T
    ell_exact = float(exact_radius_case1(T, config.params.ell0))
    x, alpha, widths, ell = _final_profile(trajectory)
    exact = exact_alpha_case1(T, x, config.profile, config.params)
    interior, front = case1_windows(x, T, ell_exact)
    linf_i, l1_i = window_errors(alpha, exact, widths, interior)
    linf_f, l1_f = window_errors(alpha, exact, widths, front)
    return ErrorReport(
        scheme=trajectory.scheme,
        method=config.method.value,
        dx=config.dx,
        alpha_thr=config.alpha_thr,
        ell_h=ell,
        ell_ref=ell_exact,
        delta_ell=relative_radius_error(ell_exact, ell),
        linf_interior=linf_i,
        l1_interior=l1_i,
        linf_front=linf_f,
        l1_front=l1_f,
    )


def write_csv(data, path):
    """Write a table (or a trajectory's front history) as CSV.

    Floats carry 9 significant digits and lines end in ``\\n`` so equal
    inputs give byte-identical files.
    """
    if isinstance(data, Trajectory):
        frame = data.front_frame()
    elif isinstance(data, pd.DataFrame):
        frame = data
    else:
        frame = pd.DataFrame(data)
    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT,
                     lineterminator='\n')
    except OSError as err:
        raise OutputError(f"cannot write '{path}': {err}")
    logger.debug(f'[+] wrote {path}')
    return path


def snapshot_name(t):
    return f'snapshot_{t:g}.csv'


def snapshot_frame(state_a, state_b, exact=None):
    """Scheme A and resampled scheme B profiles on scheme A's grid."""
    grid = state_a.grid
    resampled = to_extended(state_b, grid)
    frame = pd.DataFrame({
        'x': grid.centres,
        'alpha_A': state_a.alpha.values,
        'u_A': state_a.u.cell_averages(),
        'C_A': state_a.C.cell_averages(),
        'alpha_B': resampled.alpha.values,
        'u_B': resampled.u.cell_averages(),
        'C_B': resampled.C.cell_averages(),
    })
    if exact is not None:
        frame['alpha_exact'] = exact(state_a.t, grid.centres)
    return frame


def front_history_frame(traj_a, traj_b):
    a = traj_a.front_frame().rename(columns={'ell_h': 'ell_A'})
    b = traj_b.front_frame().rename(columns={'ell_h': 'ell_B'})
    return pd.DataFrame({'t': a['t'], 'ell_A': a['ell_A'],
                         'ell_B': b['ell_B']})


def write_run_files(result, config, out_dir, exact=None):
    """Snapshots, front history, diagnostics and error reports."""
    ensure_directory(out_dir)
    traj_a = result.trajectories['A']
    traj_b = result.trajectories['B']
    for state_a, state_b in zip(traj_a.snapshots, traj_b.snapshots):
        path = os.path.join(out_dir, snapshot_name(state_a.t))
        result.files.append(write_csv(
            snapshot_frame(state_a, state_b, exact), path))
    result.files.append(write_csv(
        front_history_frame(traj_a, traj_b),
        os.path.join(out_dir, 'front_history.csv')))
    for trajectory in (traj_a, traj_b):
        result.files.append(write_csv(
            trajectory.diagnostics_frame(),
            os.path.join(out_dir, f'diagnostics_{trajectory.scheme}.csv')))
    result.files.append(write_errors(result.reports, out_dir))
    return result


def write_errors(reports, out_dir):
    ensure_directory(out_dir)
    columns = list(ErrorReport.__dataclass_fields__)
    frame = pd.DataFrame([r.as_dict() for r in reports], columns=columns)
    return write_csv(frame, os.path.join(out_dir, 'errors.csv'))


def _failed_reports(config, err):
    return [ErrorReport(scheme=scheme, method=config.method.value,
                        dx=config.dx, alpha_thr=config.alpha_thr,
                        status=err.category)
            for scheme in ('A', 'B')]


def _run_both(config, out_dir):
    try:
        traj_a = simulate_extended(config)
        traj_b = simulate_scaled(config)
    except SimulationAborted as err:
        logger.error(f'{err}')
        if out_dir is not None:
            write_errors(_failed_reports(config, err), out_dir)
        raise
    return traj_a, traj_b


def run_case1(config, out_dir=None):
    """Case 1 (u = C = 1) with both schemes against the exact solution."""
    config = config.replace(case=Case.CASE1)
    traj_a, traj_b = _run_both(config, out_dir)
    report_a = case1_report(traj_a, config)
    report_b = case1_report(traj_b, config)
    diff = relative_difference(report_a.ell_h, report_b.ell_h)
    report_a.scheme_diff = report_b.scheme_diff = diff
    result = RunResult(reports=[report_a, report_b],
                       trajectories={'A': traj_a, 'B': traj_b})
    logger.info(f'[+] case 1 method {config.method.value}: '
                f'delta_ell A={report_a.delta_ell:.3g} '
                f'B={report_b.delta_ell:.3g}, interior Linf '
                f'A={report_a.linf_interior:.3g} '
                f'B={report_b.linf_interior:.3g}')
    if out_dir is not None:
        profile, p = config.profile, config.params

        def exact(t, x):
            return exact_alpha_case1(t, x, profile, p)

        write_run_files(result, config, out_dir, exact=exact)
    return result


def run_case2(config, out_dir=None):
    """Case 2 (full system) with both schemes; compares final radii."""
    config = config.replace(case=Case.CASE2)
    traj_a, traj_b = _run_both(config, out_dir)
    ell_a = traj_a.final.ell
    ell_b = traj_b.final.ell
    diff = relative_difference(ell_a, ell_b)
    reports = [
        ErrorReport(scheme=scheme, method=config.method.value, dx=config.dx,
                    alpha_thr=config.alpha_thr, ell_h=ell, ell_ref=ell_b,
                    scheme_diff=diff)
        for scheme, ell in (('A', ell_a), ('B', ell_b))
    ]
    result = RunResult(reports=reports,
                       trajectories={'A': traj_a, 'B': traj_b})
    logger.info(f'[+] case 2 method {config.method.value}: '
                f'ell_A={ell_a:.6g} ell_B={ell_b:.6g} '
                f'relative difference {diff:.3g}')
    if traj_a.front_at_domain_end:
        logger.warning('[!] scheme A front reached x=L during the run')
    if out_dir is not None:
        write_run_files(result, config, out_dir)
    return result


def compare_methods(config, out_dir=None, thresholds=None):
    """Case 1 with methods U and M on one profile, side by side."""
    thresholds = DEFAULT_THRESHOLDS if thresholds is None else thresholds
    results = {}
    for method in (TransportMethod.U, TransportMethod.M):
        method_config = config.replace(method=method,
                                       alpha_thr=thresholds[method])
        method_dir = None if out_dir is None else os.path.join(
            out_dir, f'method_{method.value}')
        results[method] = run_case1(method_config, method_dir)
    if out_dir is not None:
        reports = [r for m in results for r in results[m].reports]
        write_errors(reports, out_dir)
    return results


def _sweep_cell(job):
    """One cell of a threshold sweep; runs in a worker process."""
    config, dx, alpha_thr = job
    try:
        cell = config.replace(dx=dx, alpha_thr=alpha_thr, case=Case.CASE1)
        trajectory = simulate_extended(cell)
    except ExdomError as err:
        logger.warning(f'[!] sweep cell dx={dx:g} alpha_thr={alpha_thr:g} '
                       f'failed: {err}')
        return dx, alpha_thr, math.nan, math.nan, err.category
    ell_exact = float(exact_radius_case1(cell.T, cell.params.ell0))
    ell_h = trajectory.final.ell
    return (dx, alpha_thr, ell_h,
            relative_radius_error(ell_exact, ell_h), 'ok')


def sweep_thresholds(config, dx_list, thr_list, workers=1):
    """Radius error of scheme A over the (dx, alpha_thr) cross product.

    Returns ``(table, cells)``: the table has one row per dx and one
    column per threshold; ``cells`` is the long form with the run status
    of every cell. Failed cells are NaN.
    """
    dx_list = list(dx_list)
    thr_list = list(thr_list)
    if not dx_list or not thr_list:
        raise ConfigurationError('sweep needs at least one dx and one '
                                 'threshold')
    jobs = [(config, dx, thr) for dx in dx_list for thr in thr_list]
    logger.info(f'[+] sweeping {len(dx_list)} x {len(thr_list)} cells '
                f'(method {config.method.value}, profile '
                f'{config.profile.value}) with {workers} worker(s)')
    if workers > 1:
        with Pool(workers) as pool:
            outcomes = pool.map(_sweep_cell, jobs)
    else:
        outcomes = [_sweep_cell(job) for job in jobs]
    cells = pd.DataFrame(
        outcomes, columns=['dx', 'alpha_thr', 'ell_h', 'delta_ell', 'status'])
    cells.insert(0, 'profile', config.profile.value)
    cells.insert(0, 'method', config.method.value)
    keyed = {(dx, thr): value for dx, thr, _, value, _ in outcomes}
    table = pd.DataFrame(
        [[dx] + [keyed[(dx, thr)] for thr in thr_list] for dx in dx_list],
        columns=['dx'] + [f'{thr:g}' for thr in thr_list])
    return table, cells


# vim: set ts=4 sw=4 tw=0 et :
