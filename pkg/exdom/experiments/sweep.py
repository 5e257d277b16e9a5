# -*- coding: utf-8 -*-

import argparse
import logging
import os
import textwrap

from cliff.lister import Lister
from exdom.experiments import (
    load_sweep,
    preset_name,
    sweep_thresholds,
    write_csv,
)
from exdom.oracle import Case1Profile
from exdom.transport import TransportMethod
from exdom.utils import (
    EXDOM_WORKERS,
    check_natural,
    check_positive,
    ensure_directory,
    float_list,
)


class Sweep(Lister):
    """Tabulate the Case 1 radius error over mesh sizes and thresholds."""

    log = logging.getLogger(__name__)

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        parser.formatter_class = argparse.RawDescriptionHelpFormatter
        parser.add_argument(
            '--method',
            dest='method',
            type=str.upper,
            choices=[m.value for m in TransportMethod],
            default=None,
            help="Transport method, 'U' or 'M' (default: 'M')"
        )
        parser.add_argument(
            '--dx-list',
            metavar='<dx,...>',
            dest='dx_list',
            type=float_list,
            default=None,
            help='Comma separated mesh sizes (default: from the preset)'
        )
        parser.add_argument(
            '--thr-list',
            metavar='<alpha_thr,...>',
            dest='thr_list',
            type=float_list,
            default=None,
            help='Comma separated thresholds (default: from the preset)'
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
            '--profile',
            dest='profile',
            choices=[p.value for p in Case1Profile],
            default=None,
            help="Case 1 initial profile (default: from the preset, 'i')"
        )
        parser.add_argument(
            '--workers',
            metavar='<workers>',
            dest='workers',
            type=check_natural,
            default=EXDOM_WORKERS,
            help=('Number of worker processes '
                  f'(Env: ``EXDOM_WORKERS``; default: {EXDOM_WORKERS})')
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
        parser.epilog = textwrap.dedent("""\
            Runs the extended-domain scheme on Case 1 for every pair of
            mesh size and front recovery threshold and shows the relative
            error of the recovered radius at T = 5, one row per mesh size
            and one column per threshold.

            The default grids come from the ``[sweep]`` section of
            ``case1_sweep_muscl.cfg`` (6 x 5 cells) or
            ``case1_sweep_upwind.cfg`` (3 x 4 cells). These presets use
            L = 7.2 so that every mesh size divides the domain.

            ::

                $ exdom sweep --method U --workers 4
                +------+----------+----------+----------+----------+
                | dx   | 0.04     | 0.03     | 0.02     | 0.01     |
                +------+----------+----------+----------+----------+
                | 0.01 | ...      | ...      | ...      | ...      |
                | 0.02 | ...      | ...      | ...      | ...      |
                | 0.04 | ...      | ...      | ...      | ...      |
                +------+----------+----------+----------+----------+

            Cells whose run fails are shown as ``nan``; the sweep carries
            on. ``table.csv`` holds the table, ``sweep.csv`` one line per
            cell with the method, profile, recovered radius and status.
            """)  # noqa
        return parser

    def take_action(self, parsed_args):
        self.log.debug('[+] running threshold sweep')
        preset = preset_name('case1', parsed_args.method or 'M', sweep=True)
        config, dx_list, thr_list = load_sweep(
            preset=preset,
            config_file=parsed_args.config_file,
            dx_list=parsed_args.dx_list,
            thr_list=parsed_args.thr_list,
            method=parsed_args.method,
            dt=parsed_args.dt,
            profile=parsed_args.profile)
        table, cells = sweep_thresholds(config, dx_list, thr_list,
                                        workers=int(parsed_args.workers))
        out_dir = ensure_directory(parsed_args.out or os.path.join(
            self.app_args.data_dir, f'sweep_{config.method.value}'))
        write_csv(table, os.path.join(out_dir, 'table.csv'))
        write_csv(cells, os.path.join(out_dir, 'sweep.csv'))
        self.log.info(f'[+] wrote sweep results to {out_dir}')
        return list(table.columns), table.values.tolist()


# vim: set ts=4 sw=4 tw=0 et :
