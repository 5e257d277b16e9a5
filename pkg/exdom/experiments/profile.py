# -*- coding: utf-8 -*-

import argparse
import logging
import os
import textwrap

from cliff.lister import Lister
from exdom.experiments import (
    ErrorReport,
    compare_methods,
    load_config,
    preset_name,
)
from exdom.oracle import Case1Profile
from exdom.utils import check_positive


class Profile(Lister):
    """Compare both methods and schemes on one Case 1 profile."""

    log = logging.getLogger(__name__)

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        parser.formatter_class = argparse.RawDescriptionHelpFormatter
        parser.add_argument(
            '--profile',
            dest='profile',
            choices=[p.value for p in Case1Profile],
            default='i',
            help="Case 1 initial profile (default: 'i')"
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
            Runs Case 1 with method U (threshold 0.04) and method M
            (threshold 0.004) for one initial profile and shows the errors
            of both schemes against the exact solution, split into the
            interior and the band of width 0.2 behind the exact front.

            Each method writes its own ``method_<U|M>`` subdirectory with
            the snapshot files (``x``, ``alpha_A``, ``alpha_B``,
            ``alpha_exact`` and the frozen ``u`` and ``C``), and the
            combined ``errors.csv`` sits next to them.

            ::

                $ exdom profile --profile iii -c scheme -c method -c linf_interior -c linf_front
            """)  # noqa
        return parser

    def take_action(self, parsed_args):
        self.log.debug('[+] comparing methods on one profile')
        config = load_config(preset=preset_name('case1', 'M'),
                             config_file=parsed_args.config_file,
                             profile=parsed_args.profile,
                             dx=parsed_args.dx,
                             dt=parsed_args.dt)
        out_dir = parsed_args.out or os.path.join(
            self.app_args.data_dir, f'profile_{config.profile.value}')
        results = compare_methods(config, out_dir=out_dir)
        columns = list(ErrorReport.__dataclass_fields__)
        data = [
            [getattr(report, column) for column in columns]
            for result in results.values()
            for report in result.reports
        ]
        return columns, data


# vim: set ts=4 sw=4 tw=0 et :
