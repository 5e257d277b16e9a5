# -*- coding: utf-8 -*-

import argparse
import logging
import os
import textwrap

from cliff.lister import Lister
from exdom.experiments import (
    ErrorReport,
    add_run_options,
    load_config,
    overrides_from_args,
    preset_name,
    run_case1,
)


class Case1(Lister):
    """Run Case 1 (unit velocity and oxygen) with both schemes."""

    log = logging.getLogger(__name__)

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        parser.formatter_class = argparse.RawDescriptionHelpFormatter
        parser = add_run_options(parser)
        parser.epilog = textwrap.dedent("""\
            Runs the extended-domain scheme (A) and the scaled-domain scheme
            (B) with u = C = 1, where the volume fraction has a closed form.
            Shows the recovered radius error and the interior and near-front
            volume fraction errors of each scheme.

            Settings come from the ``case1_muscl.cfg`` or ``case1_upwind.cfg``
            preset (selected by ``--method``), then ``--config``, then the
            remaining options.

            ::

                $ exdom case1 --method M --dx 0.02 --alpha-thr 0.004
                +--------+--------+------+-----------+-------+-----------+---------------+ ...
                | scheme | method | dx   | alpha_thr | ell_h | delta_ell | linf_interior | ...
                +--------+--------+------+-----------+-------+-----------+---------------+ ...
                | A      | M      | 0.02 | 0.004     | 6.0   | 0.0       | ...           | ...
                | B      | M      | 0.02 | 0.004     | 6.0   | ...       | ...           | ...
                +--------+--------+------+-----------+-------+-----------+---------------+ ...

            Result files (``snapshot_<t>.csv``, ``front_history.csv``,
            ``diagnostics_A.csv``, ``diagnostics_B.csv``, ``errors.csv``)
            are written to ``--out`` or to ``case1_<method>`` under the data
            directory.
            """)  # noqa
        return parser

    def take_action(self, parsed_args):
        self.log.debug('[+] running case 1')
        preset = preset_name('case1', parsed_args.method or 'M')
        config = load_config(preset=preset,
                             config_file=parsed_args.config_file,
                             **overrides_from_args(parsed_args))
        out_dir = parsed_args.out or os.path.join(
            self.app_args.data_dir, f'case1_{config.method.value}')
        result = run_case1(config, out_dir=out_dir)
        self.log.info(f'[+] wrote {len(result.files)} files to {out_dir}')
        columns = list(ErrorReport.__dataclass_fields__)
        data = [
            [getattr(report, column) for column in columns]
            for report in result.reports
        ]
        return columns, data


# vim: set ts=4 sw=4 tw=0 et :
