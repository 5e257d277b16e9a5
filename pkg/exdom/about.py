# -*- encoding: utf-8 -*-

import argparse
import logging
import textwrap

from cliff.command import Command
from exdom import __version__
from exdom.experiments import list_presets
from exdom.utils import copyright


class About(Command):
    """About the ``exdom`` CLI"""

    log = logging.getLogger(__name__)

    def get_parser(self, prog_name):
        parser = super().get_parser(prog_name)
        parser.formatter_class = argparse.RawDescriptionHelpFormatter
        parser.add_argument(
            '--presets',
            action='store_true',
            dest='presets',
            default=False,
            help="List the bundled experiment presets (default: False)."
        )
        parser.epilog = textwrap.dedent(f"""\
            Shows information about the ``exdom`` CLI.

            ::

                $ exdom about
                exdom version { __version__ }


            It will also print out copyright and related information (which
            isn't easy to force ``autoprogram-cliff`` to parse correctly in
            help output).

            The ``--presets`` option lists the experiment presets that the
            ``case1``, ``case2`` and ``sweep`` commands start from.
            """)  # noqa
        return parser

    def take_action(self, parsed_args):
        if parsed_args.presets:
            for preset in list_presets():
                print(preset)
        elif (
            self.app_args.verbose_level == 0
            or self.cmd_name == "version"
        ):
            print(f'{ __version__ }')
        else:
            # Hacking formatting for `exdom help` by adding a tab here.
            print(f'exdom version { __version__ }\n\t{ copyright() }')


# EOF
