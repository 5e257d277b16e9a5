# -*- coding: utf-8 -*-

import datetime
import logging
import os
import textwrap
import time

from exdom.errors import (
    ConfigurationError,
    OutputError,
)

EXDOM_DATA_DIR = os.environ.get('EXDOM_DATA_DIR', os.getcwd())
EXDOM_WORKERS = os.environ.get('EXDOM_WORKERS', '1')


logger = logging.getLogger(__name__)


def check_natural(value):
    try:
        i = int(value)
    except ValueError:
        raise ConfigurationError(f"'{value}' is not a base-10 integer")
    if not i > 0:
        raise ConfigurationError(f"'{value}' is not a natural number (>0)")
    return i


def check_positive(value):
    try:
        x = float(value)
    except ValueError:
        raise ConfigurationError(f"'{value}' is not a number")
    if not x > 0:
        raise ConfigurationError(f"'{value}' is not positive")
    return x


def check_fraction(value):
    """A number strictly between 0 and 1 (thresholds, volume fractions)."""
    x = check_positive(value)
    if not x < 1.0:
        raise ConfigurationError(f"'{value}' does not lie in (0, 1)")
    return x


def float_list(value):
    """Comma separated list of positive numbers."""
    items = [item for item in str(value).replace(' ', '').split(',') if item]
    if not items:
        raise ConfigurationError(f"'{value}' is an empty list")
    return [check_positive(item) for item in items]


def elapsed(start, end):
    if not 0.0 <= start <= end:
        raise ValueError(f'bad interval ({start}, {end})')
    hours, rem = divmod(end - start, 3600)
    minutes, seconds = divmod(rem, 60)
    return "{:0>2}:{:0>2}:{:05.2f}".format(
        int(hours), int(minutes), seconds)


class Timer(object):
    """Wall clock timer for a single command run."""

    def __init__(self):
        self.started = None
        self.stopped = None

    def start(self):
        self.started = time.monotonic()
        self.stopped = None
        return self.started

    def stop(self):
        if self.started is None:
            raise RuntimeError('timer was never started')
        self.stopped = time.monotonic()
        return self.stopped

    def elapsed(self):
        """Elapsed time in HH:MM:SS.SS format."""
        if self.started is None:
            raise RuntimeError('timer was never started')
        end = time.monotonic() if self.stopped is None else self.stopped
        return elapsed(self.started, end)


def ensure_directory(path):
    """Create ``path`` (and parents) if needed and return it."""
    try:
        os.makedirs(path, exist_ok=True)
    except OSError as err:
        raise OutputError(f"cannot create output directory '{path}': {err}")
    return path


def copyright():
    """Copyright string"""
    this_year = datetime.datetime.today().year
    copyright = textwrap.dedent(
        f"""Author:    exdom developers
        Copyright: 2021-{ this_year }, exdom developers.
        License:   Apache 2.0 License
        URL:       https://pypi.python.org/pypi/exdom-cli""")  # noqa
    return copyright


# vim: set ts=4 sw=4 tw=0 et :
