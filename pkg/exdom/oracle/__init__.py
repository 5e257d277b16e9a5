# -*- coding: utf-8 -*-

"""
Ground truth for Case 1 (u = C = 1).

With unit velocity and oxygen the volume fraction equation reduces to
alpha_t + alpha_x = alpha (1 - alpha - c2), solved in closed form along
the characteristics x - t = const. An independent RK4 integration along
the same characteristics checks the closed form.
"""

import enum
import logging

import numpy as np

from exdom.errors import ConfigurationError
from exdom.model import (
    ModelParams,
    f_growth,
)

# The unit-oxygen birth rate (1 + s1)/(1 + s1) is always 1.
C1 = 1.0

logger = logging.getLogger(__name__)


class Case1Profile(enum.Enum):
    COSINE = 'i'
    SINE = 'ii'
    EXP_RATIO = 'iii'

    @classmethod
    def parse(cls, value):
        if isinstance(value, cls):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ConfigurationError(
                f"profile must be one of {[m.value for m in cls]} "
                f"(got '{value}')")


def _support(x):
    x = np.asarray(x, dtype=float)
    return np.where((x >= 0.0) & (x <= 1.0), 1.0, 0.0)


def initial_profile(kind, x):
    """Case 1 initial volume fraction, supported on [0, 1]."""
    kind = Case1Profile.parse(kind)
    x = np.asarray(x, dtype=float)
    if kind is Case1Profile.COSINE:
        values = 0.5 * (0.02 + np.cos(x) ** 2)
    elif kind is Case1Profile.SINE:
        values = 0.5 * (0.02 + np.sin(x) ** 2)
    else:
        # Only evaluate the exponentials on the support; they overflow
        # for |x| of a few tens.
        xs = np.clip(x, 0.0, 1.0) - 0.5
        values = 0.5 * (1.0 + np.exp(xs ** 2)) / (1.0 + np.exp(2.0 * xs ** 2))
    return values * _support(x)


def plateau_profile(value, ell0):
    """alpha_0 = ``value`` on [0, ell0] and zero beyond (Case 2)."""
    def profile(x):
        x = np.asarray(x, dtype=float)
        return np.where((x >= 0.0) & (x <= ell0), float(value), 0.0)
    return profile


def exact_alpha_case1(t, x, kind, p=None):
    """Closed-form Case 1 volume fraction."""
    if p is None:
        p = ModelParams()
    t = np.asarray(t, dtype=float)
    if np.any(t < 0):
        raise ConfigurationError('exact solution needs t >= 0')
    c2 = p.c2
    a0 = initial_profile(kind, np.asarray(x, dtype=float) - t)
    growth = np.exp((C1 - c2) * t)
    numerator = (c2 - C1) * a0 * growth
    denominator = C1 * a0 * (1.0 - growth) + c2 - C1
    return numerator / denominator


def exact_radius_case1(t, ell0=1.0):
    """Radius moving at unit speed."""
    return ell0 + np.asarray(t, dtype=float)


def characteristic_oracle(t, x, kind, p=None, substeps=1000):
    """RK4 integration of d(alpha)/ds = alpha f(alpha, 1) along x - t = const."""
    if p is None:
        p = ModelParams()
    if int(substeps) < 1:
        raise ConfigurationError(f'substeps must be >= 1 (got {substeps})')
    t = np.asarray(t, dtype=float)
    x = np.asarray(x, dtype=float)
    t, x = np.broadcast_arrays(t, x)
    alpha = initial_profile(kind, x - t)
    ds = t / int(substeps)

    def rhs(a):
        return a * f_growth(a, 1.0, p)

    for _ in range(int(substeps)):
        k1 = rhs(alpha)
        k2 = rhs(alpha + 0.5 * ds * k1)
        k3 = rhs(alpha + 0.5 * ds * k2)
        k4 = rhs(alpha + ds * k3)
        alpha = alpha + ds / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return alpha


# vim: set ts=4 sw=4 tw=0 et :
