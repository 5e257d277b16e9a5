# -*- coding: utf-8 -*-

"""
Model constants and the pointwise closures of the two-phase tumour
growth system.

The closures accept scalars or numpy arrays and return the same shape,
so the finite volume and finite element code can evaluate them over
whole meshes at once.
"""

import enum
import logging

from dataclasses import (
    asdict,
    dataclass,
    replace,
)

import numpy as np

from exdom.errors import (
    ConfigurationError,
    MissingParameter,
    SingularCoefficient,
)

DEFAULT_EPS_SING = 1e-8
# Neither value is given numerically for this model; 0.8 puts the
# Case 2 plateau exactly on the stress threshold.
DEFAULT_ALPHA_STAR = 0.8
DEFAULT_ALPHA_MIN = 0.8

logger = logging.getLogger(__name__)


class TractionMode(enum.Enum):
    """Numerator used for the stress condition at the moving boundary."""

    LITERAL = 'literal'
    NATURAL = 'natural'


@dataclass(frozen=True)
class ModelParams:
    """Dimensionless constants of the tumour growth model.

    The defaults are the standard parameter set (s1 = s4 = 10,
    s2 = s3 = 0.5, k = mu = 1, Q = 0.5, Q1hat = 0, ell0 = 1).
    """

    s1: float = 10.0
    s2: float = 0.5
    s3: float = 0.5
    s4: float = 10.0
    k: float = 1.0
    mu: float = 1.0
    Q: float = 0.5
    Q1hat: float = 0.0
    alpha_star: float = DEFAULT_ALPHA_STAR
    alpha_min: float = DEFAULT_ALPHA_MIN
    ell0: float = 1.0
    traction_mode: TractionMode = TractionMode.LITERAL
    eps_sing: float = DEFAULT_EPS_SING

    def __post_init__(self):
        if isinstance(self.traction_mode, str):
            object.__setattr__(
                self, 'traction_mode', TractionMode(self.traction_mode))
        for name in ('s1', 's2', 's3', 's4', 'k', 'mu', 'Q', 'Q1hat'):
            if getattr(self, name) < 0:
                raise ConfigurationError(
                    f"'{name}' must be >= 0 (got {getattr(self, name)})")
        for name in ('alpha_star', 'alpha_min'):
            value = getattr(self, name)
            if not 0.0 < value < 1.0:
                raise ConfigurationError(
                    f"'{name}' must lie in (0, 1) (got {value})")
        if self.ell0 <= 0:
            raise ConfigurationError(
                f"'ell0' must be positive (got {self.ell0})")
        if not 0.0 < self.eps_sing < 1.0:
            raise ConfigurationError(
                f"'eps_sing' must lie in (0, 1) (got {self.eps_sing})")

    @property
    def c2(self):
        """Net death rate at unit oxygen tension, (s2 + s3)/(1 + s4)."""
        return (self.s2 + self.s3) / (1.0 + self.s4)

    def with_changes(self, **changes):
        return replace(self, **changes)

    def as_dict(self):
        d = asdict(self)
        d['traction_mode'] = self.traction_mode.value
        return d

    @classmethod
    def from_section(cls, section):
        """Build parameters from a ``[model]`` config section.

        ``section`` is any mapping of strings (a ``configparser``
        section works). ``alpha_star`` and ``alpha_min`` are required:
        the source model never states their values, so a file that
        leaves them out is rejected rather than silently defaulted.
        """
        missing = [
            key for key in ('alpha_star', 'alpha_min')
            if key not in section
        ]
        if missing:
            raise MissingParameter(
                f"[model] is missing {', '.join(missing)}: the stress "
                "reference and threshold fractions have no published "
                "values and must be supplied explicitly")
        kwargs = {}
        for name, field in cls.__dataclass_fields__.items():
            if name not in section:
                continue
            raw = section[name]
            if name == 'traction_mode':
                try:
                    kwargs[name] = TractionMode(str(raw).strip().lower())
                except ValueError:
                    raise ConfigurationError(
                        f"traction_mode must be one of "
                        f"{[m.value for m in TractionMode]} (got '{raw}')")
            else:
                try:
                    kwargs[name] = float(raw)
                except ValueError:
                    raise ConfigurationError(
                        f"[model] {name}='{raw}' is not a number")
        unknown = set(section) - set(cls.__dataclass_fields__)
        if unknown:
            logger.warning(
                f"[!] ignoring unknown [model] keys: {sorted(unknown)}")
        return cls(**kwargs)


@dataclass(frozen=True)
class Bounds:
    """Admissible range of the volume fraction on the tumour."""

    m_alpha: float = 1e-3
    M_alpha: float = 0.99

    def __post_init__(self):
        if not 0.0 < self.m_alpha <= self.M_alpha < 1.0:
            raise ConfigurationError(
                'bounds must satisfy 0 < m_alpha <= M_alpha < 1 '
                f'(got m_alpha={self.m_alpha}, M_alpha={self.M_alpha})')

    def contains(self, values):
        values = np.asarray(values, dtype=float)
        return bool(np.all((values >= self.m_alpha)
                           & (values <= self.M_alpha)))


def heaviside(x):
    """H(x) = 1 for x >= 0, else 0."""
    return np.where(np.asarray(x) >= 0.0, 1.0, 0.0)


def _check_singularity(alpha, p):
    alpha = np.asarray(alpha, dtype=float)
    if np.any(alpha >= 1.0 - p.eps_sing):
        raise SingularCoefficient(
            f'volume fraction {float(np.max(alpha)):.12g} reached the '
            f'singularity guard 1 - {p.eps_sing:g}')
    return alpha


def f_growth(alpha, C, p):
    """Net proliferation rate f(alpha, C)."""
    alpha = np.asarray(alpha, dtype=float)
    C = np.asarray(C, dtype=float)
    birth = (1.0 + p.s1) * (1.0 - alpha) * C / (1.0 + p.s1 * C)
    death = (p.s2 + p.s3 * C) / (1.0 + p.s4 * C)
    return birth - death


def sigma_stress(alpha, p):
    """Cell-phase stress alpha (alpha - alpha*) / (1 - alpha)^2 H(alpha - alpha_min)."""  # noqa
    alpha = _check_singularity(alpha, p)
    return (alpha * (alpha - p.alpha_star) / (1.0 - alpha) ** 2
            * heaviside(alpha - p.alpha_min))


def boundary_traction(alpha_at_front, p):
    """Right-hand side of mu du/dx at the moving boundary.

    ``literal`` uses (alpha - alpha_min) in the numerator; ``natural``
    uses (alpha - alpha*), which makes the weak-form boundary term cancel
    against the interior stress.
    """
    alpha = _check_singularity(alpha_at_front, p)
    if p.traction_mode is TractionMode.NATURAL:
        numerator = alpha - p.alpha_star
    else:
        numerator = alpha - p.alpha_min
    return numerator / (1.0 - alpha) ** 2 * heaviside(alpha - p.alpha_min)


def oxygen_sink(alpha, C, p):
    """Oxygen consumption -Q alpha C / (1 + Q1hat C)."""
    alpha = np.asarray(alpha, dtype=float)
    C = np.asarray(C, dtype=float)
    return -p.Q * alpha * C / (1.0 + p.Q1hat * C)


# vim: set ts=4 sw=4 tw=0 et :
