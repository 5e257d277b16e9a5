# -*- coding: utf-8 -*-

"""
Error hierarchy for the ``exdom`` solvers.

Every failure the solvers can signal is a ``RuntimeError`` subclass so
callers that only know about ``RuntimeError`` (the way the rest of the
CLI reports problems) still catch them. Each class also carries a
machine-readable ``category`` and the process ``exit_code`` the CLI
returns when the error escapes a command.
"""


class ExdomError(RuntimeError):
    """Base class for solver and harness failures."""

    category = 'error'
    exit_code = 1

    def __init__(self, message=None):
        if message is None:
            message = f'[-] {self.category.replace("_", " ")}'
        elif not message.startswith('[-]'):
            message = f'[-] {message}'
        super().__init__(message)


class ConfigurationError(ExdomError):
    category = 'configuration'
    exit_code = 2


class MissingParameter(ConfigurationError):
    category = 'missing_parameter'
    exit_code = 2


class CflViolation(ExdomError):
    category = 'cfl_violation'
    exit_code = 3


class NonFiniteState(ExdomError):
    category = 'non_finite_state'
    exit_code = 4


class SingularCoefficient(ExdomError):
    category = 'singular_coefficient'
    exit_code = 5


class DomainTooSmall(ExdomError):
    category = 'domain_too_small'
    exit_code = 6


class FrontLost(ExdomError):
    category = 'front_lost'
    exit_code = 7


class RadiusCollapse(ExdomError):
    category = 'radius_collapse'
    exit_code = 8


class InadmissibleState(ExdomError):
    category = 'inadmissible_state'
    exit_code = 9


class OutputError(ExdomError):
    category = 'output'
    exit_code = 10


class SimulationAborted(ExdomError):
    """A time step failed; wraps the cause with where it happened."""

    def __init__(self, cause, step, t):
        self.cause = cause
        self.step = step
        self.t = t
        self.category = getattr(cause, 'category', 'error')
        self.exit_code = getattr(cause, 'exit_code', 1)
        reason = str(cause)
        if reason.startswith('[-] '):
            reason = reason[4:]
        super().__init__(
            f'[-] simulation aborted at step {step} (t={t:.6g}): {reason}')


class FrontAtDomainEnd(UserWarning):
    """The recovered front reached x = L; the extended domain is too short."""

    category = 'front_at_domain_end'


# vim: set ts=4 sw=4 tw=0 et :
