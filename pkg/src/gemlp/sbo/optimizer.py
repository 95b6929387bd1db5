"""
Projected gradient descent inside a box.

Every step starts from a Barzilai-Borwein step length and backtracks until
the projected point satisfies the Armijo condition, so accepted values never
increase.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from gemlp.exceptions import GemlpConfigurationException, GemlpOptimizationException
from gemlp.sbo.problem import OptProblem, OptTrace, TerminationReason

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinimizeSettings:
    gtol: float = 1e-6  # projected-gradient norm
    xtol: float = 1e-10  # step norm
    max_iter: int = 5000
    armijo: float = 1e-4
    backtrack: float = 0.5
    min_step: float = 1e-20
    max_step: float = 1e10
    initial_step: float = 1e-3

    def __post_init__(self):
        if self.gtol <= 0 or self.xtol <= 0 or self.max_iter < 0:
            raise GemlpConfigurationException('Tolerances must be positive and max_iter non-negative')
        if not 0 < self.armijo < 1 or not 0 < self.backtrack < 1:
            raise GemlpConfigurationException('Line-search factors must lie in (0, 1)')


def _evaluate(problem: OptProblem, x: np.ndarray) -> tuple[float, np.ndarray]:
    value, gradient = problem.objective(x)
    return float(value), np.asarray(gradient, dtype=float).reshape(x.shape)


def minimize(problem: OptProblem, settings: MinimizeSettings | None = None) -> OptTrace:
    """
    Minimize ``problem`` from its start point.

    :param problem: objective, bounds and start point
    :param settings: tolerances and line-search parameters
    :return: trace of accepted iterates
    """
    settings = settings or MinimizeSettings()
    x = problem.project(problem.x0)
    value, gradient = _evaluate(problem, x)
    if not np.isfinite(value) or not np.all(np.isfinite(gradient)):
        msg = f'Objective is not finite at start point {x.tolist()}'
        logger.error(msg)
        raise GemlpOptimizationException(msg)

    trace = OptTrace(iterates=[x], values=[value], num_evaluations=1)
    step = settings.initial_step
    for _ in range(settings.max_iter):
        if np.linalg.norm(x - problem.project(x - gradient)) < settings.gtol:
            trace.converged, trace.termination_reason = True, TerminationReason.GTOL
            break

        t = step
        while True:
            x_new = problem.project(x - t * gradient)
            value_new, gradient_new = _evaluate(problem, x_new)
            trace.num_evaluations += 1
            decrease = float(gradient @ (x_new - x))
            finite = np.isfinite(value_new) and np.all(np.isfinite(gradient_new))
            if finite and value_new <= value + settings.armijo * decrease:
                break
            t *= settings.backtrack
            if t < settings.min_step:
                break
        if t < settings.min_step:
            trace.termination_reason = TerminationReason.LINE_SEARCH
            break

        s = x_new - x
        trace.iterates.append(x_new)
        trace.values.append(value_new)
        if np.linalg.norm(s) < settings.xtol:
            trace.converged, trace.termination_reason = True, TerminationReason.XTOL
            break
        y = gradient_new - gradient
        curvature = float(s @ y)
        step = float(np.clip(s @ s / curvature, settings.min_step, settings.max_step)) if curvature > 0 else 1.0
        x, value, gradient = x_new, value_new, gradient_new
    else:
        trace.termination_reason = TerminationReason.MAX_ITER

    logger.debug(
        'Minimization stopped (%s) after %d iterations at %s, value %.6e',
        trace.termination_reason.value, trace.num_iterations, trace.x.tolist(), trace.value,
    )
    return trace
