from gemlp.sbo.optimizer import MinimizeSettings, minimize
from gemlp.sbo.problem import OptProblem, OptTrace, TerminationReason
from gemlp.sbo.rosenbrock_study import RosenbrockStudyConfig, RosenbrockStudyResult, run_rosenbrock_study
from gemlp.sbo.surrogate import surrogate_objective, true_objective

__all__ = [
    'MinimizeSettings',
    'OptProblem',
    'OptTrace',
    'RosenbrockStudyConfig',
    'RosenbrockStudyResult',
    'TerminationReason',
    'minimize',
    'run_rosenbrock_study',
    'surrogate_objective',
    'true_objective',
]
