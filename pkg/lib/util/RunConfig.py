import os
import multiprocessing

from lib.util.errors import ParameterError

SOLVER_MAXITER_ENV = 'QMC_SOLVER_MAXITER'


class RunConfig:
    """Caps, tolerances and seeds shared by every command of a run."""

    def __init__(self, **kwargs):
        self.seed = int(kwargs.get('seed', 0))
        self.dense_cap = int(kwargs.get('dense_cap', 4096))
        self.projector_cap = int(kwargs.get('projector_cap', 8))
        self.matrix_cap = int(kwargs.get('matrix_cap', 5000))
        self.solver_cap = int(kwargs.get('solver_cap', 400))
        self.character_cap = int(kwargs.get('character_cap', 12))
        self.enumerate_cap = int(kwargs.get('enumerate_cap', 18))
        self.straighten_cap = int(kwargs.get('straighten_cap', 10 ** 6))
        self.parallel_jobs = int(kwargs.get('parallel_jobs', multiprocessing.cpu_count()))

        self.identity_tol = float(kwargs.get('identity_tol', 1e-12))
        self.dense_tol = float(kwargs.get('dense_tol', 1e-9))
        self.iterative_tol = float(kwargs.get('iterative_tol', 1e-7))
        self.solver_gap_tol = float(kwargs.get('solver_gap_tol', 1e-6))

        self.solver_maxiter = int(os.environ.get(SOLVER_MAXITER_ENV, kwargs.get('solver_maxiter', 200)))
        self.output = kwargs.get('output', None)

        self.validate()

    @staticmethod
    def from_kwargs(**kwargs) -> 'RunConfig':
        # argparse leaves unset options as None, which should fall back to defaults
        return RunConfig(**{key: value for key, value in kwargs.items() if value is not None})

    def validate(self):
        caps = {
            'dense_cap': self.dense_cap,
            'projector_cap': self.projector_cap,
            'matrix_cap': self.matrix_cap,
            'solver_cap': self.solver_cap,
            'character_cap': self.character_cap,
            'enumerate_cap': self.enumerate_cap,
            'straighten_cap': self.straighten_cap,
            'solver_maxiter': self.solver_maxiter,
            'parallel_jobs': self.parallel_jobs,
        }

        for name, value in caps.items():
            if value <= 0:
                raise ParameterError(f'Invalid "{name}" argument passed to RunConfig, it must be positive.')

    def to_dict(self) -> dict:
        return dict(vars(self))
