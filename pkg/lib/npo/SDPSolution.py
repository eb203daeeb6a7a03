import numpy as np

from typing import Optional

from lib.util.errors import ParameterError

STATUSES = ('optimal', 'max-iterations', 'infeasible')


class SDPSolution:
    """Outcome of one relaxation solve. The gap is always reported, nan when the solver gave no dual."""

    def __init__(self, value: float, status: str, gap: float = float('nan'), primal_residual: float = float('nan'),
                 dual_residual: float = float('nan'), moments: Optional[np.ndarray] = None, **info):
        if status not in STATUSES:
            raise ParameterError(f'Invalid "status" argument "{status}", expected one of {STATUSES}.')

        self.value = value
        self.status = status
        self.gap = gap
        self.primal_residual = primal_residual
        self.dual_residual = dual_residual
        self.moments = moments
        self.info = info

    @property
    def is_optimal(self) -> bool:
        return self.status == 'optimal'

    def to_dict(self) -> dict:
        result = {
            'value': self.value,
            'status': self.status,
            'gap': self.gap,
            'primal_residual': self.primal_residual,
            'dual_residual': self.dual_residual,
        }
        result.update(self.info)

        return result

    def __repr__(self):
        return f'SDPSolution({self.status}: {self.value:.9g}, gap {self.gap:.2e})'
