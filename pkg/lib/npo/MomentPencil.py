import numpy as np

from typing import Optional


class MomentPencil:
    """
    The moment matrix left after eliminating the equality constraints:
    M(y) = offset + sum_j y_j directions[:, j] (columns are vec'd in Fortran order), maximized against
    objective_offset + objective . y.
    """

    def __init__(self, offset: np.ndarray, directions: np.ndarray, objective_offset: float, objective: np.ndarray,
                 x0: Optional[np.ndarray] = None, null_basis: Optional[np.ndarray] = None, residual: float = 0.0):
        self.offset = np.asarray(offset, dtype=float)
        self.directions = np.asarray(directions, dtype=float)
        self.objective_offset = float(objective_offset)
        self.objective = np.asarray(objective, dtype=float)
        self.x0 = x0
        self.null_basis = null_basis
        self.residual = residual

        self.size = self.offset.shape[0]
        self.dim = self.directions.shape[1]

    @staticmethod
    def from_reduction(x0: np.ndarray, null_basis: np.ndarray, positions: np.ndarray, costs: np.ndarray,
                       residual: float) -> 'MomentPencil':
        """x = x0 + N y substituted into the moment matrix whose entry (i, j) is variable positions[i, j]."""
        return MomentPencil(x0[positions],
                            null_basis[positions.reshape(-1, order='F'), :],
                            float(costs @ x0),
                            null_basis.T @ costs,
                            x0=x0,
                            null_basis=null_basis,
                            residual=residual)

    def matrix(self, y: np.ndarray) -> np.ndarray:
        return self.offset + (self.directions @ y).reshape(self.size, self.size, order='F')

    def moments(self, y: np.ndarray) -> Optional[np.ndarray]:
        if self.null_basis is None:
            return None

        return self.x0 + self.null_basis @ y

    def value(self, y: np.ndarray) -> float:
        return self.objective_offset + float(self.objective @ y)
