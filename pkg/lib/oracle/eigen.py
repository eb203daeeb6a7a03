import numpy as np

from typing import Iterable, List, Tuple

from scipy.linalg import eigh
from scipy.sparse.linalg import eigsh, ArpackNoConvergence

from lib.oracle.TensorOperator import TensorOperator
from lib.util.errors import ConvergenceError, ParameterError
from lib.util.logger import init_logger

logger = init_logger(__name__)

METHODS = ('dense', 'iterative')


def distinct_eigenvalues(values: Iterable[float], tolerance: float = 1e-6) -> List[float]:
    """Sorted eigenvalues with clusters closer than tolerance merged into their mean."""
    clusters: List[List[float]] = []

    for value in sorted(values):
        if clusters and value - clusters[-1][-1] <= tolerance:
            clusters[-1].append(value)
        else:
            clusters.append([value])

    return [float(np.mean(cluster)) for cluster in clusters]


def _top_iterative(op: TensorOperator, tolerance: float, seed: int, maxiter: int) -> Tuple[float, np.ndarray]:
    op.check_self_adjoint(seed=seed)
    v0 = np.random.default_rng(seed).standard_normal(op.dim)

    try:
        values, vectors = eigsh(op.as_linear_operator(), k=1, which='LA', v0=v0, tol=tolerance, maxiter=maxiter)
    except ArpackNoConvergence as error:
        residual = float('nan')

        if len(error.eigenvalues):
            vector = error.eigenvectors[:, 0]
            residual = float(np.linalg.norm(op.apply(vector) - error.eigenvalues[0] * vector))

        raise ConvergenceError(f'Lanczos did not converge within {maxiter} iterations', residual)

    vector = vectors[:, 0]
    residual = float(np.linalg.norm(op.apply(vector) - values[0] * vector))
    logger.debug(f'Lanczos: value {values[0]:.12g}, Ritz residual {residual:.3e}')

    return float(values[0]), vector


def top_eigenpair(op: TensorOperator, method: str = 'dense', cap: int = 4096, tolerance: float = 1e-7,
                  seed: int = 0, maxiter: int = None) -> Tuple[float, np.ndarray]:
    if method not in METHODS:
        raise ParameterError(f'Invalid "method" argument "{method}", expected one of {METHODS}.')

    # Lanczos needs k < dim
    if method == 'dense' or op.dim <= 2:
        values, vectors = eigh(op.to_dense(cap), subset_by_index=[op.dim - 1, op.dim - 1])

        return float(values[0]), vectors[:, 0]

    return _top_iterative(op, tolerance, seed, maxiter or 20 * op.dim)


def max_eigenvalue(op: TensorOperator, method: str = 'dense', cap: int = 4096, tolerance: float = 1e-7,
                   seed: int = 0, maxiter: int = None) -> float:
    return top_eigenpair(op, method, cap, tolerance, seed, maxiter)[0]


def spectrum(op: TensorOperator, cap: int = 4096, tolerance: float = 1e-6) -> List[float]:
    """Distinct eigenvalues of op, dense."""
    return distinct_eigenvalues(eigh(op.to_dense(cap), eigvals_only=True), tolerance)
