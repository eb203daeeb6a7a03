import numpy as np

from math import factorial
from typing import List

from scipy.linalg import eigh

from lib.algebra import Permutation
from lib.characters import chi
from lib.oracle.TensorOperator import TensorOperator
from lib.oracle.eigen import distinct_eigenvalues
from lib.partitions import Partition, dim_sn
from lib.util.errors import CapExceededError, ParameterError


def isotypic_projector(lam, n: int, d: int, cap: int = 8) -> TensorOperator:
    """
    Central idempotent (dim_sn(lam)/n!) sum_pi chi_lam(pi) rho(pi), whose range is the lam-block.

    Characters are evaluated once per conjugacy class.
    """
    lam = Partition.coerce(lam)

    if lam.weight != n:
        raise ParameterError(f'Invalid "lambda" argument passed to isotypic_projector, {lam.parts} is not a partition of {n}.')

    if n > cap:
        raise CapExceededError('n', n, cap)

    scale = dim_sn(lam) / factorial(n)
    class_values = {}
    terms = {}

    for pi in Permutation.all(n):
        cycle_type = pi.cycle_type()

        if cycle_type not in class_values:
            class_values[cycle_type] = chi(lam, cycle_type)

        if class_values[cycle_type] != 0:
            terms[pi] = scale * class_values[cycle_type]

    return TensorOperator(n, d, terms)


def range_basis(projector: np.ndarray, tolerance: float = 1e-9) -> np.ndarray:
    """Orthonormal columns spanning the range of a dense orthogonal projector."""
    values, vectors = eigh(projector)

    return vectors[:, values > 0.5 + tolerance]


def isotypic_spectrum(op: TensorOperator, projector: TensorOperator, cap: int = 4096,
                      tolerance: float = 1e-9) -> List[float]:
    """Distinct eigenvalues of op restricted to the range of projector."""
    basis = range_basis(projector.to_dense(cap), tolerance)

    if basis.shape[1] == 0:
        return []

    block = basis.T @ op.to_dense(cap) @ basis

    return distinct_eigenvalues(eigh((block + block.T) / 2, eigvals_only=True), tolerance=1e-6)
