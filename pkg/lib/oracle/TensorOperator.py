import numpy as np

from functools import lru_cache
from typing import Dict, Tuple

from scipy import sparse
from scipy.sparse.linalg import LinearOperator

from lib.algebra import AlgebraElement, Permutation, hamiltonian_element
from lib.util.errors import CapExceededError, NumericalFailure, ParameterError


@lru_cache(maxsize=4096)
def _permutation_index(one_line: Tuple[int, ...], d: int) -> np.ndarray:
    n = len(one_line)
    inverse = [0] * n

    for i, value in enumerate(one_line):
        inverse[value - 1] = i

    index = np.arange(d ** n).reshape((d,) * n).transpose(inverse).reshape(-1)
    index.setflags(write=False)

    return index


def permutation_index(pi: Permutation, d: int) -> np.ndarray:
    """Index array idx with rho(pi) v = v[idx]."""
    return _permutation_index(pi.one_line, d)


def apply_permutation(pi: Permutation, v: np.ndarray, d: int) -> np.ndarray:
    """Move the tensor factor at position i to position pi(i)."""
    if v.shape[0] != d ** pi.n:
        raise ParameterError(f'Invalid "v" argument passed to apply_permutation, length {v.shape[0]} != {d}^{pi.n}.')

    return v[permutation_index(pi, d)]


class TensorOperator:
    """
    A real combination of permutation actions on (C^d)^{otimes n}.

    The operator is applied by gathering coordinates, one index array per permutation, and is
    only materialized as a matrix on request.
    """

    def __init__(self, n: int, d: int, terms: Dict[Permutation, float] = None):
        self.n = n
        self.d = d
        self.terms: Dict[Permutation, float] = {pi: float(c) for pi, c in (terms or {}).items() if c != 0}

    @staticmethod
    def from_element(x: AlgebraElement, d: int) -> 'TensorOperator':
        return TensorOperator(x.n, d, {pi: float(coeff) for pi, coeff in x.terms.items()})

    @property
    def dim(self) -> int:
        return self.d ** self.n

    @property
    def shape(self) -> Tuple[int, int]:
        return self.dim, self.dim

    def apply(self, v: np.ndarray) -> np.ndarray:
        if v.shape[0] != self.dim:
            raise ParameterError(f'Invalid "v" argument passed to TensorOperator.apply, length {v.shape[0]} != {self.dim}.')

        result = np.zeros(v.shape, dtype=np.result_type(v.dtype, np.float64))

        for pi, coeff in self.terms.items():
            result += coeff * v[permutation_index(pi, self.d)]

        return result

    def to_sparse(self) -> sparse.csr_matrix:
        if not self.terms:
            return sparse.csr_matrix(self.shape)

        rows = np.tile(np.arange(self.dim), len(self.terms))
        columns = np.concatenate([permutation_index(pi, self.d) for pi in self.terms])
        values = np.repeat(list(self.terms.values()), self.dim)

        # duplicate (row, column) pairs are summed on conversion
        return sparse.coo_matrix((values, (rows, columns)), shape=self.shape).tocsr()

    def to_dense(self, cap: int = 4096) -> np.ndarray:
        if self.dim > cap:
            raise CapExceededError('d^n', self.dim, cap)

        return self.to_sparse().toarray()

    def as_linear_operator(self) -> LinearOperator:
        return LinearOperator(self.shape, matvec=self.apply, rmatvec=self.apply, dtype=np.float64)

    def check_self_adjoint(self, seed: int = 0, tolerance: float = 1e-10):
        rng = np.random.default_rng(seed)
        u, v = rng.standard_normal(self.dim), rng.standard_normal(self.dim)
        left, right = u @ self.apply(v), self.apply(u) @ v

        if abs(left - right) > tolerance * max(1.0, abs(left)):
            raise NumericalFailure(f'Operator is not self-adjoint: <u, Av> = {left}, <Au, v> = {right}.')

    def __add__(self, other: 'TensorOperator') -> 'TensorOperator':
        terms = dict(self.terms)

        for pi, coeff in other.terms.items():
            terms[pi] = terms.get(pi, 0.0) + coeff

        return TensorOperator(self.n, self.d, terms)

    def __mul__(self, other):
        if isinstance(other, (int, float)):
            return TensorOperator(self.n, self.d, {pi: coeff * other for pi, coeff in self.terms.items()})

        if not isinstance(other, TensorOperator):
            return NotImplemented

        terms: Dict[Permutation, float] = {}

        for left, a in self.terms.items():
            for right, b in other.terms.items():
                product = left * right
                terms[product] = terms.get(product, 0.0) + a * b

        return TensorOperator(self.n, self.d, terms)

    __rmul__ = __mul__

    def __repr__(self):
        return f'TensorOperator(n={self.n}, d={self.d}, terms={len(self.terms)})'


def hamiltonian(g, d: int) -> TensorOperator:
    """H_G = sum over edges of 2 w_ij (I - Swap_ij) acting on (C^d)^{otimes n}."""
    return TensorOperator.from_element(hamiltonian_element(g), d)
