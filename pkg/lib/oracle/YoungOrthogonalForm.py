import numpy as np

from functools import lru_cache
from typing import Dict, List, Tuple

from lib.algebra import AlgebraElement, Permutation
from lib.partitions import Partition, dim_sn, partitions_of
from lib.util.errors import CapExceededError, ParameterError

# a standard tableau as the (row, column) cell of each entry 1..n, 0-indexed
Tableau = Tuple[Tuple[int, int], ...]


@lru_cache(maxsize=None)
def _standard_tableaux(parts: Tuple[int, ...]) -> Tuple[Tableau, ...]:
    if not parts:
        return ((),)

    lam = Partition(parts)
    tableaux = []

    for row in lam.corners():
        cell = (row, lam.row(row) - 1)

        for smaller in _standard_tableaux(lam.remove_cell(row).parts):
            tableaux.append(smaller + (cell,))

    return tuple(sorted(tableaux))


def standard_tableaux(lam) -> List[Tableau]:
    return list(_standard_tableaux(Partition.coerce(lam).parts))


def tableau_rows(tableau: Tableau) -> List[List[int]]:
    rows: Dict[int, Dict[int, int]] = {}

    for entry, (row, column) in enumerate(tableau, start=1):
        rows.setdefault(row, {})[column] = entry

    return [[rows[row][column] for column in sorted(rows[row])] for row in sorted(rows)]


class YoungOrthogonalForm:
    """
    The irrep of S_n indexed by lam, realized on standard tableaux.

    The adjacent transposition s_k acts on a tableau T by r = c(k+1) - c(k), with c the content
    column - row: T -> T / r + sqrt(1 - 1/r^2) T', where T' swaps k and k+1 (zero when T' is
    not standard). Other permutations are built from reduced words.
    """

    def __init__(self, lam, cap: int = 5000):
        self.lam = Partition.coerce(lam)
        self.n = self.lam.weight
        self.dim = dim_sn(self.lam)

        if self.dim > cap:
            raise CapExceededError('dim_sn', self.dim, cap)

        self.tableaux = standard_tableaux(self.lam)
        self.index = {tableau: i for i, tableau in enumerate(self.tableaux)}
        self.adjacent = [self._adjacent_matrix(k) for k in range(1, self.n)]
        self._cache: Dict[Permutation, np.ndarray] = {Permutation.identity(self.n): np.eye(self.dim)}

    def _adjacent_matrix(self, k: int) -> np.ndarray:
        matrix = np.zeros((self.dim, self.dim))

        for tableau, i in self.index.items():
            (row_k, col_k), (row_next, col_next) = tableau[k - 1], tableau[k]
            r = (col_next - row_next) - (col_k - row_k)
            matrix[i, i] = 1.0 / r

            if abs(r) > 1:
                swapped = list(tableau)
                swapped[k - 1], swapped[k] = swapped[k], swapped[k - 1]
                matrix[self.index[tuple(swapped)], i] = np.sqrt(1.0 - 1.0 / r ** 2)

        return matrix

    def matrix(self, pi: Permutation) -> np.ndarray:
        if pi.n != self.n:
            raise ParameterError(f'Invalid "pi" argument, {pi} is not in S_{self.n}.')

        if pi in self._cache:
            return self._cache[pi]

        # pi = (pi s_k) s_k for a descent k, and pi s_k has one inversion fewer
        k = next(k for k in range(1, self.n) if pi(k) > pi(k + 1))
        one_line = list(pi.one_line)
        one_line[k - 1], one_line[k] = one_line[k], one_line[k - 1]
        result = self.matrix(Permutation(one_line)) @ self.adjacent[k - 1]
        self._cache[pi] = result

        return result

    def element(self, x: AlgebraElement) -> np.ndarray:
        result = np.zeros((self.dim, self.dim))

        for pi, coeff in x.terms.items():
            result += float(coeff) * self.matrix(pi)

        return result

    def transposition_matrices(self) -> Dict[Tuple[int, int], np.ndarray]:
        return {(i, j): self.matrix(Permutation.transposition(i, j, self.n))
                for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)}


@lru_cache(maxsize=64)
def _form(parts: Tuple[int, ...], cap: int) -> YoungOrthogonalForm:
    return YoungOrthogonalForm(Partition(parts), cap=cap)


def young_orthogonal_form(lam, cap: int = 5000) -> YoungOrthogonalForm:
    return _form(Partition.coerce(lam).parts, cap)


def irrep_matrices(lam, cap: int = 5000) -> Dict[Tuple[int, int], np.ndarray]:
    """rho_lam of every transposition (i, j), i < j."""
    return young_orthogonal_form(lam, cap).transposition_matrices()


def irrep_element(x: AlgebraElement, lam, cap: int = 5000) -> np.ndarray:
    lam = Partition.coerce(lam)

    if lam.weight != x.n:
        raise ParameterError(f'Invalid "lambda" argument passed to irrep_element, {lam.parts} is not a partition of {x.n}.')

    return young_orthogonal_form(lam, cap).element(x)


def irrep_evaluation_vector(x: AlgebraElement, d: int, n: int = None, cap: int = 5000) -> np.ndarray:
    """rho_lam(x) over every lam of height at most d, flattened and concatenated."""
    n = x.n if n is None else n

    return np.concatenate([irrep_element(x, lam, cap).ravel() for lam in partitions_of(n, d)])
