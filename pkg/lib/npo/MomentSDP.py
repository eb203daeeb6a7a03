import numpy as np

from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple

from scipy import sparse
from scipy.linalg import lstsq, null_space, qr

from lib.algebra import Permutation, antisymmetrizer, cycle_sum, words_up_to
from lib.characters import gamma
from lib.oracle.GraphSpec import GraphSpec
from lib.npo.MomentPencil import MomentPencil
from lib.oracle.TensorOperator import apply_permutation
from lib.partitions import Partition
from lib.util.errors import InvalidHeightError, NumericalFailure, ParameterError, WeightMismatchError
from lib.util.logger import init_logger

Row = Dict[int, float]

# relative singular value cutoff when eliminating the equality constraints
NULL_SPACE_RCOND = 1e-10

# rows of the constraint matrix folded into the triangular factor at a time
QR_CHUNK_ROWS = 4096


def moment_vector(psi: np.ndarray, index: Iterable[Permutation], d: int) -> Dict[Permutation, float]:
    """x_pi = <psi| rho(pi) |psi> for every pi in index, psi a real state on (C^d)^n."""
    psi = np.asarray(psi)

    return {pi: float(np.real(np.vdot(psi, apply_permutation(pi, psi, d)))) for pi in index}


class MomentSDP:
    """
    Level-ell moment relaxation of the d-QMC problem on g, optionally localized to one lambda-block.

    Variables are indexed by the permutations with at most min(2 ell, n - 1) transpositions,
    pi and its inverse sharing one variable. The moment matrix is indexed by the (d+1)-good words of
    length at most ell, and every linear constraint is stored as a sparse row with a right-hand side.
    """

    def __init__(self, g: GraphSpec, d: int, ell: int, localization=None, **kwargs):
        self.logger = kwargs.get('logger', init_logger(__name__, show_debug=kwargs.get('show_debug', False)))

        n = g.n

        if n < 2:
            raise ParameterError(f'Invalid "graph" argument passed to build_relaxation, need at least 2 vertices (got {n}).')

        if d < 1:
            raise ParameterError(f'Invalid "d" argument passed to build_relaxation, d = {d} must be positive.')

        if not 1 <= ell <= n - 1:
            raise ParameterError(f'Invalid "level" argument passed to build_relaxation, need 1 <= level <= {n - 1} (got {ell}).')

        self.localization: Optional[Partition] = None

        if localization is not None:
            self.localization = Partition.coerce(localization)

            if self.localization.weight != n:
                raise WeightMismatchError(f'Invalid "irrep" argument, {self.localization.parts} is not a partition of {n}.')

            if self.localization.height > d:
                raise InvalidHeightError(f'Invalid "irrep" argument, {self.localization.parts} has more than d = {d} rows.')

        self.graph = g
        self.n, self.d, self.ell = n, d, ell
        self.index_length = min(2 * ell, n - 1)

        self.index: List[Permutation] = sorted(pi for pi in Permutation.all(n) if pi.cayley_length <= self.index_length)
        self._in_index = set(self.index)

        self.variables: List[Permutation] = sorted({self.canonical(pi) for pi in self.index})
        self.variable_of: Dict[Permutation, int] = {pi: i for i, pi in enumerate(self.variables)}

        self.basis: List[Permutation] = words_up_to(n, d, ell)
        self.moment_matrix = np.array([[self.variable(u.inverse() * w) for w in self.basis] for u in self.basis],
                                      dtype=np.int64)

        self.objective: Row = self._objective()
        self.constraints: List[Tuple[Row, float]] = self._constraints()

        self.logger.debug(f'MomentSDP(n={n}, d={d}, level={ell}, irrep={self.localization}): '
                          f'{len(self.index)} indexed permutations, {len(self.variables)} variables, '
                          f'basis size {self.basis_size}, {len(self.constraints)} constraints')

    @staticmethod
    def canonical(pi: Permutation) -> Permutation:
        return min(pi, pi.inverse())

    def variable(self, pi: Permutation) -> int:
        return self.variable_of[self.canonical(pi)]

    @property
    def basis_size(self) -> int:
        return len(self.basis)

    @property
    def num_variables(self) -> int:
        return len(self.variables)

    def _objective(self) -> Row:
        row: Row = {}
        identity = self.variable(Permutation.identity(self.n))

        for i, j, w in self.graph.edges:
            swap = self.variable(Permutation.transposition(i, j, self.n))
            row[identity] = row.get(identity, 0.0) + 2 * w
            row[swap] = row.get(swap, 0.0) - 2 * w

        return {v: c for v, c in row.items() if c != 0}

    def _add_row(self, rows: Dict[tuple, Tuple[Row, float]], terms: Iterable[Tuple[Permutation, float]], rhs: float = 0.0):
        row: Row = {}

        for pi, coeff in terms:
            v = self.variable(pi)
            row[v] = row.get(v, 0.0) + coeff

        row = {v: c for v, c in row.items() if c != 0}

        if not row:
            return

        # rows equal up to sign are the same constraint
        lead = row[min(row)]
        key = (tuple(sorted((v, c / lead) for v, c in row.items())), rhs / lead)
        rows.setdefault(key, (row, rhs))

    def _constraints(self) -> List[Tuple[Row, float]]:
        rows: Dict[tuple, Tuple[Row, float]] = {}
        identity = Permutation.identity(self.n)

        self._add_row(rows, [(identity, 1.0)], 1.0)

        if self.d + 1 <= self.n:
            for letters in combinations(range(1, self.n + 1), self.d + 1):
                signed = [(sigma, float(sign)) for sigma, sign in antisymmetrizer(letters, self.n).terms.items()]

                for tau in self.index:
                    products = [(tau * sigma, sign) for sigma, sign in signed]

                    if all(pi in self._in_index for pi, _ in products):
                        self._add_row(rows, products)

        if self.localization is not None:
            for k in range(1, min(self.d, self.n)):
                cycles = cycle_sum(k, self.n).support()
                scalar = float(gamma(k + 1, self.localization))

                for w in self.index:
                    products = [(w * c, 1.0) for c in cycles]

                    if all(pi in self._in_index for pi, _ in products):
                        self._add_row(rows, products + [(w, -scalar)])

        return list(rows.values())

    def constraint_matrix(self) -> Tuple[sparse.csr_matrix, np.ndarray]:
        data, row_ids, col_ids = [], [], []
        rhs = np.zeros(len(self.constraints))

        for r, (row, value) in enumerate(self.constraints):
            rhs[r] = value

            for v, coeff in row.items():
                row_ids.append(r)
                col_ids.append(v)
                data.append(coeff)

        a = sparse.csr_matrix((data, (row_ids, col_ids)), shape=(len(self.constraints), self.num_variables))

        return a, rhs

    def objective_vector(self) -> np.ndarray:
        costs = np.zeros(self.num_variables)

        for v, coeff in self.objective.items():
            costs[v] = coeff

        return costs

    def moments_from_state(self, psi: np.ndarray) -> np.ndarray:
        """The variable vector induced by a real state, used to check that every constraint is valid."""
        values = moment_vector(psi, self.variables, self.d)

        return np.array([values[pi] for pi in self.variables])

    def constraint_residual(self, x: np.ndarray) -> float:
        a, rhs = self.constraint_matrix()

        return float(np.max(np.abs(a @ x - rhs))) if len(rhs) else 0.0

    def _triangular_factor(self, a: sparse.csr_matrix, rhs: np.ndarray) -> np.ndarray:
        """R of the QR factorization of [A | b], built chunk by chunk so A is never dense."""
        width = self.num_variables + 1
        factor = np.zeros((0, width))

        for start in range(0, a.shape[0], QR_CHUNK_ROWS):
            stop = min(start + QR_CHUNK_ROWS, a.shape[0])
            block = np.hstack([a[start:stop].toarray(), rhs[start:stop, None]])
            factor = qr(np.vstack([factor, block]), mode='r')[0][:width]

        return factor

    def reduce(self) -> MomentPencil:
        """
        Eliminate the equality constraints: x = x0 + N y with x0 a least-squares solution and N a
        null-space basis of the constraint matrix, so the moment matrix becomes an affine pencil in y.
        """
        a, rhs = self.constraint_matrix()
        factor = self._triangular_factor(a, rhs)
        m = self.num_variables

        rows = min(factor.shape[0], m)
        square, target = np.zeros((m, m)), np.zeros(m)
        square[:rows], target[:rows] = factor[:rows, :m], factor[:rows, m]

        x0 = lstsq(square, target, cond=NULL_SPACE_RCOND)[0]
        null_basis = null_space(square, rcond=NULL_SPACE_RCOND)
        residual = float(np.max(np.abs(a @ x0 - rhs)))

        if residual > 1e-8:
            raise NumericalFailure(f'The moment constraints are inconsistent, least-squares residual {residual:.3e}.')

        self.logger.debug(f'reduce: {a.shape[0]} constraints on {m} variables leave {null_basis.shape[1]} free '
                          f'directions (residual {residual:.3e})')

        return MomentPencil.from_reduction(x0, null_basis, self.moment_matrix, self.objective_vector(), residual)

    def to_dict(self) -> dict:
        return {
            'n': self.n,
            'd': self.d,
            'level': self.ell,
            'irrep': self.localization.to_list() if self.localization is not None else None,
            'basis_size': self.basis_size,
            'variables': self.num_variables,
            'constraints': len(self.constraints),
        }

    def __repr__(self):
        return f'MomentSDP({self.to_dict()})'


def build_relaxation(g: GraphSpec, d: int, ell: int, localization=None, **kwargs) -> MomentSDP:
    return MomentSDP(g, d, ell, localization=localization, **kwargs)
