import numpy as np

from functools import reduce
from typing import List, Sequence

from lib.util.errors import CapExceededError, ParameterError


def gellmann_basis(d: int) -> List[np.ndarray]:
    """
    The d^2 - 1 generalized Gell-Mann matrices: the symmetric family E_ab + E_ba, the antisymmetric
    family i(E_ba - E_ab), then the diagonal family, all normalized to tr(g_a g_b) = 2 delta_ab.
    For d = 2 these are the Pauli matrices in the usual order.
    """
    if d < 2:
        raise ParameterError(f'Invalid "d" argument passed to gellmann_basis, d = {d} < 2.')

    symmetric, antisymmetric, diagonal = [], [], []

    for a in range(d):
        for b in range(a + 1, d):
            matrix = np.zeros((d, d), dtype=complex)
            matrix[a, b] = matrix[b, a] = 1
            symmetric.append(matrix)

            matrix = np.zeros((d, d), dtype=complex)
            matrix[a, b], matrix[b, a] = -1j, 1j
            antisymmetric.append(matrix)

    for k in range(2, d + 1):
        entries = np.zeros(d)
        entries[:k - 1] = 1
        entries[k - 1] = -(k - 1)
        diagonal.append(np.sqrt(2.0 / (k * (k - 1))) * np.diag(entries).astype(complex))

    return symmetric + antisymmetric + diagonal


def swap_matrix(d: int) -> np.ndarray:
    swap = np.zeros((d * d, d * d))

    for a in range(d):
        for b in range(d):
            swap[b * d + a, a * d + b] = 1

    return swap


def swap_gellmann_residual(d: int, basis: Sequence[np.ndarray] = None) -> float:
    """Frobenius norm of Swap - I/d - (1/2) sum_a g_a (x) g_a on C^d (x) C^d."""
    basis = gellmann_basis(d) if basis is None else basis
    expansion = np.eye(d * d) / d + 0.5 * sum(np.kron(g, g) for g in basis)

    return float(np.linalg.norm(swap_matrix(d) - expansion))


def verify_swap_gellmann(d: int, tolerance: float = 1e-13, basis: Sequence[np.ndarray] = None) -> bool:
    return swap_gellmann_residual(d, basis) < tolerance


def _site_operator(single: np.ndarray, site: int, n: int, d: int) -> np.ndarray:
    factors = [np.eye(d, dtype=complex)] * n
    factors[site - 1] = single

    return reduce(np.kron, factors)


def gellmann_hamiltonian(g, d: int, cap: int = 4096) -> np.ndarray:
    """Dense sum over edges of 2 w_ij ((d-1)/d I - (1/2) sum_a g_a^(i) g_a^(j))."""
    dim = d ** g.n

    if dim > cap:
        raise CapExceededError('d^n', dim, cap)

    basis = gellmann_basis(d) if d >= 2 else []
    result = np.zeros((dim, dim), dtype=complex)

    for i, j, w in g.edges:
        coupling = sum((_site_operator(a, i, g.n, d) @ _site_operator(a, j, g.n, d) for a in basis),
                       np.zeros((dim, dim), dtype=complex))
        result += 2 * w * ((d - 1) / d * np.eye(dim) - 0.5 * coupling)

    return result
