import numpy as np

from typing import Dict, Iterable, Tuple

from lib.algebra import AlgebraElement, Permutation, antisymmetrizer, basis_family, FAMILY_DEGREE
from lib.oracle.TensorOperator import TensorOperator
from lib.oracle.YoungOrthogonalForm import irrep_element, irrep_evaluation_vector
from lib.util.errors import CapExceededError, ParameterError


def degree_relation_residuals(d: int, n: int = None, cap: int = 4096, seed: int = 0) -> Tuple[float, float]:
    """
    Norm of the antisymmetrizer on 1..d+1 under the tensor action, and its norm in the
    irrep (n-d, 1^d), which has d+1 rows.
    """
    n = d + 1 if n is None else n

    if n < d + 1:
        raise ParameterError(f'Invalid "n" argument passed to verify_degree_relation, need n >= {d + 1}.')

    relation = antisymmetrizer(range(1, d + 2), n)
    op = TensorOperator.from_element(relation, d)

    try:
        tensor_norm = float(np.linalg.norm(op.to_dense(cap), 2))
    except CapExceededError:
        probes = np.random.default_rng(seed).standard_normal((op.dim, 4))
        tensor_norm = float(np.max(np.linalg.norm(op.apply(probes), axis=0) / np.linalg.norm(probes, axis=0)))

    tall = [n - d] + [1] * d if n > d + 1 else [1] * (d + 1)
    irrep_norm = float(np.linalg.norm(irrep_element(relation, tall), 2))

    return tensor_norm, irrep_norm


def verify_degree_relation(d: int, n: int = None, tolerance: float = 1e-12, cap: int = 4096) -> bool:
    tensor_norm, irrep_norm = degree_relation_residuals(d, n, cap)

    return tensor_norm < tolerance and irrep_norm > tolerance


def evaluation_rank(permutations: Iterable[Permutation], d: int, n: int) -> int:
    """Rank of the span of the given permutations in the d-swap algebra on n letters."""
    rows = [irrep_evaluation_vector(AlgebraElement.of(pi), d, n) for pi in permutations]

    if not rows:
        return 0

    return int(np.linalg.matrix_rank(np.vstack(rows)))


def low_degree_independence(d: int, n: int) -> Dict[str, int]:
    """Products of at most d-1 transpositions should be independent in the d-swap algebra."""
    words = [pi for pi in Permutation.all(n) if pi.cayley_length <= d - 1]

    return {'size': len(words), 'rank': evaluation_rank(words, d, n)}


def basis_family_ranks(name: str, n: int, spanning: bool = True) -> Dict[str, int]:
    """Size and rank of a named basis family, and the rank of every product of that many swaps."""
    degree, d = FAMILY_DEGREE[name]
    family = basis_family(name, n)
    report = {'size': len(family), 'rank': evaluation_rank(family, d, n)}

    if spanning:
        report['span_rank'] = evaluation_rank((pi for pi in Permutation.all(n) if pi.cayley_length <= degree), d, n)

    return report
