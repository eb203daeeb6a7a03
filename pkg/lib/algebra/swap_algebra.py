from fractions import Fraction
from itertools import combinations, permutations
from typing import Dict, Iterable, List, Optional, Tuple

from lib.algebra.AlgebraElement import AlgebraElement
from lib.algebra.Permutation import Permutation
from lib.util.errors import ParameterError, StraighteningError
from lib.util.logger import init_logger

logger = init_logger(__name__)


def is_good(pi: Permutation, d: int) -> bool:
    """True iff pi has no decreasing subsequence of length d + 1."""
    return pi.longest_decreasing_subsequence() <= d


def _signed_permutations(letters: Tuple[int, ...], n: int) -> Iterable[Tuple[Permutation, int]]:
    """Every permutation of S_n supported on letters, with its sign."""
    for image in permutations(letters):
        one_line = list(range(1, n + 1))

        for source, target in zip(letters, image):
            one_line[source - 1] = target

        sigma = Permutation(one_line)
        yield sigma, sigma.sign


def antisymmetrizer(indices: Iterable[int], n: int) -> AlgebraElement:
    indices = tuple(sorted(set(indices)))

    if len(indices) > n or any(not 1 <= i <= n for i in indices):
        raise ParameterError(f'Invalid "indices" argument passed to antisymmetrizer, {indices} is not a subset of 1..{n}.')

    return AlgebraElement(n, {sigma: sign for sigma, sign in _signed_permutations(indices, n)})


def _violation(pi: Permutation, d: int) -> Optional[Tuple[int, ...]]:
    """The lexicographically largest tuple of d + 1 positions on which pi decreases."""
    for positions in reversed(list(combinations(range(1, pi.n + 1), d + 1))):
        values = [pi(position) for position in positions]

        if all(values[a] > values[a + 1] for a in range(d)):
            return positions

    return None


def straighten(x: AlgebraElement, d: int, cap: int = 10 ** 6, certify: bool = False) -> AlgebraElement:
    """
    Rewrite x into an equivalent element supported on (d+1)-good permutations.

    Each step takes the largest bad permutation pi in the support, finds the value set V of
    its largest decreasing (d+1)-pattern and uses A_V * pi = 0, where A_V is the antisymmetrizer
    on V: pi is replaced by -sum over sigma != e in S(V) of sgn(sigma) * sigma * pi. Every
    replacement has strictly fewer inversions than pi, so the rewriting terminates.
    """
    if d < 1:
        raise ParameterError(f'Invalid "d" argument passed to straighten, d = {d} must be positive.')

    n = x.n
    terms: Dict[Permutation, Fraction] = dict(x.terms)
    good: Dict[Permutation, bool] = {}
    rules: Dict[Tuple[int, ...], List[Tuple[Permutation, int]]] = {}
    steps = 0

    def is_bad(pi: Permutation) -> bool:
        if pi not in good:
            good[pi] = is_good(pi, d)

        return not good[pi]

    while True:
        bad = [pi for pi in terms if is_bad(pi)]

        if not bad:
            break

        steps += 1

        if steps > cap:
            raise StraighteningError(f'straighten did not terminate within {cap} steps ({len(bad)} bad terms left).')

        pi = max(bad)
        coeff = terms.pop(pi)
        values = tuple(sorted(pi(position) for position in _violation(pi, d)))

        if values not in rules:
            rules[values] = [(sigma, sign) for sigma, sign in _signed_permutations(values, n) if not sigma.is_identity()]

        for sigma, sign in rules[values]:
            target = sigma * pi
            total = terms.get(target, Fraction(0)) - sign * coeff

            if total == 0:
                terms.pop(target, None)
            else:
                terms[target] = total

    logger.debug(f'straighten: {steps} steps, {len(x.terms)} -> {len(terms)} terms (d={d}, n={n})')

    result = AlgebraElement(n, terms)

    if certify:
        # imported here because the oracle depends on this module
        from lib.oracle.YoungOrthogonalForm import irrep_evaluation_vector
        import numpy as np

        if not np.allclose(irrep_evaluation_vector(x, d), irrep_evaluation_vector(result, d), atol=1e-9):
            raise StraighteningError('straighten result differs from its input under the irrep evaluation.')

    return result


def cycle_sum(k: int, n: int) -> AlgebraElement:
    """c_k, the sum of all (k+1)-cycles of S_n, each counted once."""
    if k < 1 or k + 1 > n:
        raise ParameterError(f'Invalid "k" argument passed to cycle_sum, need 1 <= k <= {n - 1}.')

    terms = {}

    for letters in combinations(range(1, n + 1), k + 1):
        first, rest = letters[0], letters[1:]

        for order in permutations(rest):
            terms[Permutation.from_cycle((first,) + order, n)] = 1

    return AlgebraElement(n, terms)


def _exact(weight: float) -> Fraction:
    return Fraction(repr(float(weight)))


def hamiltonian_element(g) -> AlgebraElement:
    """h_G = sum over edges of 2 w_ij (e - (i j))."""
    element = AlgebraElement(g.n)
    identity = Permutation.identity(g.n)

    for i, j, w in g.edges:
        weight = 2 * _exact(w)
        element._accumulate(identity, weight)
        element._accumulate(Permutation.transposition(i, j, g.n), -weight)

    return element


def words_up_to(n: int, d: int, ell: int) -> List[Permutation]:
    """All (d+1)-good permutations of S_n with cayley_length <= ell, ordered by (cayley_length, one_line)."""
    if ell < 0:
        raise ParameterError(f'Invalid "ell" argument passed to words_up_to, {ell} is negative.')

    layer = {Permutation.identity(n)}
    seen = set(layer)
    transpositions = [Permutation.transposition(i, j, n) for i, j in combinations(range(1, n + 1), 2)]

    for _ in range(min(ell, n - 1)):
        # a product with one more transposition is either new or already seen one layer down
        layer = {pi * tau for pi in layer for tau in transpositions} - seen
        seen |= layer

    return sorted(pi for pi in seen if is_good(pi, d))
