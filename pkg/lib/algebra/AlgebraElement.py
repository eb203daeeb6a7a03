from fractions import Fraction
from typing import Dict, Iterable, List, Tuple, Union

from lib.algebra.Permutation import Permutation
from lib.util.errors import ParameterError

Scalar = Union[int, Fraction]


class AlgebraElement:
    """
    A finitely supported rational combination of permutations of S_n.

    Zero coefficients are never stored, so two elements are equal exactly when their
    term maps are equal.
    """

    def __init__(self, n: int, terms: Dict[Permutation, Scalar] = None):
        self.n = n
        self.terms: Dict[Permutation, Fraction] = {}

        for permutation, coeff in (terms or {}).items():
            if permutation.n != n:
                raise ParameterError(f'Invalid "terms" argument passed to AlgebraElement, {permutation} is not in S_{n}.')

            coeff = Fraction(coeff)

            if coeff != 0:
                self.terms[permutation] = coeff

    @staticmethod
    def zero(n: int) -> 'AlgebraElement':
        return AlgebraElement(n)

    @staticmethod
    def identity(n: int) -> 'AlgebraElement':
        return AlgebraElement(n, {Permutation.identity(n): 1})

    @staticmethod
    def of(permutation: Permutation, coeff: Scalar = 1) -> 'AlgebraElement':
        return AlgebraElement(permutation.n, {permutation: coeff})

    @staticmethod
    def from_terms(n: int, terms: Iterable[Tuple[Permutation, Scalar]]) -> 'AlgebraElement':
        element = AlgebraElement(n)

        for permutation, coeff in terms:
            element._accumulate(permutation, Fraction(coeff))

        return element

    def _accumulate(self, permutation: Permutation, coeff: Fraction):
        total = self.terms.get(permutation, Fraction(0)) + coeff

        if total == 0:
            self.terms.pop(permutation, None)
        else:
            self.terms[permutation] = total

    def support(self) -> List[Permutation]:
        return sorted(self.terms)

    def coefficient(self, permutation: Permutation) -> Fraction:
        return self.terms.get(permutation, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def copy(self) -> 'AlgebraElement':
        return AlgebraElement(self.n, dict(self.terms))

    def _check(self, other: 'AlgebraElement'):
        if other.n != self.n:
            raise ParameterError(f'Cannot combine elements of C[S_{self.n}] and C[S_{other.n}].')

    def __add__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        self._check(other)
        result = self.copy()

        for permutation, coeff in other.terms.items():
            result._accumulate(permutation, coeff)

        return result

    def __neg__(self) -> 'AlgebraElement':
        return AlgebraElement(self.n, {permutation: -coeff for permutation, coeff in self.terms.items()})

    def __sub__(self, other: 'AlgebraElement') -> 'AlgebraElement':
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return AlgebraElement(self.n, {permutation: coeff * other for permutation, coeff in self.terms.items()})

        if not isinstance(other, AlgebraElement):
            return NotImplemented

        self._check(other)
        result = AlgebraElement(self.n)

        for left, a in self.terms.items():
            for right, b in other.terms.items():
                result._accumulate(left * right, a * b)

        return result

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other

        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, AlgebraElement):
            return NotImplemented

        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def to_json(self) -> dict:
        return {
            'terms': [{'perm': permutation.to_list(), 'coeff': f'{coeff.numerator}/{coeff.denominator}'}
                      for permutation, coeff in sorted(self.terms.items())]
        }

    @staticmethod
    def from_json(n: int, payload: dict) -> 'AlgebraElement':
        return AlgebraElement.from_terms(n, ((Permutation(term['perm']), Fraction(term['coeff'])) for term in payload['terms']))

    def __repr__(self):
        if not self.terms:
            return '0'

        return ' + '.join(f'{coeff}*{permutation}' for permutation, coeff in sorted(self.terms.items()))
