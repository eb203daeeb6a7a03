from collections import Counter
from math import factorial
from typing import Iterator

from lib.algebra.Permutation import Permutation
from lib.partitions import Partition


class ConjugacyClass:
    """A conjugacy class of S_n, named by its cycle type."""

    def __init__(self, cycle_type):
        self.cycle_type = Partition.coerce(cycle_type)

    @staticmethod
    def of_cycle(k: int, n: int) -> 'ConjugacyClass':
        """The class of k-cycles in S_n."""
        return ConjugacyClass([k] + [1] * (n - k))

    @property
    def n(self) -> int:
        return self.cycle_type.weight

    @property
    def centralizer_order(self) -> int:
        z = 1

        for length, multiplicity in Counter(self.cycle_type.parts).items():
            z *= length ** multiplicity * factorial(multiplicity)

        return z

    @property
    def size(self) -> int:
        return factorial(self.n) // self.centralizer_order

    def representative(self) -> Permutation:
        one_line = list(range(1, self.n + 1))
        start = 1

        for length in self.cycle_type:
            for offset in range(length):
                one_line[start + offset - 1] = start + (offset + 1) % length
            start += length

        return Permutation(one_line)

    def members(self) -> Iterator[Permutation]:
        for permutation in Permutation.all(self.n):
            if permutation.cycle_type() == self.cycle_type:
                yield permutation

    def __eq__(self, other):
        if not isinstance(other, ConjugacyClass):
            return NotImplemented

        return self.cycle_type == other.cycle_type

    def __hash__(self):
        return hash(('class', self.cycle_type.parts))

    def __repr__(self):
        return f'ConjugacyClass({self.cycle_type})'
