from bisect import bisect_left
from functools import total_ordering
from itertools import permutations as _permutations
from typing import Iterable, Iterator, List, Sequence, Tuple

from lib.partitions import Partition
from lib.util.errors import ParameterError


@total_ordering
class Permutation:
    """
    An element of S_n in one-line form, values 1..n.

    Products compose right to left, (pi * sigma)(i) = pi(sigma(i)), so that the tensor action
    rho(pi) rho(sigma) = rho(pi * sigma). Permutations order by (cayley_length, one_line).
    """

    __slots__ = ('one_line', '_hash')

    def __init__(self, one_line: Iterable[int]):
        one_line = tuple(int(value) for value in one_line)

        if sorted(one_line) != list(range(1, len(one_line) + 1)):
            raise ParameterError(f'Invalid "one_line" argument passed to Permutation, {one_line} is not a bijection of 1..n.')

        self.one_line: Tuple[int, ...] = one_line
        self._hash = hash(one_line)

    @staticmethod
    def identity(n: int) -> 'Permutation':
        return Permutation(range(1, n + 1))

    @staticmethod
    def transposition(i: int, j: int, n: int) -> 'Permutation':
        if i == j or not (1 <= i <= n and 1 <= j <= n):
            raise ParameterError(f'Invalid transposition ({i} {j}) in S_{n}.')

        one_line = list(range(1, n + 1))
        one_line[i - 1], one_line[j - 1] = j, i

        return Permutation(one_line)

    @staticmethod
    def from_cycle(cycle: Sequence[int], n: int) -> 'Permutation':
        one_line = list(range(1, n + 1))

        for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
            one_line[a - 1] = b

        return Permutation(one_line)

    @staticmethod
    def from_word(word: Sequence[Tuple[int, int]], n: int) -> 'Permutation':
        """The product of the transpositions in word, left to right."""
        result = Permutation.identity(n)

        for i, j in word:
            result = result * Permutation.transposition(i, j, n)

        return result

    @staticmethod
    def all(n: int) -> Iterator['Permutation']:
        for one_line in _permutations(range(1, n + 1)):
            yield Permutation(one_line)

    @property
    def n(self) -> int:
        return len(self.one_line)

    def __call__(self, i: int) -> int:
        return self.one_line[i - 1]

    def __mul__(self, other: 'Permutation') -> 'Permutation':
        if not isinstance(other, Permutation):
            return NotImplemented

        if other.n != self.n:
            raise ParameterError(f'Cannot multiply permutations of S_{self.n} and S_{other.n}.')

        return Permutation(self.one_line[value - 1] for value in other.one_line)

    def inverse(self) -> 'Permutation':
        inverse = [0] * self.n

        for i, value in enumerate(self.one_line, start=1):
            inverse[value - 1] = i

        return Permutation(inverse)

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        cycles = []

        for start in range(1, self.n + 1):
            if start in seen:
                continue

            cycle = [start]
            seen.add(start)
            current = self(start)

            while current != start:
                cycle.append(current)
                seen.add(current)
                current = self(current)

            cycles.append(tuple(cycle))

        return cycles

    def cycle_type(self) -> Partition:
        return Partition(sorted((len(cycle) for cycle in self.cycles()), reverse=True))

    @property
    def cayley_length(self) -> int:
        """Minimal number of transpositions whose product is this permutation."""
        return self.n - len(self.cycles())

    @property
    def sign(self) -> int:
        return -1 if self.cayley_length % 2 else 1

    def inversions(self) -> int:
        return sum(1
                   for i in range(self.n)
                   for j in range(i + 1, self.n)
                   if self.one_line[i] > self.one_line[j])

    def longest_decreasing_subsequence(self) -> int:
        # patience sorting on the negated values
        piles: List[int] = []

        for value in self.one_line:
            position = bisect_left(piles, -value)

            if position == len(piles):
                piles.append(-value)
            else:
                piles[position] = -value

        return len(piles)

    def is_identity(self) -> bool:
        return all(value == i for i, value in enumerate(self.one_line, start=1))

    def to_list(self) -> List[int]:
        return list(self.one_line)

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented

        return self.one_line == other.one_line

    def __lt__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented

        return (self.cayley_length, self.one_line) < (other.cayley_length, other.one_line)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        nontrivial = [cycle for cycle in self.cycles() if len(cycle) > 1]

        if not nontrivial:
            return f'e[{self.n}]'

        return ''.join('(' + ' '.join(str(i) for i in cycle) + ')' for cycle in nontrivial)
