from functools import total_ordering
from typing import Iterable, Iterator, List, Tuple

from lib.util.errors import InvalidPartitionError


@total_ordering
class Partition:
    """
    A weakly decreasing sequence of positive integers.

    Trailing zeros are trimmed on construction, so (2, 1, 0) and (2, 1) are the same partition.
    Partitions compare equal to (and hash like) the tuple of their parts, and order
    reverse-lexicographically: (4) comes before (3, 1), which comes before (2, 2).
    """

    __slots__ = ('parts',)

    def __init__(self, parts: Iterable[int] = ()):
        parts = [int(part) for part in parts]

        while parts and parts[-1] == 0:
            parts.pop()

        for i, part in enumerate(parts):
            if part <= 0:
                raise InvalidPartitionError(f'Invalid "parts" argument passed to Partition, {tuple(parts)} has a non-positive part.')

            if i > 0 and part > parts[i - 1]:
                raise InvalidPartitionError(f'Invalid "parts" argument passed to Partition, {tuple(parts)} is not weakly decreasing.')

        self.parts: Tuple[int, ...] = tuple(parts)

    @staticmethod
    def parse(text: str) -> 'Partition':
        text = text.strip().strip('()[]')

        if text in ('', '0'):
            return Partition()

        try:
            return Partition(int(token) for token in text.replace(' ', '').split(','))
        except ValueError as error:
            if isinstance(error, InvalidPartitionError):
                raise
            raise InvalidPartitionError(f'Invalid "partition" argument "{text}", expected comma separated integers.')

    @staticmethod
    def coerce(value) -> 'Partition':
        if isinstance(value, Partition):
            return value

        if isinstance(value, str):
            return Partition.parse(value)

        return Partition(value)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def height(self) -> int:
        return len(self.parts)

    def conjugate(self) -> 'Partition':
        if not self.parts:
            return Partition()

        return Partition(sum(1 for part in self.parts if part > j) for j in range(self.parts[0]))

    def padded(self, length: int) -> Tuple[int, ...]:
        return self.parts + (0,) * (length - len(self.parts))

    def row(self, i: int) -> int:
        """The i-th part, 0-indexed, with zero past the last row."""
        return self.parts[i] if i < len(self.parts) else 0

    def cells(self) -> Iterator[Tuple[int, int]]:
        for i, part in enumerate(self.parts):
            for j in range(part):
                yield i, j

    def contains(self, other: 'Partition') -> bool:
        other = Partition.coerce(other)

        if other.height > self.height:
            return False

        return all(part <= self.parts[i] for i, part in enumerate(other.parts))

    def corners(self) -> List[int]:
        """Rows whose last cell can be removed."""
        return [i for i in range(self.height) if self.row(i) > self.row(i + 1)]

    def remove_cell(self, row: int) -> 'Partition':
        parts = list(self.parts)
        parts[row] -= 1
        return Partition(parts)

    def to_list(self) -> List[int]:
        return list(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, index):
        return self.parts[index]

    def __bool__(self):
        return bool(self.parts)

    def __eq__(self, other):
        if isinstance(other, Partition):
            return self.parts == other.parts

        if isinstance(other, (tuple, list)):
            return self.parts == tuple(other)

        return NotImplemented

    def __lt__(self, other):
        other = Partition.coerce(other)
        # reverse lexicographic: larger leading parts come first
        return self.parts > other.parts

    def __hash__(self):
        return hash(self.parts)

    def __repr__(self):
        return f'Partition{self.parts}' if len(self.parts) != 1 else f'Partition({self.parts[0]},)'

    def __str__(self):
        return ','.join(str(part) for part in self.parts)
