from typing import List, Tuple

from lib.partitions.Partition import Partition
from lib.util.errors import InvalidPartitionError


class SkewShape:
    """The cells of outer that are not in inner."""

    def __init__(self, outer, inner=()):
        self.outer = Partition.coerce(outer)
        self.inner = Partition.coerce(inner)

        if not self.outer.contains(self.inner):
            raise InvalidPartitionError(
                f'Invalid "inner" argument passed to SkewShape, {self.inner.parts} is not contained in {self.outer.parts}.')

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def cells(self) -> List[Tuple[int, int]]:
        return [(i, j)
                for i in range(self.outer.height)
                for j in range(self.inner.row(i), self.outer.row(i))]

    def row_range(self, i: int) -> range:
        return range(self.inner.row(i), self.outer.row(i))

    def is_horizontal_strip(self) -> bool:
        return all(self.inner.row(i) >= self.outer.row(i + 1) for i in range(self.outer.height))

    def is_vertical_strip(self) -> bool:
        return all(self.outer.row(i) - self.inner.row(i) <= 1 for i in range(self.outer.height))

    def __eq__(self, other):
        if not isinstance(other, SkewShape):
            return NotImplemented

        return self.outer == other.outer and self.inner == other.inner

    def __hash__(self):
        return hash((self.outer.parts, self.inner.parts))

    def __repr__(self):
        return f'SkewShape({self.outer.parts}/{self.inner.parts})'
