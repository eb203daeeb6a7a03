from typing import Dict, List, Tuple

from lib.partitions import Partition, SkewShape


class LRTableau:
    """A Littlewood-Richardson filling of a skew shape."""

    def __init__(self, shape: SkewShape, entries: Dict[Tuple[int, int], int]):
        self.shape = shape
        self.entries = entries

    @property
    def content(self) -> Partition:
        counts = [0] * max(self.entries.values(), default=0)

        for value in self.entries.values():
            counts[value - 1] += 1

        return Partition(counts)

    def reading_word(self) -> List[int]:
        """Rows top to bottom, each read right to left."""
        return [self.entries[(i, j)]
                for i in range(self.shape.outer.height)
                for j in reversed(self.shape.row_range(i))]

    def is_semistandard(self) -> bool:
        for (i, j), value in self.entries.items():
            if (i, j + 1) in self.entries and self.entries[(i, j + 1)] < value:
                return False

            if (i + 1, j) in self.entries and self.entries[(i + 1, j)] <= value:
                return False

        return True

    def is_lattice(self) -> bool:
        counts: Dict[int, int] = {}

        for value in self.reading_word():
            counts[value] = counts.get(value, 0) + 1

            if value > 1 and counts[value] > counts.get(value - 1, 0):
                return False

        return True

    def __repr__(self):
        rows = []

        for i in range(self.shape.outer.height):
            row = ['.'] * self.shape.inner.row(i) + [str(self.entries[(i, j)]) for j in self.shape.row_range(i)]
            rows.append('|' + '|'.join(row) + '|')

        return '\n'.join(rows)
