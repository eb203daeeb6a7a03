from collections import deque
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import FrozenSet, List, Tuple

from lib.partitions import Partition, SkewShape, hook_lengths
from lib.util.errors import InternalConsistencyError

Diagram = FrozenSet[Tuple[int, int]]


def _as_shape(shape) -> SkewShape:
    if isinstance(shape, SkewShape):
        return shape

    return SkewShape(Partition.coerce(shape))


def excited_diagrams(shape) -> List[Diagram]:
    """
    All excited diagrams of inner inside outer, found by BFS from the inner diagram itself.

    A cell (i, j) of a diagram may move to (i+1, j+1) when that cell and its two
    neighbours (i+1, j), (i, j+1) lie in outer and are all free.
    """
    shape = _as_shape(shape)
    outer = set(shape.outer.cells())
    start: Diagram = frozenset(shape.inner.cells())

    seen = {start}
    queue = deque([start])

    while queue:
        diagram = queue.popleft()

        for i, j in diagram:
            blockers = ((i + 1, j), (i, j + 1), (i + 1, j + 1))

            if all(cell in outer and cell not in diagram for cell in blockers):
                moved = (diagram - {(i, j)}) | {(i + 1, j + 1)}

                if moved not in seen:
                    seen.add(moved)
                    queue.append(moved)

    return sorted(seen, key=sorted)


def skew_standard_count(shape) -> int:
    """Number of standard fillings of a skew shape, by the excited-diagram hook formula."""
    shape = _as_shape(shape)
    hooks = {(i - 1, j - 1): hook for (i, j), hook in hook_lengths(shape.outer).items()}
    total = Fraction(0)

    for diagram in excited_diagrams(shape):
        term = Fraction(1)

        for cell, hook in hooks.items():
            if cell not in diagram:
                term /= hook

        total += term

    count = total * factorial(shape.size)

    if count.denominator != 1:
        raise InternalConsistencyError(f'Skew hook formula gave a non-integer {count} for {shape}.')

    return int(count)


@lru_cache(maxsize=None)
def _chains(outer: Tuple[int, ...], inner: Tuple[int, ...]) -> int:
    if outer == inner:
        return 1

    lam, mu = Partition(outer), Partition(inner)
    count = 0

    for row in lam.corners():
        smaller = lam.remove_cell(row)

        if smaller.contains(mu):
            count += _chains(smaller.parts, inner)

    return count


def count_standard_fillings(shape) -> int:
    """Number of standard fillings counted directly as saturated chains from inner to outer."""
    shape = _as_shape(shape)

    return _chains(shape.outer.parts, shape.inner.parts)
