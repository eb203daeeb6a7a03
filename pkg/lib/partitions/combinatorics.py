from collections import Counter
from functools import lru_cache, reduce
from math import factorial
from operator import mul
from typing import Dict, List, Optional, Tuple, Union

from lib.partitions.Partition import Partition
from lib.partitions.SkewShape import SkewShape
from lib.util.errors import InvalidHeightError


def balanced(m: int, e: int) -> Partition:
    """The unique partition of m with e rows whose parts differ by at most one."""
    if e < 1 or e > m:
        raise InvalidHeightError(f'Invalid "e" argument passed to balanced, height {e} is impossible for weight {m}.')

    q, r = divmod(m, e)

    return Partition([q + 1] * r + [q] * (e - r))


def uplus(mu, nu) -> Partition:
    mu, nu = Partition.coerce(mu), Partition.coerce(nu)

    return Partition(sorted(mu.parts + nu.parts, reverse=True))


def is_subpartition(mu, lam) -> bool:
    """True iff the rows of mu are a sub-multiset of the rows of lam."""
    mu, lam = Partition.coerce(mu), Partition.coerce(lam)
    available = Counter(lam.parts)

    return all(available[part] >= count for part, count in Counter(mu.parts).items())


def conjugate(lam) -> Partition:
    return Partition.coerce(lam).conjugate()


def hook_lengths(lam) -> Dict[Tuple[int, int], int]:
    """Hook lengths keyed by 1-indexed (row, column)."""
    lam = Partition.coerce(lam)
    conj = lam.conjugate()

    return {(i + 1, j + 1): lam.parts[i] - j + conj.parts[j] - i - 1 for i, j in lam.cells()}


@lru_cache(maxsize=None)
def _dim_sn(parts: Tuple[int, ...]) -> int:
    hooks = hook_lengths(Partition(parts)).values()

    return factorial(sum(parts)) // reduce(mul, hooks, 1)


def dim_sn(lam) -> int:
    """Dimension of the S_n irrep, by the hook length formula."""
    return _dim_sn(Partition.coerce(lam).parts)


def dim_gl(lam, d: int) -> int:
    """Dimension of the GL_d irrep of highest weight lam, zero when lam has more than d rows."""
    lam = Partition.coerce(lam)

    if lam.height > d:
        return 0

    rows = lam.padded(d)
    numerator, denominator = 1, 1

    for i in range(d):
        for j in range(i + 1, d):
            numerator *= rows[i] - rows[j] + j - i
            denominator *= j - i

    return numerator // denominator


def content_sum(shape: Union[Partition, SkewShape, tuple, list]) -> int:
    if not isinstance(shape, SkewShape):
        shape = SkewShape(Partition.coerce(shape))

    return sum(j - i for i, j in shape.cells())


def partitions_of(n: int, max_height: Optional[int] = None) -> List[Partition]:
    """All partitions of n with at most max_height rows, in reverse-lexicographic order."""
    max_height = n if max_height is None else max_height

    return [Partition(parts) for parts in _partitions(n, n, max_height)]


@lru_cache(maxsize=None)
def _partitions(n: int, max_part: int, max_height: int) -> Tuple[Tuple[int, ...], ...]:
    if n == 0:
        return ((),)

    if max_height == 0:
        return ()

    result = []

    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_height - 1):
            result.append((first,) + rest)

    return tuple(result)


def count_partitions(n: int, max_height: Optional[int] = None) -> int:
    """
    Number of partitions of n with at most max_height rows.

    Counted as partitions of n into parts of size at most max_height (conjugation),
    with the usual coin-change recurrence over the generating function.
    """
    max_height = n if max_height is None else max_height
    ways = [1] + [0] * n

    for part in range(1, max_height + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]

    return ways[n]
