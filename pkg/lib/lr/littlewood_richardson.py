from collections import Counter
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from lib.lr.LRTableau import LRTableau
from lib.partitions import Partition, SkewShape, partitions_of
from lib.util.errors import ParameterError, WeightMismatchError


def _fillings(shape: SkewShape, content: Optional[Tuple[int, ...]]) -> Iterator[Dict[Tuple[int, int], int]]:
    """
    Backtracking over LR fillings in reading order.

    Cells are visited row by row, each row right to left, which is exactly the reading word,
    so the lattice condition can be checked on every prefix.
    """
    cells = [(i, j) for i in range(shape.outer.height) for j in reversed(shape.row_range(i))]
    entries: Dict[Tuple[int, int], int] = {}
    # entries in row i never exceed i + 1
    counts = [0] * (shape.outer.height + 2)

    def place(position: int):
        if position == len(cells):
            yield dict(entries)
            return

        i, j = cells[position]
        high = i + 1

        if (i, j + 1) in entries:
            high = min(high, entries[(i, j + 1)])

        if content is not None:
            high = min(high, len(content))

        low = entries[(i - 1, j)] + 1 if (i - 1, j) in entries else 1

        for value in range(low, high + 1):
            if value > 1 and counts[value] + 1 > counts[value - 1]:
                continue

            if content is not None and counts[value] + 1 > content[value - 1]:
                continue

            entries[(i, j)] = value
            counts[value] += 1

            yield from place(position + 1)

            counts[value] -= 1
            del entries[(i, j)]

    yield from place(0)


def enumerate_lr_tableaux(shape: SkewShape, content=None) -> Iterator[LRTableau]:
    content = None if content is None else Partition.coerce(content).parts

    if content is not None and sum(content) != shape.size:
        return

    for entries in _fillings(shape, content):
        yield LRTableau(shape, entries)


@lru_cache(maxsize=None)
def _lr_coefficient(lam: Tuple[int, ...], mu: Tuple[int, ...], nu: Tuple[int, ...]) -> int:
    outer, inner = Partition(lam), Partition(mu)

    if not outer.contains(inner) or not outer.contains(nu):
        return 0

    return sum(1 for _ in _fillings(SkewShape(outer, inner), nu))


def lr_coefficient(lam, mu, nu) -> int:
    """Number of LR tableaux of shape lam/mu and content nu."""
    lam, mu, nu = Partition.coerce(lam), Partition.coerce(mu), Partition.coerce(nu)

    if lam.weight != mu.weight + nu.weight:
        raise WeightMismatchError(
            f'Invalid arguments passed to lr_coefficient, |lambda| = {lam.weight} but |mu| + |nu| = {mu.weight + nu.weight}.')

    return _lr_coefficient(lam.parts, mu.parts, nu.parts)


@lru_cache(maxsize=None)
def _lr_expand(lam: Tuple[int, ...], k: int) -> Tuple[Tuple[Partition, Partition, int], ...]:
    outer = Partition(lam)
    expansion = []

    for mu in partitions_of(outer.weight - k):
        if not outer.contains(mu):
            continue

        contents = Counter(tableau.content for tableau in enumerate_lr_tableaux(SkewShape(outer, mu)))

        for nu in sorted(contents):
            expansion.append((mu, nu, contents[nu]))

    return tuple(expansion)


def lr_expand(lam, k: int) -> List[Tuple[Partition, Partition, int]]:
    """Restriction of the lam irrep to S_{n-k} x S_k, as (mu, nu, multiplicity) triples."""
    lam = Partition.coerce(lam)

    if not 1 <= k < lam.weight:
        raise ParameterError(f'Invalid "k" argument passed to lr_expand, need 1 <= k < {lam.weight}.')

    return list(_lr_expand(lam.parts, k))


def iterated_lr_coefficient(lam, parts: Sequence) -> int:
    """
    c^lam_{parts[0], ..., parts[-1]}, folded pairwise from the right:
    c^lam_{l1..lr} = sum over zeta of c^zeta_{l1..l(r-1)} * c^lam_{zeta, lr}.
    """
    lam = Partition.coerce(lam)
    parts = [Partition.coerce(part) for part in parts if Partition.coerce(part).weight > 0]

    if lam.weight != sum(part.weight for part in parts):
        raise WeightMismatchError(f'Invalid "parts" argument passed to iterated_lr_coefficient, weights do not add up to {lam.weight}.')

    if not parts:
        return 1

    if len(parts) == 1:
        return 1 if lam == parts[0] else 0

    last = parts[-1]
    total = 0

    for zeta, nu, multiplicity in lr_expand(lam, last.weight):
        if nu == last:
            total += multiplicity * iterated_lr_coefficient(zeta, parts[:-1])

    return total
