"""
Explicit swap-product bases of the low-degree subspaces of the d-swap algebra.

Each family is a list of word patterns over letter names. A pattern such as 'ij jk pq' is the
product Swap_ij Swap_jk Swap_pq, and is instantiated for every assignment of distinct
vertices to its letters that satisfies the pattern's ordering condition.
"""
from itertools import permutations
from typing import Callable, Dict, List, Sequence, Tuple

from lib.algebra.Permutation import Permutation
from lib.util.errors import ParameterError

Condition = Callable[[Dict[str, int]], bool]
Pattern = Tuple[str, Condition]


def _increasing(letters: str) -> Condition:
    return lambda v: all(v[a] < v[b] for a, b in zip(letters, letters[1:]))


def _pairs_increasing(*pairs: str) -> Condition:
    """Each pair increasing and the pairs increasing lexicographically."""
    def condition(v):
        tuples = [(v[pair[0]], v[pair[1]]) for pair in pairs]
        return all(a < b for a, b in tuples) and all(s < t for s, t in zip(tuples, tuples[1:]))

    return condition


def _both(first: Condition, second: Condition) -> Condition:
    return lambda v: first(v) and second(v)


FOUR_CYCLE_CUBICS = ['ij jk kl', 'ij jl kl', 'ik jk jl', 'ik kl jl', 'il jl jk']

FIVE_CYCLE_QUARTICS_D3 = [
    'ij ik jl jm', 'ij ik jl km', 'ij ik kl km', 'ij il jk jm', 'ij im jk jl', 'ij il im jk',
    'ij ik im jl', 'ij ik im kl', 'ij ik il im', 'ij ik il lm', 'ij ik il km', 'ij ik il jm',
]

FIVE_CYCLE_QUARTICS_D4 = [
    'ij jk kl lm', 'ij jk km lm', 'ij jl kl km', 'ij jl lm km', 'ij jm km kl', 'ij jm lm kl',
    'ik jk jl lm', 'ik jk jm lm', 'ik kl jl jm', 'ik kl lm jm', 'ik km jm jl', 'ik km lm jl',
    'il jl jk km', 'il jl jm km', 'il kl jk jm', 'il kl km jm', 'il lm jm jk', 'il lm km jk',
    'im jm jk kl', 'im jm jl kl', 'im km jk jl', 'im km kl jl', 'im lm jl jk',
]

B2: List[Pattern] = [
    ('', lambda v: True),
    ('ij', _increasing('ij')),
    ('ij jk', _increasing('ijk')),
    ('ij ik', _increasing('ijk')),
    ('ij kl', lambda v: v['i'] < v['j'] and v['i'] < v['k'] < v['l']),
]

B3_CUBICS: List[Pattern] = [
    ('ij kl pq', _pairs_increasing('ij', 'kl', 'pq')),
    ('ij jk pq', _both(_increasing('ijk'), _increasing('pq'))),
    ('ij ik pq', _both(_increasing('ijk'), _increasing('pq'))),
] + [(word, _increasing('ijkl')) for word in FOUR_CYCLE_CUBICS]

THREE_TWO_TWO: List[Pattern] = [
    (word, _both(_increasing('ijk'), _pairs_increasing('pq', 'rs'))) for word in ('ij jk pq rs', 'ij ik pq rs')
]

THREE_THREE: List[Pattern] = [
    (word, lambda v: v['i'] < v['j'] < v['k'] and v['p'] < v['q'] < v['r'] and v['i'] < v['p'])
    for word in ('ij jk pq qr', 'ij jk pq pr', 'ij ik pq pr')
]

TWO_TWO_TWO_TWO: Pattern = ('ij kl pq rs', _pairs_increasing('ij', 'kl', 'pq', 'rs'))

B4HAT_QUARTICS: List[Pattern] = [TWO_TWO_TWO_TWO] + THREE_TWO_TWO + [
    (word + ' pq', _both(_increasing('ijkl'), _increasing('pq'))) for word in FOUR_CYCLE_CUBICS
] + THREE_THREE + [(word, _increasing('ijklm')) for word in FIVE_CYCLE_QUARTICS_D3]

B4_QUARTICS: List[Pattern] = [TWO_TWO_TWO_TWO] + THREE_TWO_TWO + [
    (word + ' pq', _both(_increasing('ijkl'), _increasing('pq'))) for word in FOUR_CYCLE_CUBICS + ['il kl jk']
] + THREE_THREE + [(word, _increasing('ijklm')) for word in FIVE_CYCLE_QUARTICS_D4]


# family name -> (maximal number of swaps, d)
FAMILY_DEGREE = {'B2': (2, 3), 'B3': (3, 3), 'B4hat': (4, 3), 'B4': (4, 4)}


def _instantiate(pattern: Pattern, n: int) -> List[Permutation]:
    word, condition = pattern
    pairs = word.split()
    letters = sorted(set(''.join(pairs)))
    found = []

    for assignment in permutations(range(1, n + 1), len(letters)):
        values = dict(zip(letters, assignment))

        if condition(values):
            found.append(Permutation.from_word([(values[pair[0]], values[pair[1]]) for pair in pairs], n))

    return found


def _collect(patterns: Sequence[Pattern], n: int) -> List[Permutation]:
    seen = set()
    family = []

    for pattern in patterns:
        for permutation in _instantiate(pattern, n):
            if permutation not in seen:
                seen.add(permutation)
                family.append(permutation)

    return family


def _up_to_length(n: int, length: int) -> List[Permutation]:
    return sorted(pi for pi in Permutation.all(n) if pi.cayley_length <= length)


def basis_family(name: str, n: int) -> List[Permutation]:
    """
    Named bases of swap products.

    B2, B3 and B4hat span the products of at most two, three and four swaps in the
    3-swap algebra, and B4 spans the products of at most four swaps in the 4-swap algebra.
    """
    if name == 'B2':
        return _collect(B2, n)
    elif name == 'B3':
        return _collect(B2 + B3_CUBICS, n)
    elif name == 'B4hat':
        return _collect(B2 + B3_CUBICS + B4HAT_QUARTICS, n)
    elif name == 'B4':
        # every B4 quartic has cayley length 4, so nothing collides with the shorter products
        return _up_to_length(n, 3) + _collect(B4_QUARTICS, n)

    raise ParameterError(f'Invalid "name" argument passed to basis_family, unknown family "{name}".')
