from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Tuple

from lib.characters.ConjugacyClass import ConjugacyClass
from lib.partitions import Partition, dim_sn
from lib.util.errors import InvalidHeightError, InternalConsistencyError, ParameterError, WeightMismatchError


def _beta_set(parts: Tuple[int, ...]) -> Tuple[int, ...]:
    length = len(parts)
    return tuple(part + length - 1 - i for i, part in enumerate(parts))


def _from_beta_set(beta) -> Tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)

    return Partition(b - (length - 1 - i) for i, b in enumerate(beta)).parts


@lru_cache(maxsize=None)
def _chi(parts: Tuple[int, ...], cycle_type: Tuple[int, ...]) -> int:
    if not cycle_type:
        return 1 if not parts else 0

    strip, rest = cycle_type[0], cycle_type[1:]
    beta = _beta_set(parts)
    occupied = set(beta)
    value = 0

    # removing a border strip of length `strip` moves one bead down `strip` positions
    for b in beta:
        target = b - strip

        if target < 0 or target in occupied:
            continue

        height = sum(1 for c in beta if target < c < b)
        reduced = _from_beta_set((occupied - {b}) | {target})
        value += (-1) ** height * _chi(reduced, rest)

    return value


def chi(lam, cls) -> int:
    """Character of the irrep lam at the class cls, by the Murnaghan-Nakayama rule."""
    lam = Partition.coerce(lam)
    cycle_type = cls.cycle_type if isinstance(cls, ConjugacyClass) else Partition.coerce(cls)

    if lam.weight != cycle_type.weight:
        raise WeightMismatchError(
            f'Invalid "cls" argument passed to chi, cycle type {cycle_type.parts} has weight {cycle_type.weight} '
            f'but the partition {lam.parts} has weight {lam.weight}.')

    return _chi(lam.parts, cycle_type.parts)


def chi_transposition(lam) -> Fraction:
    """Normalized character chi(transposition)/chi(e), by the Frobenius formula."""
    lam = Partition.coerce(lam)
    n = lam.weight

    if n < 2:
        raise ParameterError(f'Invalid "lambda" argument passed to chi_transposition, S_{n} has no transpositions.')

    rows = sum(comb(part, 2) for part in lam)
    columns = sum(comb(part, 2) for part in lam.conjugate())

    return Fraction(rows - columns, comb(n, 2))


def eta(lam, d: int) -> int:
    """Scalar by which the clique Hamiltonian acts on the lam-block."""
    lam = Partition.coerce(lam)

    if lam.height > d:
        raise InvalidHeightError(f'Invalid "d" argument passed to eta, {lam.parts} has more than {d} rows.')

    n = lam.weight
    offsets = sum((row - k) ** 2 for k, row in enumerate(lam.padded(d)))

    return int(n * n + d * (d - 1) * (2 * d - 1) // 6 - offsets)


def gamma(k: int, lam) -> int:
    """Scalar by which the sum of all k-cycles acts on the lam-block."""
    lam = Partition.coerce(lam)
    n = lam.weight

    if not 2 <= k <= n:
        raise ParameterError(f'Invalid "k" argument passed to gamma, need 2 <= k <= {n}.')

    value = Fraction(factorial(k - 1) * comb(n, k) * chi(lam, ConjugacyClass.of_cycle(k, n)), dim_sn(lam))

    if value.denominator != 1:
        raise InternalConsistencyError(f'gamma({k}, {lam.parts}) = {value} is not an integer.')

    return int(value)


def _square_sum(x: int) -> Fraction:
    return Fraction(x * (x + 1) * (2 * x + 1), 6)


def gamma3_closed_form(lam, d: int) -> Fraction:
    """
    Closed form of gamma(3, lam) through the contents of lam.

    The sum of 3-cycles equals the sum of squared Jucys-Murphy elements minus C(n,2), so
    gamma_3 is the sum of squared contents minus C(n,2). Row k contributes
    F(lam_k - k) - F(-k), F(x) = x(x+1)(2x+1)/6, and the F(-k) terms add up to d^2(d^2-1)/12.
    """
    lam = Partition.coerce(lam)

    if lam.height > d:
        raise InvalidHeightError(f'Invalid "d" argument passed to gamma3_closed_form, {lam.parts} has more than {d} rows.')

    n = lam.weight
    constant = Fraction(d * d * (d * d - 1), 12)
    rows = sum(_square_sum(row - k) for k, row in enumerate(lam.padded(d), start=1))

    return constant - comb(n, 2) + rows
