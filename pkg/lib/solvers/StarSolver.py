from lib.oracle.GraphSpec import GraphSpec, graph_family
from lib.partitions import Partition
from lib.solvers.BaseGraphSolver import BaseGraphSolver
from lib.solvers.IrrepSpectrum import IrrepSpectrum, MaxResult
from lib.util.errors import InvalidHeightError, ParameterError, WeightMismatchError


def star_block_spectrum(lam, n: int, d: int) -> IrrepSpectrum:
    """
    Spectrum of the star Hamiltonian on the lam-block.

    The star is K_n minus K_{n-1}, so its eigenvalues on lam are eta_lam - eta_lam' over the
    partitions lam' obtained by removing a corner. Removing the corner of row j (1-indexed)
    gives 2(n - (lam_j - (j - 1))).
    """
    lam = Partition.coerce(lam)

    if n < 2:
        raise ParameterError(f'Invalid "n" argument passed to star_block_spectrum, a star needs n >= 2.')

    if lam.weight != n:
        raise WeightMismatchError(f'Invalid "lambda" argument passed to star_block_spectrum, {lam.parts} is not a partition of {n}.')

    if lam.height > d:
        raise InvalidHeightError(f'Invalid "lambda" argument passed to star_block_spectrum, {lam.parts} has more than {d} rows.')

    return IrrepSpectrum(lam, [2 * (n - (lam.row(row) - row)) for row in lam.corners()])


def star_max(n: int, d: int) -> MaxResult:
    """2(n + d - 2), attained at the hook (n - d + 1, 1^(d-1)); for d >= n this is 4(n - 1)."""
    if n < 2 or d < 1:
        raise ParameterError(f'Invalid arguments passed to star_max, need n >= 2 and d >= 1 (got n={n}, d={d}).')

    if d == 1:
        return MaxResult(0, {'lambda': Partition([n])})

    d = min(d, n)

    return MaxResult(2 * (n + d - 2), {'lambda': Partition([n - d + 1] + [1] * (d - 1))})


def star_separates_3rows(lam, mu, n: int) -> bool:
    """
    True iff lam and mu have the same star spectrum. On partitions with at most three rows
    this happens only for lam == mu, so star spectra tell those irreps apart.
    """
    return star_block_spectrum(lam, n, 3) == star_block_spectrum(mu, n, 3)


class StarSolver(BaseGraphSolver):
    def __init__(self, n: int, d: int, **kwargs):
        super().__init__(n, d, **kwargs)

    def graph(self) -> GraphSpec:
        return graph_family('star', self.n)

    def block_spectrum(self, lam) -> IrrepSpectrum:
        return star_block_spectrum(lam, self.n, self.d)

    def max_value(self) -> MaxResult:
        result = star_max(self.n, self.d)
        self.logger.debug(f'star_{self.n}, d={self.d}: max {result.value} at {result.witness["lambda"]}')

        return result
