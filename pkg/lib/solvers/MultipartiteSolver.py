from itertools import product
from typing import List, Sequence

from lib.characters import eta
from lib.lr import iterated_lr_coefficient
from lib.oracle.GraphSpec import GraphSpec, graph_family
from lib.partitions import Partition, partitions_of
from lib.solvers.BaseGraphSolver import BaseGraphSolver
from lib.solvers.IrrepSpectrum import IrrepSpectrum, MaxResult
from lib.util.errors import InvalidHeightError, ParameterError, WeightMismatchError


def _check_parts(parts: Sequence[int]) -> List[int]:
    parts = [int(part) for part in parts]

    if len(parts) < 2 or any(part < 1 for part in parts):
        raise ParameterError(f'Invalid "parts" argument {parts}, need at least two positive part sizes.')

    return parts


def multipartite_block_spectrum(lam, parts: Sequence[int], d: int) -> IrrepSpectrum:
    """
    K_{n1..nr} is K_n minus the disjoint cliques K_{ni}, so on the lam-block its eigenvalues are
    eta_lam - sum_i eta_{lam_i} over every (lam_1, ..., lam_r), lam_i of ni, with c^lam_{lam_1..lam_r} > 0.
    """
    lam = Partition.coerce(lam)
    parts = _check_parts(parts)

    if lam.weight != sum(parts):
        raise WeightMismatchError(f'Invalid "lambda" argument, {lam.parts} is not a partition of {sum(parts)}.')

    if lam.height > d:
        raise InvalidHeightError(f'Invalid "lambda" argument, {lam.parts} has more than {d} rows.')

    top = eta(lam, d)
    choices = [[mu for mu in partitions_of(size, lam.height) if lam.contains(mu)] for size in parts]
    eigenvalues = [top - sum(eta(mu, d) for mu in pieces)
                   for pieces in product(*choices)
                   if iterated_lr_coefficient(lam, pieces) > 0]

    return IrrepSpectrum(lam, eigenvalues)


class MultipartiteSolver(BaseGraphSolver):
    def __init__(self, parts: Sequence[int], d: int, **kwargs):
        self.parts = _check_parts(parts)

        super().__init__(sum(self.parts), d, **kwargs)

    def graph(self) -> GraphSpec:
        return graph_family('multipartite', parts=self.parts)

    def block_spectrum(self, lam) -> IrrepSpectrum:
        return multipartite_block_spectrum(lam, self.parts, self.d)

    def max_value(self) -> MaxResult:
        best, witness = None, None

        for lam, block in self.block_spectra().items():
            if best is None or block.max > best:
                best, witness = block.max, {'lambda': lam}

        self.logger.debug(f'K_{self.parts}, d={self.d}: max {best} at {witness["lambda"]}')

        return MaxResult(best, witness, parts=self.parts)
