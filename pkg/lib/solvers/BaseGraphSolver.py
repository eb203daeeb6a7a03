from abc import ABCMeta, abstractmethod
from typing import Dict, List

from lib.oracle.GraphSpec import GraphSpec
from lib.partitions import Partition, partitions_of
from lib.solvers.IrrepSpectrum import IrrepSpectrum, MaxResult
from lib.util.errors import InvalidHeightError
from lib.util.logger import init_logger


class BaseGraphSolver(object, metaclass=ABCMeta):
    """Exact block spectra of a graph family whose Hamiltonian is a signed sum of clique Hamiltonians."""

    @abstractmethod
    def __init__(self, n: int, d: int, **kwargs):
        self.n = n
        self.d = d
        self.logger = kwargs.get('logger', init_logger(__name__, show_debug=kwargs.get('show_debug', False)))

    @abstractmethod
    def graph(self) -> GraphSpec:
        raise NotImplementedError()

    @abstractmethod
    def block_spectrum(self, lam) -> IrrepSpectrum:
        raise NotImplementedError()

    @abstractmethod
    def max_value(self) -> MaxResult:
        raise NotImplementedError()

    def check_height(self, lam) -> Partition:
        lam = Partition.coerce(lam)

        if lam.height > self.d:
            raise InvalidHeightError(f'Invalid "lambda" argument, {lam.parts} has more than d = {self.d} rows.')

        return lam

    def block_spectra(self) -> Dict[Partition, IrrepSpectrum]:
        return {lam: self.block_spectrum(lam) for lam in partitions_of(self.n, self.d)}

    def spectrum(self) -> List[int]:
        """Union of the block spectra over every lambda with at most d rows."""
        values = set()

        for block in self.block_spectra().values():
            values.update(block.eigenvalues)

        return sorted(values)
