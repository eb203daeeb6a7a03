from lib.characters import eta
from lib.oracle.GraphSpec import GraphSpec, graph_family
from lib.partitions import Partition, balanced
from lib.solvers.BaseGraphSolver import BaseGraphSolver
from lib.solvers.IrrepSpectrum import IrrepSpectrum, MaxResult
from lib.util.errors import InternalConsistencyError, ParameterError


def clique_block_eigenvalue(lam, d: int) -> int:
    """The clique Hamiltonian acts on the lam-block as the scalar eta_lam."""
    return eta(lam, d)


def clique_max(n: int, d: int) -> MaxResult:
    """
    Largest eigenvalue of the clique Hamiltonian, attained at the balanced partition of n
    with min(n, d) rows: n^2 + (d-1)n + r^2 - r(d+1) - (n^2 - r^2)/d for r = n mod d.
    """
    if n < 1 or d < 1:
        raise ParameterError(f'Invalid arguments passed to clique_max, need n, d >= 1 (got n={n}, d={d}).')

    r = n % d
    value = n * n + (d - 1) * n + r * r - r * (d + 1) - (n * n - r * r) // d
    argmax = balanced(n, min(n, d))

    if eta(argmax, d) != value:
        raise InternalConsistencyError(f'clique_max({n}, {d}) = {value} but eta{argmax.parts} = {eta(argmax, d)}.')

    return MaxResult(value, {'lambda': argmax})


class CliqueSolver(BaseGraphSolver):
    def __init__(self, n: int, d: int, **kwargs):
        super().__init__(n, d, **kwargs)

    def graph(self) -> GraphSpec:
        return graph_family('clique', self.n)

    def block_spectrum(self, lam) -> IrrepSpectrum:
        lam = self.check_height(lam)

        return IrrepSpectrum(lam, [clique_block_eigenvalue(lam, self.d)])

    def max_value(self) -> MaxResult:
        result = clique_max(self.n, self.d)
        self.logger.debug(f'K_{self.n}, d={self.d}: max {result.value} at {result.witness["lambda"]}')

        return result
