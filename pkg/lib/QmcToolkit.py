from scipy.linalg import eigvalsh
from typing import Iterable, Optional, Sequence, Tuple

from lib.algebra import hamiltonian_element
from lib.characters import ConjugacyClass, character_table, chi, chi_transposition, eta, gamma, gamma3_closed_form
from lib.cli.functions.generate_graphs import generate_graph
from lib.cli.functions.verify_suite import SUITES, verify_suite
from lib.lr import lr_coefficient, lr_expand
from lib.npo import MomentSDP, SdpSolver, emit_sdpa
from lib.oracle import distinct_eigenvalues, hamiltonian, irrep_element, max_eigenvalue, read_graph
from lib.partitions import Partition
from lib.solvers import BipartiteSolver, CliqueSolver, StarSolver, bipartite_table
from lib.util.RunConfig import RunConfig
from lib.util.errors import InvalidHeightError, ParameterError
from lib.util.logger import init_logger


class QmcToolkit:
    """One method per command. Every method returns a plain dictionary ready for the JSON writer."""

    def __init__(self, **kwargs):
        self.logger = kwargs.get('logger', init_logger(__name__, show_debug=kwargs.get('show_debug', False)))
        self.config = kwargs.get('config', None) or RunConfig.from_kwargs(
            **{key: value for key, value in kwargs.items() if key not in ('logger', 'show_debug', 'config')})

        self.logger.debug(f'Initialize QmcToolkit: {self.config.to_dict()}')

    def eta(self, partition: str, d: Optional[int] = None) -> dict:
        lam = Partition.parse(partition)
        d = lam.height if d is None else d

        return {'eta': eta(lam, d), 'lambda': lam.to_list(), 'd': d}

    def char(self, partition: str, cls: Optional[str] = None) -> dict:
        lam = Partition.parse(partition)

        if cls is None:
            table = character_table(lam.weight, cap=self.config.character_cap)

            return {
                'lambda': lam.to_list(),
                'classes': [c.cycle_type.to_list() for c in table.classes],
                'chi': table.row(lam),
                'chi_transposition': chi_transposition(lam) if lam.weight >= 2 else None,
            }

        conjugacy_class = ConjugacyClass(Partition.parse(cls))

        return {'lambda': lam.to_list(), 'class': conjugacy_class.cycle_type.to_list(), 'chi': chi(lam, conjugacy_class)}

    def gamma(self, k: int, partition: str, d: Optional[int] = None) -> dict:
        lam = Partition.parse(partition)
        result = {'gamma': gamma(k, lam), 'k': k, 'lambda': lam.to_list()}

        if k == 3:
            result['closed_form'] = gamma3_closed_form(lam, max(lam.height, d or 1))

        return result

    def lr(self, lam: str, mu: Optional[str] = None, nu: Optional[str] = None, k: Optional[int] = None) -> dict:
        lam = Partition.parse(lam)

        if k is not None:
            return {'lambda': lam.to_list(), 'k': k,
                    'expansion': [{'mu': m.to_list(), 'nu': v.to_list(), 'c': c} for m, v, c in lr_expand(lam, k)]}

        if mu is None or nu is None:
            raise ParameterError('Invalid arguments passed to lr, give both --mu and --nu, or --k for the expansion.')

        mu, nu = Partition.parse(mu), Partition.parse(nu)

        return {'c': lr_coefficient(lam, mu, nu), 'lambda': lam.to_list(), 'mu': mu.to_list(), 'nu': nu.to_list()}

    def clique(self, n: int, d: int) -> dict:
        solver = CliqueSolver(n, d, logger=self.logger)
        result = solver.max_value().to_dict()
        result['spectrum'] = solver.spectrum()

        return result

    def star(self, n: int, d: int, irrep: Optional[str] = None) -> dict:
        solver = StarSolver(n, d, logger=self.logger)

        if irrep is not None:
            return solver.block_spectrum(Partition.parse(irrep)).to_dict()

        return solver.max_value().to_dict()

    def bipartite(self, n: int, k: int, d: int, mode: str = 'theorem', irrep: Optional[str] = None) -> dict:
        solver = BipartiteSolver(n, k, d, mode=mode,
                                 enumerate_cap=self.config.enumerate_cap,
                                 parallel_jobs=self.config.parallel_jobs,
                                 logger=self.logger)

        if irrep is not None:
            return solver.block_spectrum(Partition.parse(irrep)).to_dict()

        result = solver.max_value().to_dict()

        if 'params' not in result and 2 <= d < n:
            result['params'] = solver.params().to_dict()

        return result

    def brute(self, graph: str, d: int, irrep: Optional[str] = None, method: str = 'dense') -> dict:
        g = read_graph(graph)

        if irrep is not None:
            lam = Partition.parse(irrep)

            if lam.height > d:
                raise InvalidHeightError(f'Invalid "irrep" argument, {lam.parts} has more than d = {d} rows.')

            block = irrep_element(hamiltonian_element(g), lam, cap=self.config.matrix_cap)
            values = eigvalsh((block + block.T) / 2)

            return {
                'value': float(values[-1]),
                'spectrum': distinct_eigenvalues(values, self.config.dense_tol * max(1.0, abs(values).max())),
                'lambda': lam.to_list(),
                'dim': int(block.shape[0]),
            }

        op = hamiltonian(g, d)
        tolerance = self.config.dense_tol if method == 'dense' else self.config.iterative_tol
        value = max_eigenvalue(op, method=method,
                               cap=self.config.dense_cap,
                               tolerance=tolerance,
                               seed=self.config.seed)

        return {'value': value, 'dim': op.dim, 'method': method, 'n': g.n, 'd': d}

    def npo(self, graph: str, d: int, level: int, irrep: Optional[str] = None, emit: Optional[str] = None,
            solve: bool = False) -> dict:
        g = read_graph(graph)
        sdp = MomentSDP(g, d, level, localization=Partition.parse(irrep) if irrep else None, logger=self.logger)
        result = sdp.to_dict()

        if emit:
            emit_sdpa(sdp, emit)
            result['emitted'] = emit

        if solve or not emit:
            solver = SdpSolver(solver_cap=self.config.solver_cap,
                               maxiter=self.config.solver_maxiter,
                               gap_tol=self.config.solver_gap_tol,
                               logger=self.logger)
            solution = solver.solve(sdp)
            result.update(value=solution.value, gap=solution.gap, status=solution.status)

        return result

    def verify(self, suite: str = 'all', d: int = 3) -> dict:
        if suite not in SUITES:
            raise ParameterError(f'Invalid "suite" argument "{suite}", expected one of {SUITES}.')

        if d < 2:
            raise ParameterError(f'Invalid "d" argument passed to verify, d = {d} must be at least 2.')

        report = verify_suite(suite, d, self.config)
        failures = report[~report['passed']]

        for _, row in failures.iterrows():
            self.logger.error(f'{row["check"]} failed for {row["case"]}: observed {row["observed"]}, expected {row["expected"]}')

        return {'suite': suite, 'd': d, 'passed': bool(failures.empty), 'checks': len(report),
                'failures': int(len(failures)), 'report': report.to_dict(orient='records')}

    def gen(self, family: str, n: Optional[int] = None, k: Optional[int] = None, parts: Optional[Sequence[int]] = None,
            weight: float = 1.0, density: float = 0.5, path: Optional[str] = None) -> dict:
        return generate_graph(family, path=path, n=n, k=k, parts=parts, weight=weight, seed=self.config.seed,
                              density=density)

    def table(self, triples: Iterable[Tuple[int, int, int]]) -> dict:
        frame = bipartite_table(triples)

        return {'rows': frame.to_dict(orient='records')}

