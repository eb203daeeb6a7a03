import cvxpy as cp
import numpy as np

from typing import List, Optional

from lib.npo.MomentPencil import MomentPencil
from lib.npo.MomentSDP import MomentSDP
from lib.npo.SDPSolution import SDPSolution
from lib.util.errors import CapExceededError, NumericalFailure, ParameterError
from lib.util.logger import init_logger

# tried in this order, the next installed one takes over when a solver gives up
SOLVER_PREFERENCE = ('MOSEK', 'CLARABEL', 'SCS')

INFEASIBLE_STATUSES = (cp.INFEASIBLE, cp.INFEASIBLE_INACCURATE, cp.UNBOUNDED, cp.UNBOUNDED_INACCURATE)


def installed_solvers(preferred: Optional[str] = None) -> List[str]:
    installed = cp.installed_solvers()
    names = [name for name in SOLVER_PREFERENCE if name in installed]

    if preferred is not None:
        if preferred not in installed:
            raise ParameterError(f'Invalid "solver" argument "{preferred}", installed solvers are {installed}.')

        names = [preferred] + [name for name in names if name != preferred]

    if not names:
        raise NumericalFailure(f'No SDP-capable solver installed, expected one of {SOLVER_PREFERENCE} (found {installed}).')

    return names


def default_solver() -> str:
    return installed_solvers()[0]


def solver_options(solver: str, maxiter: int, gap_tol: float) -> dict:
    # relaxations at the last level have no strictly feasible point
    if solver == 'CLARABEL':
        return {'max_iter': maxiter, 'tol_gap_abs': gap_tol, 'tol_gap_rel': gap_tol, 'tol_feas': max(gap_tol, 1e-8)}

    if solver == 'SCS':
        return {'max_iters': 500 * maxiter, 'eps_abs': gap_tol, 'eps_rel': gap_tol}

    return {}


class SdpSolver:
    """Solves the reduced moment pencil M(y) >> 0 with cvxpy, falling back along SOLVER_PREFERENCE."""

    def __init__(self, **kwargs):
        self.logger = kwargs.get('logger', init_logger(__name__, show_debug=kwargs.get('show_debug', False)))

        self.solvers = installed_solvers(kwargs.get('solver', None))
        self.solver = self.solvers[0]
        self.solver_cap = kwargs.get('solver_cap', 400)
        self.maxiter = kwargs.get('maxiter', 200)
        self.gap_tol = kwargs.get('gap_tol', 1e-6)
        self.psd_tol = kwargs.get('psd_tol', 1e-7)

        if self.maxiter <= 0 or self.gap_tol <= 0:
            raise ParameterError(f'Invalid solver settings, maxiter={self.maxiter} and gap_tol={self.gap_tol} must be positive.')

    def _solve_fixed(self, pencil: MomentPencil, **info) -> SDPSolution:
        # no free directions left, the constraints fix every moment
        smallest = float(np.linalg.eigvalsh(pencil.offset)[0])
        status = 'optimal' if smallest >= -self.psd_tol else 'infeasible'

        return SDPSolution(pencil.objective_offset, status,
                           gap=0.0,
                           primal_residual=max(0.0, -smallest),
                           dual_residual=0.0,
                           moments=pencil.x0,
                           **info)

    def _attempt(self, name: str, pencil: MomentPencil, **info) -> SDPSolution:
        size = pencil.size
        y = cp.Variable(pencil.dim)
        moment = cp.Variable((size, size), symmetric=True)
        psd = moment >> 0

        constraints = [psd, moment == pencil.offset + cp.reshape(pencil.directions @ y, (size, size), order='F')]
        problem = cp.Problem(cp.Maximize(pencil.objective_offset + pencil.objective @ y), constraints)

        self.logger.debug(f'{name}: moment matrix {size}x{size}, {pencil.dim} free variables')
        problem.solve(solver=name, verbose=False, **solver_options(name, self.maxiter, self.gap_tol))
        self.logger.debug(f'{name}: status {problem.status}, value {problem.value}')

        if problem.status in INFEASIBLE_STATUSES:
            return SDPSolution(float('nan'), 'infeasible', solver=name, **info)

        if y.value is None:
            return SDPSolution(float('nan'), 'max-iterations', solver=name, **info)

        matrix = pencil.matrix(y.value)
        primal_residual = max(0.0, -float(np.linalg.eigvalsh(matrix)[0]))

        gap, dual_residual = float('nan'), float('nan')

        if psd.dual_value is not None:
            dual = np.asarray(psd.dual_value)
            gap = abs(float(np.sum(moment.value * dual)))
            dual_residual = max(0.0, -float(np.linalg.eigvalsh((dual + dual.T) / 2)[0]))

        status = 'optimal'

        if problem.status != cp.OPTIMAL and not gap <= self.gap_tol:
            status = 'max-iterations'

        return SDPSolution(pencil.value(y.value), status,
                           gap=gap,
                           primal_residual=primal_residual,
                           dual_residual=dual_residual,
                           moments=pencil.moments(y.value),
                           solver=name,
                           **info)

    def solve_pencil(self, pencil: MomentPencil, **info) -> SDPSolution:
        if pencil.size > self.solver_cap:
            raise CapExceededError('basis_size', pencil.size, self.solver_cap)

        if pencil.dim == 0:
            return self._solve_fixed(pencil, **info)

        attempts, failures = [], []

        for name in self.solvers:
            try:
                solution = self._attempt(name, pencil, **info)
            except cp.error.SolverError as error:
                self.logger.warning(f'{name} failed on the moment relaxation: {error}')
                failures.append(f'{name}: {error}')
                continue

            if solution.is_optimal:
                return solution

            self.logger.warning(f'{name} stopped with status {solution.status}')
            attempts.append(solution)

        if not attempts:
            raise NumericalFailure(f'Every solver failed on the moment relaxation ({"; ".join(failures)}).')

        # an inaccurate value beats a spurious infeasibility certificate
        finite = [solution for solution in attempts if not np.isnan(solution.value)]

        if not finite:
            return attempts[0]

        return min(finite, key=lambda solution: np.nan_to_num(solution.primal_residual, nan=np.inf))

    def solve(self, sdp: MomentSDP) -> SDPSolution:
        # checked before reduce() so oversized relaxations fail fast
        if sdp.basis_size > self.solver_cap:
            raise CapExceededError('basis_size', sdp.basis_size, self.solver_cap)

        pencil = sdp.reduce()
        solution = self.solve_pencil(pencil, level=sdp.ell, basis_size=sdp.basis_size)
        self.logger.debug(f'level {sdp.ell}: {solution}')

        return solution


def solve(sdp: MomentSDP, solver: Optional[str] = None, maxiter: int = 200, gap_tol: float = 1e-6,
          solver_cap: int = 400, logger=None) -> SDPSolution:
    kwargs = {'solver': solver, 'maxiter': maxiter, 'gap_tol': gap_tol, 'solver_cap': solver_cap}

    if logger is not None:
        kwargs['logger'] = logger

    return SdpSolver(**kwargs).solve(sdp)
