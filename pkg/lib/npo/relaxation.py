import pandas as pd

from typing import List

from lib.npo.MomentSDP import MomentSDP
from lib.npo.SDPSolution import SDPSolution
from lib.npo.SdpSolver import SdpSolver
from lib.oracle.GraphSpec import GraphSpec
from lib.util.errors import ParameterError
from lib.util.logger import init_logger


def solve_levels(g: GraphSpec, d: int, up_to_level: int, localization=None, **kwargs) -> List[SDPSolution]:
    logger = kwargs.pop('logger', None) or init_logger(__name__, show_debug=kwargs.pop('show_debug', False))

    if not 1 <= up_to_level <= g.n - 1:
        raise ParameterError(f'Invalid "up_to_level" argument, need 1 <= level <= {g.n - 1} (got {up_to_level}).')

    solver = SdpSolver(logger=logger, **kwargs)
    solutions = []

    for ell in range(1, up_to_level + 1):
        sdp = MomentSDP(g, d, ell, localization=localization, logger=logger)
        solutions.append(solver.solve(sdp))

    return solutions


def relaxation_series(g: GraphSpec, d: int, up_to_level: int, localization=None, **kwargs) -> List[float]:
    """(alpha_1, ..., alpha_up_to_level), each an upper bound on the top eigenvalue, nonincreasing in the level."""
    return [solution.value for solution in solve_levels(g, d, up_to_level, localization=localization, **kwargs)]


def relaxation_table(g: GraphSpec, d: int, up_to_level: int, localization=None, **kwargs) -> pd.DataFrame:
    solutions = solve_levels(g, d, up_to_level, localization=localization, **kwargs)
    rows = [{'level': level, 'value': solution.value, 'gap': solution.gap, 'status': solution.status}
            for level, solution in enumerate(solutions, start=1)]

    return pd.DataFrame(rows, columns=['level', 'value', 'gap', 'status'])
