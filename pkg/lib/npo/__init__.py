from lib.npo.MomentPencil import MomentPencil
from lib.npo.MomentSDP import MomentSDP, build_relaxation, moment_vector
from lib.npo.SDPSolution import SDPSolution, STATUSES
from lib.npo.SdpSolver import SdpSolver, default_solver, installed_solvers, solve
from lib.npo.sdpa import SdpaProblem, emit_sdpa, read_sdpa
from lib.npo.relaxation import relaxation_series, relaxation_table, solve_levels
