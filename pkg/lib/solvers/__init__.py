from lib.solvers.IrrepSpectrum import IrrepSpectrum, MaxResult
from lib.solvers.BaseGraphSolver import BaseGraphSolver
from lib.solvers.BipartiteParams import BipartiteParams, bipartite_params
from lib.solvers.CliqueSolver import CliqueSolver, clique_block_eigenvalue, clique_max
from lib.solvers.StarSolver import StarSolver, star_block_spectrum, star_max, star_separates_3rows
from lib.solvers.BipartiteSolver import BipartiteSolver, bipartite_block_spectrum, bipartite_max, bipartite_table, \
    closed_form_value, delta, delta_content_form, sth_delta
from lib.solvers.MultipartiteSolver import MultipartiteSolver, multipartite_block_spectrum
