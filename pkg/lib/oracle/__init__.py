from lib.oracle.GraphSpec import GraphSpec, read_graph, write_graph, graph_family, random_graph
from lib.oracle.TensorOperator import TensorOperator, apply_permutation, permutation_index, hamiltonian
from lib.oracle.eigen import max_eigenvalue, top_eigenpair, spectrum, distinct_eigenvalues
from lib.oracle.YoungOrthogonalForm import YoungOrthogonalForm, standard_tableaux, tableau_rows, irrep_matrices, \
    irrep_element, irrep_evaluation_vector
from lib.oracle.projectors import isotypic_projector, isotypic_spectrum
from lib.oracle.gellmann import gellmann_basis, swap_matrix, swap_gellmann_residual, verify_swap_gellmann, \
    gellmann_hamiltonian
from lib.oracle.relations import degree_relation_residuals, verify_degree_relation, evaluation_rank, \
    low_degree_independence, basis_family_ranks
