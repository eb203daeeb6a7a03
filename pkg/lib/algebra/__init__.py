from lib.algebra.Permutation import Permutation
from lib.algebra.AlgebraElement import AlgebraElement
from lib.algebra.swap_algebra import is_good, antisymmetrizer, straighten, cycle_sum, hamiltonian_element, words_up_to
from lib.algebra.bases import basis_family, FAMILY_DEGREE
