import pytest

from scipy.linalg import eigvalsh

from lib.algebra import hamiltonian_element
from lib.characters import eta
from lib.oracle import graph_family, hamiltonian, irrep_element, max_eigenvalue, distinct_eigenvalues
from lib.partitions import Partition, partitions_of
from lib.solvers import CliqueSolver, StarSolver, MultipartiteSolver, IrrepSpectrum, MaxResult, clique_block_eigenvalue, \
    clique_max, star_block_spectrum, star_max, star_separates_3rows, multipartite_block_spectrum, \
    bipartite_block_spectrum
from lib.util.errors import InternalConsistencyError, InvalidHeightError, ParameterError, WeightMismatchError


def block_oracle(g, lam):
    block = irrep_element(hamiltonian_element(g), lam)

    return {int(round(value)) for value in distinct_eigenvalues(eigvalsh((block + block.T) / 2), 1e-9)}


class TestIrrepSpectrum():
    def test_sorted_distinct(self):
        spectrum = IrrepSpectrum([2, 1], [6, 2, 6])

        assert spectrum.eigenvalues == (2, 6)
        assert spectrum.max == 6
        assert spectrum == {2, 6}
        assert spectrum.to_dict() == {'lambda': [2, 1], 'eigenvalues': [2, 6]}

    def test_empty(self):
        with pytest.raises(InternalConsistencyError):
            IrrepSpectrum([1], [])

    def test_max_result(self):
        result = MaxResult(6, {'lambda': Partition([2, 1])}, mode='theorem')

        assert result.to_dict() == {'value': 6, 'witness': {'lambda': [2, 1]}, 'mode': 'theorem'}


class TestClique():
    def test_block_eigenvalues(self):
        assert clique_block_eigenvalue([3, 3, 3], 3) == 72
        assert clique_block_eigenvalue([6, 2, 1], 3) == 48

    def test_max_is_balanced(self):
        for n in range(1, 10):
            for d in range(1, 6):
                result = clique_max(n, d)

                assert result.value == max(eta(lam, d) for lam in partitions_of(n, d))
                assert result.witness['lambda'].height == min(n, d)

    def test_solver(self):
        solver = CliqueSolver(4, 3)

        assert solver.max_value().value == 16
        assert solver.spectrum() == [0, 8, 12, 16]
        assert solver.block_spectrum([2, 2]) == {12}
        assert len(solver.graph().edges) == 6

    def test_brute_force(self):
        for n, d in [(3, 2), (4, 2), (4, 3), (5, 3)]:
            assert clique_max(n, d).value == pytest.approx(max_eigenvalue(hamiltonian(graph_family('clique', n), d)))

    def test_height(self):
        with pytest.raises(InvalidHeightError):
            CliqueSolver(3, 2).block_spectrum([1, 1, 1])

    def test_invalid(self):
        with pytest.raises(ParameterError):
            clique_max(0, 2)


class TestStar():
    @pytest.mark.parametrize('lam, n, expected', [
        ([4, 2, 2, 2, 2], 12, {16, 28}),
        ([5, 5, 1, 1], 12, {16, 28}),
        ([9, 6, 5, 1], 21, {24, 32, 36, 46}),
        ([3, 3, 3], 9, {16}),
        ([6, 2, 1], 9, {6, 16, 20}),
        ([7], 7, {0}),
    ])
    def test_block_fixtures(self, lam, n, expected):
        assert star_block_spectrum(lam, n, 5) == expected

    def test_blocks_match_irrep_oracle(self):
        for n in range(2, 7):
            g = graph_family('star', n)

            for lam in partitions_of(n):
                assert set(star_block_spectrum(lam, n, n).eigenvalues) == block_oracle(g, lam)

    def test_max(self):
        assert star_max(6, 2).value == 12
        assert star_max(6, 3).value == 14
        assert star_max(4, 9).value == 12
        assert star_max(5, 1).value == 0
        assert star_max(7, 3).witness['lambda'] == (5, 1, 1)

    def test_max_matches_brute_force(self):
        for n in range(2, 7):
            for d in range(2, 5):
                if d ** n <= 1024:
                    assert star_max(n, d).value == pytest.approx(max_eigenvalue(hamiltonian(graph_family('star', n), d)))

    def test_separates_three_rows(self):
        assert not star_separates_3rows([3, 3, 3], [6, 2, 1], 9)
        assert star_separates_3rows([4, 3, 2], [4, 3, 2], 9)

        for n in range(2, 13):
            spectra = {}

            for lam in partitions_of(n, 3):
                spectra.setdefault(star_block_spectrum(lam, n, 3).eigenvalues, []).append(lam)

            assert all(len(group) == 1 for group in spectra.values())

    def test_invalid(self):
        with pytest.raises(WeightMismatchError):
            star_block_spectrum([2, 1], 4, 3)

        with pytest.raises(InvalidHeightError):
            StarSolver(4, 2).block_spectrum([2, 1, 1])


class TestMultipartite():
    def test_reduces_to_star_and_bipartite(self):
        for lam in partitions_of(6, 4):
            assert multipartite_block_spectrum(lam, [5, 1], 4) == star_block_spectrum(lam, 6, 4)
            assert multipartite_block_spectrum(lam, [4, 2], 4) == bipartite_block_spectrum(lam, 6, 2, 4)

    def test_blocks_match_irrep_oracle(self):
        g = graph_family('multipartite', parts=[2, 2, 1])

        for lam in partitions_of(5):
            assert set(multipartite_block_spectrum(lam, [2, 2, 1], 5).eigenvalues) == block_oracle(g, lam)

    def test_max_matches_brute_force(self):
        solver = MultipartiteSolver([2, 2, 1], 3)
        result = solver.max_value()

        assert result.value == pytest.approx(max_eigenvalue(hamiltonian(solver.graph(), 3)))
        assert result.info['parts'] == [2, 2, 1]

    def test_invalid_parts(self):
        with pytest.raises(ParameterError):
            MultipartiteSolver([5], 2)
