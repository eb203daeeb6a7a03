import pytest

from fractions import Fraction
from math import comb, factorial

from lib.characters import ConjugacyClass, CharacterTable, character_table, chi, chi_transposition, eta, gamma, \
    gamma3_closed_form
from lib.partitions import Partition, dim_sn, partitions_of
from lib.util.errors import CapExceededError, InvalidHeightError, ParameterError, WeightMismatchError


class TestConjugacyClass():
    def test_sizes(self):
        transpositions = ConjugacyClass([2, 1, 1])

        assert transpositions.n == 4
        assert transpositions.centralizer_order == 4
        assert transpositions.size == 6
        assert ConjugacyClass([2, 2]).size == 3

    def test_of_cycle(self):
        assert ConjugacyClass.of_cycle(3, 5).cycle_type == (3, 1, 1)

    def test_representative_and_members(self):
        for cycle_type in partitions_of(4):
            cls = ConjugacyClass(cycle_type)
            members = list(cls.members())

            assert cls.representative().cycle_type() == cycle_type
            assert len(members) == cls.size

        assert sum(ConjugacyClass(cycle_type).size for cycle_type in partitions_of(6)) == factorial(6)


class TestMurnaghanNakayama():
    def test_s3_values(self):
        assert chi([2, 1], [1, 1, 1]) == 2
        assert chi([2, 1], [2, 1]) == 0
        assert chi([2, 1], [3]) == -1
        assert chi([1, 1, 1], [2, 1]) == -1

    def test_s4_values(self):
        assert chi([3, 1], [2, 1, 1]) == 1
        assert chi([2, 2], [2, 1, 1]) == 0
        assert chi([2, 2], [2, 2]) == 2
        assert chi([2, 2], ConjugacyClass([3, 1])) == -1
        assert chi([1, 1, 1, 1], [2, 1, 1]) == -1

    def test_identity_class_is_dimension(self):
        for lam in partitions_of(7):
            assert chi(lam, [1] * 7) == dim_sn(lam)

    def test_weight_mismatch(self):
        with pytest.raises(WeightMismatchError):
            chi([2, 1], [2, 2])

    def test_chi_transposition(self):
        assert chi_transposition([3, 1]) == Fraction(1, 3)
        assert chi_transposition([2]) == 1
        assert chi_transposition([1, 1]) == -1

        for lam in partitions_of(6):
            assert chi_transposition(lam) == Fraction(chi(lam, [2, 1, 1, 1, 1]), dim_sn(lam))

        with pytest.raises(ParameterError):
            chi_transposition([1])


class TestScalars():
    def test_eta_values(self):
        assert eta([1, 1], 2) == 4
        assert eta([2], 2) == 0
        assert eta([2, 1], 2) == 6
        assert eta([1, 1, 1], 3) == 12

    def test_eta_does_not_depend_on_padding(self):
        assert eta([3, 2, 1], 3) == eta([3, 2, 1], 5)

    def test_eta_is_clique_edge_sum(self):
        # the clique Hamiltonian is 2 C(n,2) (e - mean transposition)
        for n in range(2, 9):
            for lam in partitions_of(n):
                assert eta(lam, lam.height) == 2 * comb(n, 2) * (1 - chi_transposition(lam))

    def test_eta_height(self):
        with pytest.raises(InvalidHeightError):
            eta([1, 1, 1], 2)

    def test_gamma_transpositions(self):
        for lam in partitions_of(6):
            assert gamma(2, lam) == comb(6, 2) * chi_transposition(lam)

    def test_gamma_full_cycle_on_trivial(self):
        for n in range(2, 8):
            assert gamma(n, [n]) == factorial(n - 1)

    def test_gamma3_closed_form(self):
        assert gamma(3, [2, 1]) == -1
        assert gamma3_closed_form([2, 1], 2) == -1

        for n in range(3, 10):
            for lam in partitions_of(n):
                for d in range(lam.height, lam.height + 3):
                    assert gamma3_closed_form(lam, d) == gamma(3, lam)

    def test_gamma_range(self):
        with pytest.raises(ParameterError):
            gamma(1, [2, 1])

        with pytest.raises(ParameterError):
            gamma(4, [2, 1])


class TestCharacterTable():
    def setup_class(self):
        self.table = character_table(5)

    def test_orthogonality(self):
        assert self.table.check_orthogonality()

        for n in range(1, 8):
            assert CharacterTable(n).check_orthogonality()

    def test_trivial_and_sign_rows(self):
        assert self.table.row([5]) == [1] * 7
        assert self.table.row([1, 1, 1, 1, 1]) == [ConjugacyClass(c).representative().sign for c in partitions_of(5)]

    def test_value(self):
        assert self.table.value(Partition([4, 1]), [2, 1, 1, 1]) == 2

    def test_to_frame(self):
        frame = self.table.to_frame()

        assert frame.shape == (7, 7)
        assert frame.loc[str(Partition([4, 1])), str(Partition([1, 1, 1, 1, 1]))] == 4

    def test_cap(self):
        with pytest.raises(CapExceededError):
            CharacterTable(13, cap=12)
