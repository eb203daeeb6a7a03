import pytest

from fractions import Fraction

from lib.lr import lr_coefficient, lr_expand
from lib.oracle import graph_family, hamiltonian, max_eigenvalue
from lib.partitions import Partition, balanced, partitions_of, uplus
from lib.solvers import BipartiteSolver, bipartite_block_spectrum, bipartite_max, bipartite_params, bipartite_table, \
    closed_form_value, delta, delta_content_form, sth_delta
from lib.util.errors import CapExceededError, ParameterError, UnprovedRegimeError

# (n, k, d) -> e0, e1, e*, optimal heights, feasible heights
HEIGHT_TABLE = {
    (4, 2, 3): (1, 2, Fraction(3, 2), [1, 2], [1, 2]),
    (5, 2, 3): (1, 2, Fraction(7, 4), [2], [2]),
    (5, 2, 4): (2, 3, Fraction(9, 4), [2], [2, 3]),
    (8, 2, 3): (2, 2, Fraction(13, 6), [2], [2]),
    (9, 2, 8): (6, 7, Fraction(21, 4), [6], [6, 7]),
    (6, 3, 4): (1, 3, Fraction(2), [2], [2]),
    (7, 3, 4): (2, 3, Fraction(9, 4), [2], [2]),
    (11, 3, 5): (3, 4, Fraction(10, 3), [3], [4]),
    (8, 4, 2): (1, 1, Fraction(1), [1], [1]),
    (8, 4, 3): (1, 2, Fraction(3, 2), [1, 2], []),
    (8, 4, 6): (2, 4, Fraction(3), [3], [2, 3, 4]),
    (9, 4, 3): (1, 2, Fraction(13, 8), [2], []),
    (9, 4, 4): (2, 3, Fraction(13, 6), [2], [2]),
    (9, 4, 5): (2, 3, Fraction(11, 4), [3], [3]),
    (11, 4, 4): (2, 3, Fraction(5, 2), [2], []),
}


class TestBipartiteParams():
    @pytest.mark.parametrize('triple', sorted(HEIGHT_TABLE))
    def test_height_table(self, triple):
        e0, e1, e_star, _, frak_E = HEIGHT_TABLE[triple]
        params = bipartite_params(*triple)

        assert (params.e0, params.e1, params.e_star_real, params.frak_E) == (e0, e1, e_star, frak_E)

    def test_unbalancing(self):
        assert not bipartite_params(8, 4, 3).balancing
        assert bipartite_params(6, 3, 4).balancing

    def test_closest_feasible(self):
        assert bipartite_params(8, 4, 6).closest_feasible() == [3]
        assert bipartite_params(8, 4, 3).closest_feasible() == []

    def test_to_dict(self):
        assert bipartite_params(9, 2, 8).to_dict()['e_star'] == '21/4'

    @pytest.mark.parametrize('n, k, d', [(6, 4, 3), (6, 0, 3), (6, 3, 6), (6, 3, 1)])
    def test_invalid(self, n, k, d):
        with pytest.raises(ParameterError):
            bipartite_params(n, k, d)


class TestDelta():
    def test_content_form(self):
        for n in range(2, 9):
            for k in range(1, n // 2 + 1):
                for lam in partitions_of(n):
                    for mu, nu, _ in lr_expand(lam, k):
                        assert delta_content_form(lam, mu, nu) == delta(lam, mu, nu, lam.height)

    def test_concatenation(self):
        for n in range(2, 13):
            for k in range(1, min(4, n - 1) + 1):
                for mu in partitions_of(n - k):
                    for nu in partitions_of(k):
                        if mu[-1] >= nu[0]:
                            lam = Partition(mu.parts + nu.parts)

                            assert delta(lam, mu, nu, lam.height) == 2 * k * (mu.height + n - k)

    def test_balanced_rows_maximize_merged_triples(self):
        for n in range(2, 13):
            for k in range(1, min(4, n - 1) + 1):
                best = {}

                for mu in partitions_of(n - k):
                    for nu in partitions_of(k):
                        heights = (mu.height, nu.height)
                        value = delta(uplus(mu, nu), mu, nu, sum(heights))
                        best[heights] = max(best.get(heights, value), value)

                for (e, f), value in best.items():
                    mu, nu = balanced(n - k, e), balanced(k, f)

                    assert delta(uplus(mu, nu), mu, nu, e + f) == value

    def test_full_height_maximizes_merged_triples(self):
        for n in range(3, 13):
            for k in range(1, min(4, n - 1) + 1):
                for d in range(2, 7):
                    height = min(d, n)
                    full = max(delta(uplus(balanced(n - k, e), balanced(k, height - e)), balanced(n - k, e),
                                     balanced(k, height - e), d)
                               for e in range(max(1, height - k), min(n - k, height - 1) + 1))

                    assert full == bipartite_max(n, k, d, mode='merged').value

    def test_crossing_identity(self):
        cases = 0

        for n in range(3, 13):
            for k in range(1, min(4, n - 1) + 1):
                for d in range(3, n):
                    for e in range(1, d - 1):
                        if e + 1 > n - k or d - e > k:
                            continue

                        mu, nu = balanced(n - k, e), balanced(k, d - e)
                        mu_next, nu_next = balanced(n - k, e + 1), balanced(k, d - e - 1)

                        if mu[-1] < nu[0] or nu_next[-1] < mu_next[0]:
                            continue

                        lam = Partition(mu.parts + nu.parts)
                        crossed = Partition(nu_next.parts + mu_next.parts)
                        difference = delta(lam, mu, nu, d) - delta(crossed, mu_next, nu_next, d)

                        assert difference == 2 * ((d - 1) * k + (1 - d + e) * n)
                        cases += 1

        assert cases > 0

    def test_unbalancing_concatenation_height(self):
        cases = 0

        for n in range(3, 13):
            for k in range(1, min(4, n // 2) + 1):
                for d in range(2, n):
                    if bipartite_params(n, k, d).balancing:
                        continue

                    largest = max(e for e in range(1, d) if (n - k) // e >= -(-k // (d - e)))

                    assert largest == d * (n - k) // n
                    assert bipartite_params(n, k, d).e0 == largest
                    cases += 1

        assert cases > 0

    def test_sth_delta(self):
        assert sth_delta(6, 3, 4, 2) == 28

        with pytest.raises(ParameterError):
            sth_delta(6, 3, 4, 1)

    def test_block_spectrum(self):
        for n in range(2, 8):
            for k in range(1, n):
                assert bipartite_block_spectrum([n], n, k, 1) == {0}

        assert bipartite_block_spectrum([2, 2, 1, 1], 6, 3, 4).max == 28


class TestBipartiteMax():
    def test_example_theorem(self):
        result = bipartite_max(6, 3, 4)

        assert result.value == 28
        assert result.witness == {'lambda': (2, 2, 1, 1), 'mu': (2, 1), 'nu': (2, 1)}
        assert result.info['optimal_heights'] == [2]
        assert result.info['swapped'] is False

    def test_example_enumerate(self):
        result = bipartite_max(6, 3, 4, mode='enumerate')

        assert result.value == 28
        assert result.witness == {'lambda': (2, 2, 1, 1), 'mu': (2, 1), 'nu': (2, 1)}

    def test_example_brute_force(self):
        op = hamiltonian(graph_family('bipartite', 6, k=3), 4)

        assert max_eigenvalue(op, method='iterative', tolerance=1e-10) == pytest.approx(28, abs=1e-6)

    def test_merged_triples_fall_short(self):
        enumerated = bipartite_max(10, 5, 5, mode='enumerate')
        merged = bipartite_max(10, 5, 5, mode='merged')
        lam, mu, nu = (enumerated.witness[key] for key in ('lambda', 'mu', 'nu'))

        assert enumerated.value == 72
        assert delta([2, 2, 2, 2, 2], [2, 2, 1], [2, 2, 1], 5) == 72
        assert delta(lam, mu, nu, 5) == 72 and lr_coefficient(lam, mu, nu) > 0
        assert merged.value == 70

    def test_unbalanced_optimum(self):
        result = bipartite_max(11, 3, 5)

        assert result.value == 66
        assert result.witness['lambda'] == (3, 3, 2, 2, 1)
        assert result.witness['lambda'] != balanced(11, 5)
        assert bipartite_max(11, 3, 5, mode='enumerate').value == 66

    def test_closed_forms(self):
        for n in range(3, 9):
            for k in range(1, n // 2 + 1):
                assert bipartite_max(n, k, 2).value == 2 * k * (n - k + 1)
                assert bipartite_max(n, k, 2, mode='enumerate').value == 2 * k * (n - k + 1)

                if n > 3:
                    expected = 2 * (k + 1) * (n - k) if n < 3 * k else 2 * k * (n - k + 2)
                    assert bipartite_max(n, k, 3, mode='enumerate').value == expected

    def test_closed_form_names(self):
        assert closed_form_value(6, 3, 1) == {'trivial': 0}
        assert closed_form_value(6, 3, 6) == {'large_d': 36}
        assert closed_form_value(8, 4, 2)['d2'] == 40
        assert 'unbalancing' in closed_form_value(8, 4, 3)

    def test_theorem_matches_enumeration(self):
        for n in range(3, 9):
            for k in range(1, n // 2 + 1):
                for d in range(2, n):
                    theorem = bipartite_max(n, k, d).value

                    assert theorem == bipartite_max(n, k, d, mode='enumerate').value

    def test_large_d(self):
        assert bipartite_max(5, 2, 5).value == 24
        assert bipartite_max(5, 2, 1).value == 0

    def test_swapped(self):
        result = bipartite_max(6, 4, 2)

        assert result.info['swapped'] is True
        assert result.value == bipartite_max(6, 2, 2).value

    def test_unproved_regime(self):
        with pytest.raises(UnprovedRegimeError):
            bipartite_max(10, 5, 5)

    def test_invalid(self):
        with pytest.raises(ParameterError):
            bipartite_max(6, 3, 4, mode='guess')

        with pytest.raises(CapExceededError):
            bipartite_max(20, 2, 3, mode='enumerate', enumerate_cap=18)


class TestBipartiteSolver():
    def test_solver(self):
        solver = BipartiteSolver(5, 2, 3)

        assert solver.max_value().value == bipartite_max(5, 2, 3).value
        assert solver.params().e0 == 1
        assert len(solver.graph().edges) == 6
        assert max(solver.spectrum()) == solver.max_value().value

    def test_parallel_enumeration(self):
        solver = BipartiteSolver(12, 3, 4, mode='enumerate', parallel_jobs=2)

        assert solver.max_value().value == bipartite_max(12, 3, 4).value

    def test_table(self):
        frame = bipartite_table(sorted(HEIGHT_TABLE))

        assert len(frame) == 15
        assert list(frame.columns) == ['n', 'k', 'd', 'e0', 'e1', 'e_star', 'frak_E', 'balancing', 'value', 'e_max']

        for row in frame.to_dict(orient='records'):
            e0, e1, e_star, e_max, frak_E = HEIGHT_TABLE[(row['n'], row['k'], row['d'])]

            assert (row['e0'], row['e1'], row['e_star'], row['frak_E']) == (e0, e1, str(e_star), frak_E)
            assert row['e_max'] == e_max

        assert frame.set_index(['n', 'k', 'd']).loc[(6, 3, 4), 'value'] == 28
