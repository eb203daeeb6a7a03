import cvxpy as cp
import numpy as np
import pytest

from scipy.linalg import eigvalsh
from unittest import mock

from lib.algebra import hamiltonian_element
from lib.npo import MomentSDP, SDPSolution, SdpSolver, default_solver, emit_sdpa, installed_solvers, read_sdpa, \
    relaxation_series, relaxation_table, solve, solve_levels
from lib.oracle import GraphSpec, graph_family, hamiltonian, irrep_element, max_eigenvalue, random_graph
from lib.partitions import partitions_of
from lib.util.errors import CapExceededError, NumericalFailure, ParameterError, SdpaFormatError

WEIGHTED = GraphSpec(5, [(1, 2, 0.5), (2, 3, 1.0), (3, 4, 0.25), (4, 5, 0.75), (1, 5, 1.0), (2, 5, 0.3)])


def connected_graphs(n, count, first_seed=0):
    graphs, seed = [], first_seed

    while len(graphs) < count:
        g = random_graph(n, seed=seed, density=0.6)
        seed += 1

        if g.is_connected():
            graphs.append(g)

    return graphs


@pytest.fixture(scope='module')
def solver():
    return SdpSolver(gap_tol=1e-8)


class TestSDPSolution():
    def test_status(self):
        solution = SDPSolution(4.0, 'optimal', gap=1e-9, level=1)

        assert solution.is_optimal
        assert solution.to_dict()['level'] == 1
        assert set(solution.to_dict()) == {'value', 'status', 'gap', 'primal_residual', 'dual_residual', 'level'}

        with pytest.raises(ParameterError):
            SDPSolution(4.0, 'converged')

    def test_gap_always_present(self):
        assert np.isnan(SDPSolution(float('nan'), 'infeasible').to_dict()['gap'])


class TestSdpSolver():
    def test_default_solver(self):
        assert default_solver() in ('MOSEK', 'CLARABEL', 'SCS')

    def test_single_edge(self, solver):
        solution = solver.solve(MomentSDP(graph_family('path', 2), 2, 1))

        assert solution.value == pytest.approx(4.0, abs=1e-5)
        assert solution.is_optimal
        assert solution.info == {'level': 1, 'basis_size': 2, 'solver': solver.solver}

    def test_fixed_moments(self, solver):
        solution = solver.solve(MomentSDP(graph_family('path', 2), 1, 1))

        assert solution.value == pytest.approx(0.0, abs=1e-9)
        assert solution.status == 'optimal'

    @pytest.mark.parametrize('graph, d, ell, expected', [
        (graph_family('path', 3), 2, 2, 6.0),
        (graph_family('clique', 3), 2, 2, 6.0),
        (graph_family('clique', 3), 3, 2, 12.0),
        (graph_family('star', 5), 3, 2, 12.0),
    ])
    def test_fixtures(self, solver, graph, d, ell, expected):
        assert solver.solve(MomentSDP(graph, d, ell)).value == pytest.approx(expected, abs=1e-4)

    def test_first_level_is_an_upper_bound(self, solver):
        assert solver.solve(MomentSDP(graph_family('clique', 3), 2, 1)).value >= 6.0 - 1e-5

    def test_localized(self, solver):
        p3 = graph_family('path', 3)

        assert solver.solve(MomentSDP(p3, 2, 2, localization=[2, 1])).value == pytest.approx(6.0, abs=1e-4)
        assert solver.solve(MomentSDP(p3, 2, 2, localization=[3])).value == pytest.approx(0.0, abs=1e-4)

    @pytest.mark.parametrize('n', [4, 5])
    @pytest.mark.parametrize('d', [2, 3])
    @pytest.mark.parametrize('seed', range(5))
    def test_exact_at_last_level(self, solver, n, d, seed):
        g = random_graph(n, seed=100 * n + seed, density=0.7)
        expected = max_eigenvalue(hamiltonian(g, d))

        assert solver.solve(MomentSDP(g, d, n - 1)).value == pytest.approx(expected, abs=1e-5)

    @pytest.mark.parametrize('g', connected_graphs(5, 10, first_seed=0) + connected_graphs(6, 10, first_seed=50))
    def test_second_level_is_sound(self, solver, g):
        expected = max_eigenvalue(hamiltonian(g, 3))
        second = solver.solve(MomentSDP(g, 3, 2)).value

        assert second >= expected - 1e-5
        assert second <= solver.solve(MomentSDP(g, 3, 1)).value + 1e-5

    @pytest.mark.parametrize('g', connected_graphs(7, 3, first_seed=0))
    def test_second_level_on_seven_vertices(self, solver, g):
        expected = max_eigenvalue(hamiltonian(g, 3))

        assert solver.solve(MomentSDP(g, 3, 2)).value >= expected - 1e-4

    @pytest.mark.parametrize('n, d', [(4, 2), (5, 2), (5, 3)])
    def test_localized_blocks_cover_global(self, solver, n, d):
        g = random_graph(n, seed=7, density=0.8)
        h = hamiltonian_element(g)
        values = []

        for lam in partitions_of(n, d):
            block = irrep_element(h, lam)
            value = solver.solve(MomentSDP(g, d, n - 1, localization=lam)).value
            values.append(value)

            assert value == pytest.approx(eigvalsh((block + block.T) / 2)[-1], abs=1e-4)

        assert max(values) == pytest.approx(max_eigenvalue(hamiltonian(g, d)), abs=1e-4)

    def test_cap(self):
        with pytest.raises(CapExceededError):
            SdpSolver(solver_cap=2).solve(MomentSDP(graph_family('clique', 3), 2, 1))

    def test_invalid_settings(self):
        with pytest.raises(ParameterError):
            SdpSolver(maxiter=0)

    def test_module_solve(self):
        assert solve(MomentSDP(graph_family('path', 2), 2, 1)).value == pytest.approx(4.0, abs=1e-5)


class TestSolverFallback():
    def setup_class(self):
        self.pencil = MomentSDP(graph_family('path', 2), 2, 1).reduce()

    def make_solver(self):
        solver = SdpSolver(logger=mock.MagicMock())
        solver.solvers = ['FIRST', 'SECOND']

        return solver

    @mock.patch.object(cp, 'installed_solvers', return_value=['SCS', 'CLARABEL', 'ECOS'])
    def test_preference_order(self, installed_mock):
        assert installed_solvers() == ['CLARABEL', 'SCS']
        assert installed_solvers('SCS') == ['SCS', 'CLARABEL']
        assert default_solver() == 'CLARABEL'

        with pytest.raises(ParameterError):
            installed_solvers('MOSEK')

    @mock.patch.object(cp, 'installed_solvers', return_value=['ECOS'])
    def test_nothing_installed(self, installed_mock):
        with pytest.raises(NumericalFailure):
            installed_solvers()

    def test_next_solver_takes_over(self):
        solver = self.make_solver()
        solved = SDPSolution(4.0, 'optimal', solver='SECOND')

        with mock.patch.object(SdpSolver, '_attempt', side_effect=[cp.error.SolverError('stalled'), solved]) as attempt:
            assert solver.solve_pencil(self.pencil) is solved
            assert [call.args[0] for call in attempt.call_args_list] == ['FIRST', 'SECOND']

        solver.logger.warning.assert_called_once()

    def test_every_solver_failing(self):
        solver = self.make_solver()

        with mock.patch.object(SdpSolver, '_attempt', side_effect=cp.error.SolverError('stalled')):
            with pytest.raises(NumericalFailure):
                solver.solve_pencil(self.pencil)

    def test_inaccurate_results(self):
        solver = self.make_solver()
        rough = SDPSolution(4.1, 'max-iterations', primal_residual=1e-3)
        close = SDPSolution(4.0, 'max-iterations', primal_residual=1e-9)

        with mock.patch.object(SdpSolver, '_attempt', side_effect=[rough, close]):
            assert solver.solve_pencil(self.pencil) is close

        infeasible = SDPSolution(float('nan'), 'infeasible')

        with mock.patch.object(SdpSolver, '_attempt', side_effect=[infeasible, rough]):
            assert solver.solve_pencil(self.pencil) is rough

        with mock.patch.object(SdpSolver, '_attempt', side_effect=[cp.error.SolverError('stalled'), infeasible]):
            assert solver.solve_pencil(self.pencil).status == 'infeasible'


class TestRelaxationSeries():
    def test_monotone_and_sound(self):
        expected = max_eigenvalue(hamiltonian(WEIGHTED, 3))
        series = relaxation_series(WEIGHTED, 3, 3, gap_tol=1e-8)

        assert len(series) == 3
        assert all(value >= expected - 1e-5 for value in series)
        assert all(later <= earlier + 1e-5 for earlier, later in zip(series, series[1:]))

    def test_table(self):
        table = relaxation_table(graph_family('path', 3), 2, 2)

        assert list(table.columns) == ['level', 'value', 'gap', 'status']
        assert list(table['level']) == [1, 2]
        assert table['value'].iloc[-1] == pytest.approx(6.0, abs=1e-4)

    def test_level_range(self):
        with pytest.raises(ParameterError):
            solve_levels(graph_family('path', 3), 2, 3)


class TestSdpa():
    def test_write_then_read(self, tmp_path):
        sdp = MomentSDP(WEIGHTED, 2, 2)
        pencil = sdp.reduce()
        path = str(tmp_path / 'weighted.dat-s')
        emit_sdpa(sdp, path)

        problem = read_sdpa(path)
        restored = problem.to_maximization()

        assert problem.m == pencil.dim
        assert problem.block_size == pencil.size
        assert problem.constant == pencil.objective_offset
        assert np.allclose(restored.offset, pencil.offset, atol=1e-13)
        assert np.allclose(restored.directions, pencil.directions, atol=1e-13)
        assert np.allclose(restored.objective, pencil.objective)

    def test_file_layout(self, tmp_path):
        path = tmp_path / 'k3.dat-s'
        emit_sdpa(MomentSDP(graph_family('clique', 3), 2, 2), str(path))
        lines = path.read_text().splitlines()

        assert lines[0].startswith('"')
        assert lines[2] == '1'

        for line in lines[5:]:
            matno, block, i, j, _ = line.split()

            assert block == '1' and int(i) <= int(j)

    def test_read_back_solves_to_same_value(self, solver, tmp_path):
        sdp = MomentSDP(graph_family('clique', 3), 2, 2)
        path = str(tmp_path / 'k3.dat-s')
        emit_sdpa(sdp, path)

        value = solver.solve_pencil(read_sdpa(path).to_maximization()).value

        assert value == pytest.approx(solver.solve(sdp).value, abs=1e-5)

    def test_fixed_moments_header(self, solver, tmp_path):
        path = str(tmp_path / 'edge.dat-s')
        emit_sdpa(MomentSDP(graph_family('path', 2), 1, 1), path)
        problem = read_sdpa(path)

        assert problem.m == 0
        assert solver.solve_pencil(problem.to_maximization()).value == pytest.approx(0.0, abs=1e-9)

    def test_reader_accepts_decorations(self, tmp_path):
        path = tmp_path / 'decorated.dat-s'
        path.write_text('* comment\n1 = mDIM\n1\n{2}\n(1.0)\n0 1 1 1 -1.0\n1 1 1 2 1.0\n')
        problem = read_sdpa(str(path))

        assert problem.c.tolist() == [1.0]
        assert problem.matrices[1][1, 0] == 1.0

    @pytest.mark.parametrize('text', ['1\n1\n', '1\n2\n2 2\n1.0\n', '1\n1\n2\n1.0\n0 1 1\n'])
    def test_malformed(self, tmp_path, text):
        path = tmp_path / 'bad.dat-s'
        path.write_text(text)

        with pytest.raises(SdpaFormatError):
            read_sdpa(str(path))
