import argparse
import json
import pytest

from unittest import mock

import cli

from lib.QmcToolkit import QmcToolkit
from lib.cli.QmcCLI import DEFAULT_TRIPLES, QmcCLI, int_list, triple
from lib.util.errors import NumericalFailure


def run(argv, capsys):
    code = cli.main(argv)

    return code, json.loads(capsys.readouterr().out)


class TestQmcCLI():
    def setup_class(self):
        self.parser = QmcCLI([]).get_parser()

    def test_defaults(self):
        args = self.parser.parse_args(['eta', '--partition', '2,1'])

        assert args.command == 'eta'
        assert args.d is None
        assert args.seed == 0
        assert args.no_timing is False

    def test_subcommand_options(self):
        args = self.parser.parse_args(['lr', '--lambda', '3,2,1', '--mu', '2,1', '--nu', '2,1'])
        assert (args.lam, args.mu, args.nu, args.k) == ('3,2,1', '2,1', '2,1', None)

        args = self.parser.parse_args(['char', '--partition', '3,1', '--class', '2,2'])
        assert args.cls == '2,2'

        args = self.parser.parse_args(['npo', '--graph', 'g.txt', '--d', '3'])
        assert (args.level, args.irrep, args.emit, args.solve) == (1, None, None, False)

    def test_local_dimension_is_not_a_global_prefix(self):
        for argv in (['clique', '--n', '6', '--d', '4'],
                     ['star', '--n', '5', '--d', '4'],
                     ['bipartite', '--n', '6', '--k', '3', '--d', '4'],
                     ['npo', '--graph', 'g.txt', '--d', '4'],
                     ['--debug', '--dense-cap', '64', 'eta', '--partition', '2,1', '--d', '4']):
            assert self.parser.parse_args(argv).d == 4

        with pytest.raises(SystemExit):
            self.parser.parse_args(['--dense', '64', 'eta', '--partition', '2,1'])

    def test_table_defaults(self):
        args = self.parser.parse_args(['table'])

        assert len(args.triples) == len(DEFAULT_TRIPLES) == 15
        assert (6, 3, 4) in args.triples

    def test_choices(self):
        with pytest.raises(SystemExit):
            self.parser.parse_args(['bipartite', '--n', '6', '--k', '3', '--d', '4', '--mode', 'guess'])

    def test_argument_types(self):
        assert triple('6,3,4') == (6, 3, 4)
        assert int_list('3,2,2') == [3, 2, 2]

        with pytest.raises(argparse.ArgumentTypeError):
            triple('6,3')

        with pytest.raises(argparse.ArgumentTypeError):
            int_list('3,x')

    def test_from_config(self, tmp_path):
        path = tmp_path / 'config.ini'
        path.write_text('[Defaults]\nseed = 7\nsolver_cap = 50\n')
        args = QmcCLI(['-f', str(path), 'gen', '--family', 'random', '--n', '5']).get_args()

        assert args.seed == 7
        assert args.solver_cap == 50


class TestMain():
    def test_eta(self, capsys):
        code, document = run(['--no-timing', 'eta', '--partition', '2,1'], capsys)

        assert code == 0
        assert document['schema'] == 'qmc/1'
        assert document['command'] == 'eta'
        assert document['inputs']['partition'] == '2,1'
        assert document['result'] == {'eta': 6, 'lambda': [2, 1], 'd': 2}
        assert document['runtime_ms'] == 0

    def test_output_is_reproducible(self, capsys):
        argv = ['--no-timing', 'bipartite', '--n', '6', '--k', '3', '--d', '4']

        cli.main(argv)
        first = capsys.readouterr().out
        cli.main(argv)

        assert capsys.readouterr().out == first
        assert json.loads(first)['result']['value'] == 28

    def test_output_file(self, capsys, tmp_path):
        path = tmp_path / 'result.json'
        cli.main(['--no-timing', '-o', str(path), 'clique', '--n', '4', '--d', '3'])

        assert path.read_text() == capsys.readouterr().out

    def test_usage_error(self, capsys):
        code, document = run(['eta', '--partition', '1,2'], capsys)

        assert code == 2
        assert document['result']['error']['type'] == 'InvalidPartitionError'

    def test_missing_graph(self, capsys, tmp_path):
        code, document = run(['brute', '--graph', str(tmp_path / 'missing.txt'), '--d', '2'], capsys)

        assert code == 2
        assert document['result']['error']['type'] == 'GraphFormatError'

    @mock.patch.object(QmcToolkit, 'brute', side_effect=NumericalFailure('Lanczos broke down'))
    def test_numerical_failure(self, brute_mock, capsys):
        code, document = run(['brute', '--graph', 'data/graphs/k3.txt', '--d', '2'], capsys)

        assert code == 3
        assert document['result']['error']['message'] == 'Lanczos broke down'
        brute_mock.assert_called_once()

    @mock.patch.object(QmcToolkit, 'verify', return_value={'passed': False, 'failures': 1})
    def test_failed_verify(self, verify_mock, capsys):
        code, _ = run(['verify', '--suite', 'characters'], capsys)

        assert code == 3
        verify_mock.assert_called_once_with('characters', 3)

    def test_no_command(self, capsys):
        assert cli.main([]) == 2
