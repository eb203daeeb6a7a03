"""Quantum Max d-Cut toolkit: exact spectra, brute-force oracle and moment relaxations."""
import argparse
import multiprocessing

from configparser import ConfigParser

from lib.cli.functions.generate_graphs import FAMILIES
from lib.cli.functions.verify_suite import SUITES
from lib.oracle.eigen import METHODS
from lib.solvers.BipartiteSolver import MODES

COMMANDS = ('eta', 'char', 'gamma', 'lr', 'clique', 'star', 'bipartite', 'brute', 'npo', 'verify', 'gen', 'table')

# the rows of the bipartite parameter table printed when no triples are given
DEFAULT_TRIPLES = ['4,2,3', '5,2,3', '5,2,4', '8,2,3', '9,2,8', '6,3,4', '7,3,4', '11,3,5',
                   '8,4,2', '8,4,3', '8,4,6', '9,4,3', '9,4,4', '9,4,5', '11,4,4']


def triple(text: str):
    try:
        n, k, d = (int(part) for part in text.split(','))
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{text}" is not a triple n,k,d')

    return n, k, d


def int_list(text: str):
    try:
        return [int(part) for part in text.split(',') if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f'"{text}" is not a comma separated list of integers')


class QmcCLI:
    def __init__(self, argv=None):
        config_parser = argparse.ArgumentParser(add_help=False, allow_abbrev=False)
        config_parser.add_argument("-f", "--from-config", help="Specify config file", metavar="FILE")

        args, _ = config_parser.parse_known_args(argv)
        defaults = {}

        if args.from_config:
            config = ConfigParser()
            config.read([args.from_config])
            defaults = dict(config.items("Defaults"))

        formatter = argparse.ArgumentDefaultsHelpFormatter
        self.parser = argparse.ArgumentParser(prog='qmc',
                                              allow_abbrev=False,
                                              formatter_class=formatter,
                                              parents=[config_parser],
                                              description=__doc__)

        self.parser.add_argument("--debug", "-D", action='store_true', help='Log at DEBUG level')
        self.parser.add_argument('--seed', type=int, default=0, help='Seed for random states and graphs')
        self.parser.add_argument('--dense-cap', type=int, default=4096, help='Largest d^n diagonalized densely')
        self.parser.add_argument('--projector-cap', type=int, default=8, help='Largest n for isotypic projectors')
        self.parser.add_argument('--matrix-cap', type=int, default=5000, help='Largest irrep dimension')
        self.parser.add_argument('--solver-cap', type=int, default=400, help='Largest moment matrix solved')
        self.parser.add_argument('--character-cap', type=int, default=12, help='Largest n for full character tables')
        self.parser.add_argument('--enumerate-cap', type=int, default=18, help='Largest n in enumerate mode')
        self.parser.add_argument('--parallel-jobs',
                                 type=int,
                                 default=multiprocessing.cpu_count(),
                                 help='How many processes in parallel')
        self.parser.add_argument('--identity-tol', type=float, default=1e-12, help='Tolerance of exact identities')
        self.parser.add_argument('--dense-tol', type=float, default=1e-9, help='Tolerance of dense eigenvalues')
        self.parser.add_argument('--iterative-tol', type=float, default=1e-7, help='Tolerance of Lanczos eigenvalues')
        self.parser.add_argument('--output', '-o', type=str, default=None, help='Also write the JSON result here')
        self.parser.add_argument('--no-timing', action='store_true', help='Report runtime_ms as 0 for byte-identical output')

        subparsers = self.parser.add_subparsers(help='Command', dest="command")

        eta_parser = subparsers.add_parser('eta', description='Clique eigenvalue eta on a lambda-block')
        eta_parser.add_argument('--partition', type=str, required=True, help='Partition, e.g. 4,1,1')
        eta_parser.add_argument('--d', type=int, default=None, help='Local dimension (defaults to the height)')

        char_parser = subparsers.add_parser('char', description='Symmetric group character value')
        char_parser.add_argument('--partition', type=str, required=True, help='Irrep partition, e.g. 3,1')
        char_parser.add_argument('--class', type=str, default=None, dest='cls',
                                 help='Cycle type, e.g. 2,1,1 (whole row when omitted)')

        gamma_parser = subparsers.add_parser('gamma', description='Scalar of the k-cycle sum on a lambda-block')
        gamma_parser.add_argument('--k', type=int, required=True, help='Cycle length')
        gamma_parser.add_argument('--partition', type=str, required=True, help='Partition, e.g. 2,1')
        gamma_parser.add_argument('--d', type=int, default=None, help='Padding height of the k = 3 closed form')

        lr_parser = subparsers.add_parser('lr', description='Littlewood-Richardson coefficient or expansion')
        lr_parser.add_argument('--lambda', type=str, required=True, dest='lam', help='Outer partition')
        lr_parser.add_argument('--mu', type=str, default=None, help='First factor')
        lr_parser.add_argument('--nu', type=str, default=None, help='Second factor')
        lr_parser.add_argument('--k', type=int, default=None, help='Expand over S_(n-k) x S_k instead')

        clique_parser = subparsers.add_parser('clique', description='Maximum of the clique Hamiltonian')
        clique_parser.add_argument('--n', type=int, required=True, help='Vertices')
        clique_parser.add_argument('--d', type=int, required=True, help='Local dimension')

        star_parser = subparsers.add_parser('star', description='Maximum or block spectrum of the star Hamiltonian')
        star_parser.add_argument('--n', type=int, required=True, help='Vertices')
        star_parser.add_argument('--d', type=int, required=True, help='Local dimension')
        star_parser.add_argument('--irrep', type=str, default=None, help='Only this lambda-block')

        bipartite_parser = subparsers.add_parser('bipartite', description='Maximum of the K_(n-k,k) Hamiltonian')
        bipartite_parser.add_argument('--n', type=int, required=True, help='Vertices')
        bipartite_parser.add_argument('--k', type=int, required=True, help='Size of one side')
        bipartite_parser.add_argument('--d', type=int, required=True, help='Local dimension')
        bipartite_parser.add_argument('--mode', type=str, default='theorem', choices=MODES, help='Solver mode')
        bipartite_parser.add_argument('--irrep', type=str, default=None, help='Only this lambda-block')

        brute_parser = subparsers.add_parser('brute', description='Brute force top eigenvalue on (C^d)^n')
        brute_parser.add_argument('--graph', type=str, required=True, help='Graph file')
        brute_parser.add_argument('--d', type=int, required=True, help='Local dimension')
        brute_parser.add_argument('--irrep', type=str, default=None, help='Diagonalize only this lambda-block')
        brute_parser.add_argument('--method', type=str, default='dense', choices=METHODS, help='Eigensolver')

        npo_parser = subparsers.add_parser('npo', description='Level-ell moment relaxation')
        npo_parser.add_argument('--graph', type=str, required=True, help='Graph file')
        npo_parser.add_argument('--d', type=int, required=True, help='Local dimension')
        npo_parser.add_argument('--level', type=int, default=1, help='Relaxation level')
        npo_parser.add_argument('--irrep', type=str, default=None, help='Localize to this lambda-block')
        npo_parser.add_argument('--emit', type=str, default=None, help='Write the SDP in SDPA sparse format')
        npo_parser.add_argument('--solve', action='store_true', help='Solve even when --emit is given')

        verify_parser = subparsers.add_parser('verify', description='Cross-module identity checks')
        verify_parser.add_argument('--suite', type=str, default='all', choices=SUITES, help='Which checks')
        verify_parser.add_argument('--d', type=int, default=3, help='Local dimension')

        gen_parser = subparsers.add_parser('gen', description='Write a graph file')
        gen_parser.add_argument('--family', type=str, required=True, choices=FAMILIES, help='Graph family')
        gen_parser.add_argument('--n', type=int, default=None, help='Vertices')
        gen_parser.add_argument('--k', type=int, default=None, help='Smaller side of a bipartite graph')
        gen_parser.add_argument('--parts', type=int_list, default=None, help='Part sizes, e.g. 3,2,2')
        gen_parser.add_argument('--weight', type=float, default=1.0, help='Uniform edge weight')
        gen_parser.add_argument('--density', type=float, default=0.5, help='Edge probability of a random graph')
        gen_parser.add_argument('--path', type=str, default=None, help='Output file')

        table_parser = subparsers.add_parser('table', description='Bipartite height parameters')
        table_parser.add_argument('--triples', type=triple, nargs='+', default=[triple(t) for t in DEFAULT_TRIPLES],
                                  help='Triples n,k,d')

        self.parser.set_defaults(**defaults)
        self.argv = argv

    def get_args(self, argv=None):
        return self.parser.parse_args(self.argv if argv is None else argv)

    def get_parser(self):
        return self.parser
