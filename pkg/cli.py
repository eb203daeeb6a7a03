import sys
import time

from lib.QmcToolkit import QmcToolkit
from lib.cli.QmcCLI import QmcCLI
from lib.util.errors import QmcError, exit_code_for
from lib.util.logger import init_logger
from lib.util.serialize import dumps, result_document

# global options that do not describe the computation itself
GLOBAL_OPTIONS = ('debug', 'from_config', 'output', 'no_timing', 'parallel_jobs', 'dense_cap', 'projector_cap',
                  'matrix_cap', 'solver_cap', 'character_cap', 'enumerate_cap', 'identity_tol', 'dense_tol',
                  'iterative_tol')


def run_command(toolkit: QmcToolkit, args) -> dict:
    if args.command == 'eta':
        return toolkit.eta(args.partition, d=args.d)
    elif args.command == 'char':
        return toolkit.char(args.partition, cls=args.cls)
    elif args.command == 'gamma':
        return toolkit.gamma(args.k, args.partition, d=args.d)
    elif args.command == 'lr':
        return toolkit.lr(args.lam, mu=args.mu, nu=args.nu, k=args.k)
    elif args.command == 'clique':
        return toolkit.clique(args.n, args.d)
    elif args.command == 'star':
        return toolkit.star(args.n, args.d, irrep=args.irrep)
    elif args.command == 'bipartite':
        return toolkit.bipartite(args.n, args.k, args.d, mode=args.mode, irrep=args.irrep)
    elif args.command == 'brute':
        return toolkit.brute(args.graph, args.d, irrep=args.irrep, method=args.method)
    elif args.command == 'npo':
        return toolkit.npo(args.graph, args.d, args.level, irrep=args.irrep, emit=args.emit, solve=args.solve)
    elif args.command == 'verify':
        return toolkit.verify(args.suite, args.d)
    elif args.command == 'gen':
        return toolkit.gen(args.family, n=args.n, k=args.k, parts=args.parts, weight=args.weight,
                           density=args.density, path=args.path)
    elif args.command == 'table':
        return toolkit.table(args.triples)

    raise QmcError(f'Unknown command "{args.command}".')


def write_document(document: dict, output: str = None):
    text = dumps(document)
    sys.stdout.write(text + '\n')

    if output:
        with open(output, 'w') as output_file:
            output_file.write(text + '\n')


def main(argv=None) -> int:
    qmc_cli = QmcCLI(argv)
    args = qmc_cli.get_args()

    if args.command is None:
        qmc_cli.get_parser().print_help(sys.stderr)
        return 2

    logger = init_logger(__name__, show_debug=args.debug)
    inputs = {key: value for key, value in vars(args).items() if key not in GLOBAL_OPTIONS and key != 'command'}

    start = time.perf_counter()
    exit_code = 0

    try:
        toolkit = QmcToolkit(**vars(args), logger=logger)
        result = run_command(toolkit, args)

        if args.command == 'verify' and not result['passed']:
            exit_code = 3
    except (QmcError, OSError, ValueError, ArithmeticError) as error:
        exit_code = exit_code_for(error)
        logger.error(f'{type(error).__name__}: {error}')
        result = {'error': {'type': type(error).__name__, 'message': str(error)}}

    runtime_ms = 0 if args.no_timing else (time.perf_counter() - start) * 1000
    write_document(result_document(args.command, inputs, result, runtime_ms), args.output)

    return exit_code


if __name__ == '__main__':
    sys.exit(main())
