import pandas as pd

from fractions import Fraction
from multiprocessing import Pool
from typing import Dict, Iterable, List, Optional, Tuple

from lib.characters import eta
from lib.lr import lr_expand
from lib.oracle.GraphSpec import GraphSpec, graph_family
from lib.partitions import Partition, SkewShape, balanced, content_sum, partitions_of, uplus
from lib.solvers.BaseGraphSolver import BaseGraphSolver
from lib.solvers.BipartiteParams import BipartiteParams
from lib.solvers.IrrepSpectrum import IrrepSpectrum, MaxResult
from lib.util.errors import CapExceededError, InternalConsistencyError, InvalidHeightError, ParameterError, \
    UnprovedRegimeError, WeightMismatchError
from lib.util.logger import init_logger

MODES = ('theorem', 'enumerate', 'merged')

# below this many partitions the enumeration is not worth a process pool
PARALLEL_MIN_PARTITIONS = 24


def delta(lam, mu, nu, d: int) -> int:
    """eta_lam - eta_mu - eta_nu."""
    return eta(lam, d) - eta(mu, d) - eta(nu, d)


def delta_content_form(lam, mu, nu) -> int:
    """The same difference through contents: 2k(n-k) - 2 c(lam/mu) + 2 c(nu), for mu inside lam."""
    lam, mu, nu = Partition.coerce(lam), Partition.coerce(mu), Partition.coerce(nu)

    if lam.weight != mu.weight + nu.weight:
        raise WeightMismatchError(f'Invalid arguments passed to delta_content_form, {lam.parts} != {mu.parts} + {nu.parts}.')

    if not lam.contains(mu):
        raise ParameterError(f'Invalid "mu" argument passed to delta_content_form, {mu.parts} is not inside {lam.parts}.')

    k = nu.weight

    return 2 * k * mu.weight - 2 * content_sum(SkewShape(lam, mu)) + 2 * content_sum(nu)


def sth_delta(n: int, k: int, d: int, e: int) -> int:
    """
    Closed form of delta at balanced mu of n-k with e rows and balanced nu of k with d-e rows,
    merged, when mu_1 = nu_1: 2(-k^2 + k(n+s) + (d-e)(e-s) mu_e), s the number of rows equal to mu_1.
    """
    mu, nu = balanced(n - k, e), balanced(k, d - e)

    if mu[0] != nu[0]:
        raise ParameterError(f'Invalid arguments passed to sth_delta, first rows of {mu.parts} and {nu.parts} differ.')

    s = sum(1 for part in mu if part == mu[0])

    return 2 * (-k * k + k * (n + s) + (d - e) * (e - s) * mu[-1])


def _normalize(n: int, k: int) -> Tuple[int, bool]:
    if not 1 <= k < n:
        raise ParameterError(f'Invalid "k" argument, need 1 <= k < n (got k={k}, n={n}).')

    return (n - k, True) if 2 * k > n else (k, False)


def closed_form_value(n: int, k: int, d: int) -> Dict[str, int]:
    """
    Every closed form that applies to (n, k, d), keyed by name. Outside k <= 4 or d <= 3 the
    unbalancing and divisible forms describe the maximum over merged triples only.
    """
    k, _ = _normalize(n, k)

    if d == 1:
        return {'trivial': 0}

    if d >= n:
        return {'large_d': 4 * k * (n - k)}

    forms = {}

    if d == 2:
        forms['d2'] = 2 * k * (n - k + 1)

    if d == 3:
        forms['d3'] = 2 * (k + 1) * (n - k) if n < 3 * k else 2 * k * (n - k + 2)

    if not BipartiteParams(n, k, d).balancing:
        r = d * k % n
        e_prime = d * (n - k) // n
        forms['unbalancing'] = 2 * k * (e_prime + n - k) if r >= k else 2 * (n - k) * (d - e_prime - 1 + k)

    if n % d == 0 and (n - k) % (n // d) == 0:
        value = 2 * k * (n - k) * (1 + Fraction(d, n))

        if value.denominator != 1:
            raise InternalConsistencyError(f'Divisible closed form for {(n, k, d)} is not an integer: {value}.')

        forms['divisible'] = int(value)

    return forms


def bipartite_block_spectrum(lam, n: int, k: int, d: int) -> IrrepSpectrum:
    """{eta_lam - eta_mu - eta_nu : c^lam_{mu nu} > 0, mu of n-k, nu of k}."""
    lam = Partition.coerce(lam)

    if lam.weight != n:
        raise WeightMismatchError(f'Invalid "lambda" argument passed to bipartite_block_spectrum, {lam.parts} is not a partition of {n}.')

    if lam.height > d:
        raise InvalidHeightError(f'Invalid "lambda" argument passed to bipartite_block_spectrum, {lam.parts} has more than {d} rows.')

    return IrrepSpectrum(lam, [delta(lam, mu, nu, d) for mu, nu, _ in lr_expand(lam, k)])


def _best_for_partition(args) -> Optional[Tuple[int, Tuple[int, ...], Tuple[int, ...]]]:
    parts, k, d = args
    lam = Partition(parts)
    best = None

    for mu, nu, _ in lr_expand(lam, k):
        value = delta(lam, mu, nu, d)

        if best is None or value > best[0]:
            best = (value, mu.parts, nu.parts)

    return best


def _witness(lam, mu, nu) -> Dict[str, Partition]:
    return {'lambda': Partition.coerce(lam), 'mu': Partition.coerce(mu), 'nu': Partition.coerce(nu)}


def _max_enumerate(n: int, k: int, d: int, parallel_jobs: int, logger) -> MaxResult:
    partitions = partitions_of(n, d)
    jobs = [(lam.parts, k, d) for lam in partitions]
    logger.debug(f'enumerate: {len(jobs)} partitions of {n} with at most {d} rows')

    if parallel_jobs > 1 and len(jobs) >= PARALLEL_MIN_PARTITIONS:
        with Pool(processes=parallel_jobs) as pool:
            bests = pool.map(_best_for_partition, jobs)
    else:
        bests = [_best_for_partition(job) for job in jobs]

    # first maximum in partitions_of order, then lr_expand order
    best, witness = None, None

    for lam, candidate in zip(partitions, bests):
        if candidate is not None and (best is None or candidate[0] > best):
            best, witness = candidate[0], _witness(lam, candidate[1], candidate[2])

    return MaxResult(best, witness)


def _max_merged(n: int, k: int, d: int) -> MaxResult:
    best, witness = None, None

    for mu in partitions_of(n - k, d - 1):
        for nu in partitions_of(k, d - mu.height):
            lam = uplus(mu, nu)
            value = delta(lam, mu, nu, d)

            if best is None or value > best:
                best, witness = value, _witness(lam, mu, nu)

    return MaxResult(best, witness)


def _max_theorem(n: int, k: int, d: int, logger) -> MaxResult:
    if not (k <= 4 or d <= 3):
        raise UnprovedRegimeError(
            f'Theorem mode is only proved for k <= 4 or d <= 3 (got n={n}, k={k}, d={d}); use --mode enumerate.')

    params = BipartiteParams(n, k, d)
    candidates = sorted({params.e0, params.e1, *params.closest_feasible()})
    logger.debug(f'{params}: candidate heights {candidates}')

    evaluations = {}
    best, witness = None, None

    for e in candidates:
        if e > n - k or d - e > k:
            logger.debug(f'height {e} skipped, no balanced partitions of {n - k} and {k} with {e} and {d - e} rows')
            continue

        mu, nu = balanced(n - k, e), balanced(k, d - e)
        lam = uplus(mu, nu)
        value = delta(lam, mu, nu, d)
        evaluations[e] = value
        logger.debug(f'height {e}: lambda={lam}, mu={mu}, nu={nu}, delta={value}')

        if best is None or value > best:
            best, witness = value, _witness(lam, mu, nu)

    for name, value in closed_form_value(n, k, d).items():
        if value != best:
            raise InternalConsistencyError(f'Theorem mode gives {best} for {(n, k, d)} but the {name} closed form gives {value}.')

    return MaxResult(best, witness,
                     params=params.to_dict(),
                     optimal_heights=[e for e, value in evaluations.items() if value == best])


def bipartite_max(n: int, k: int, d: int, mode: str = 'theorem', enumerate_cap: int = 18, parallel_jobs: int = 1,
                  logger=None) -> MaxResult:
    """
    Largest eigenvalue of the K_{n-k,k} Hamiltonian in dimension d.

    theorem evaluates the candidate heights of the proved regime and cross-checks every closed
    form that applies, enumerate maximizes over all LR triples, and merged only over
    lambda = mu (+) nu.
    """
    logger = logger or init_logger(__name__)

    if mode not in MODES:
        raise ParameterError(f'Invalid "mode" argument "{mode}", expected one of {MODES}.')

    if d < 1:
        raise ParameterError(f'Invalid "d" argument passed to bipartite_max, d = {d} must be positive.')

    k, swapped = _normalize(n, k)

    if mode == 'enumerate' and n > enumerate_cap:
        raise CapExceededError('n', n, enumerate_cap)

    if d == 1:
        result = MaxResult(0, _witness([n], [n - k], [k]))
    elif d >= n and mode == 'theorem':
        result = MaxResult(4 * k * (n - k), _witness([1] * n, [1] * (n - k), [1] * k))
    elif mode == 'theorem':
        result = _max_theorem(n, k, d, logger)
    elif mode == 'enumerate':
        result = _max_enumerate(n, k, d, parallel_jobs, logger)
    else:
        result = _max_merged(n, k, d)

    result.info.update(mode=mode, swapped=swapped)

    return result


def bipartite_table(triples: Iterable[Tuple[int, int, int]]) -> pd.DataFrame:
    """Height parameters and the theorem-mode maximum for each (n, k, d)."""
    rows = []

    for n, k, d in triples:
        params = BipartiteParams(n, k, d)
        row = {
            'n': n,
            'k': k,
            'd': d,
            'e0': params.e0,
            'e1': params.e1,
            'e_star': str(params.e_star_real),
            'frak_E': params.frak_E,
            'balancing': params.balancing,
            'value': None,
            'e_max': None,
        }

        if k <= 4 or d <= 3:
            result = bipartite_max(n, k, d, mode='theorem')
            row['value'] = result.value
            row['e_max'] = result.info['optimal_heights']

        rows.append(row)

    return pd.DataFrame(rows, columns=['n', 'k', 'd', 'e0', 'e1', 'e_star', 'frak_E', 'balancing', 'value', 'e_max'])


class BipartiteSolver(BaseGraphSolver):
    def __init__(self, n: int, k: int, d: int, mode: str = 'theorem', **kwargs):
        super().__init__(n, d, **kwargs)

        self.k = k
        self.mode = mode
        self.enumerate_cap = kwargs.get('enumerate_cap', 18)
        self.parallel_jobs = kwargs.get('parallel_jobs', 1)

    def graph(self) -> GraphSpec:
        return graph_family('bipartite', self.n, k=self.k)

    def params(self) -> BipartiteParams:
        k, _ = _normalize(self.n, self.k)

        return BipartiteParams(self.n, k, self.d)

    def block_spectrum(self, lam) -> IrrepSpectrum:
        return bipartite_block_spectrum(lam, self.n, self.k, self.d)

    def max_value(self) -> MaxResult:
        return bipartite_max(self.n, self.k, self.d,
                             mode=self.mode,
                             enumerate_cap=self.enumerate_cap,
                             parallel_jobs=self.parallel_jobs,
                             logger=self.logger)
