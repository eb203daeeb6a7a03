import pandas as pd

from math import comb
from scipy.linalg import eigh
from typing import Callable, Dict, List

from lib.characters import character_table, chi, chi_transposition, eta, gamma, gamma3_closed_form
from lib.lr import count_standard_fillings, lr_expand, skew_standard_count
from lib.npo import MomentSDP
from lib.oracle import basis_family_ranks, degree_relation_residuals, hamiltonian, isotypic_projector, \
    low_degree_independence, max_eigenvalue, random_graph, swap_gellmann_residual, top_eigenpair
from lib.oracle.projectors import range_basis
from lib.partitions import SkewShape, dim_gl, dim_sn, partitions_of
from lib.solvers import BipartiteSolver, CliqueSolver, MultipartiteSolver, StarSolver
from lib.util.RunConfig import RunConfig

SUITES = ('relations', 'characters', 'dimensions', 'lr', 'solvers', 'npo', 'all')
REPORT_COLUMNS = ['suite', 'check', 'case', 'observed', 'expected', 'passed']

# families whose span is asserted on up to 5 letters and whose independence on up to 6
FAMILIES_BY_D = {3: ('B2', 'B3', 'B4hat'), 4: ('B4',)}


def _row(suite: str, check: str, case: str, observed, expected, passed: bool) -> dict:
    return {'suite': suite, 'check': check, 'case': case, 'observed': observed, 'expected': expected,
            'passed': bool(passed)}


def relations_report(d: int, config: RunConfig) -> List[dict]:
    rows = []
    tensor_norm, irrep_norm = degree_relation_residuals(d, cap=config.dense_cap, seed=config.seed)

    rows.append(_row('relations', 'antisymmetrizer vanishes', f'd={d}, n={d + 1}', tensor_norm,
                     f'< {config.identity_tol}', tensor_norm < config.identity_tol))
    rows.append(_row('relations', 'antisymmetrizer nonzero on tall irrep', f'd={d}, n={d + 1}', irrep_norm,
                     '> 0', irrep_norm > config.identity_tol))

    gellmann = swap_gellmann_residual(d)
    rows.append(_row('relations', 'swap from Gell-Mann', f'd={d}', gellmann, '< 1e-13', gellmann < 1e-13))

    for n in range(max(d - 1, 2), 7):
        report = low_degree_independence(d, n)
        rows.append(_row('relations', 'low degree independence', f'd={d}, n={n}', report['rank'], report['size'],
                         report['rank'] == report['size']))

    for name in FAMILIES_BY_D.get(d, ()):
        for n in range(4, 7):
            report = basis_family_ranks(name, n, spanning=n <= 5)
            rows.append(_row('relations', f'{name} independent', f'n={n}', report['rank'], report['size'],
                             report['rank'] == report['size']))

            if 'span_rank' in report:
                rows.append(_row('relations', f'{name} spans', f'n={n}', report['rank'], report['span_rank'],
                                 report['rank'] == report['span_rank']))

    return rows


def characters_report(d: int, config: RunConfig) -> List[dict]:
    rows = []

    for n in range(1, min(7, config.character_cap) + 1):
        rows.append(_row('characters', 'orthogonality', f'n={n}', None, None,
                         character_table(n, cap=config.character_cap).check_orthogonality()))

    mismatches = [lam for n in range(2, 10) for lam in partitions_of(n)
                  if eta(lam, lam.height) != 2 * comb(n, 2) * (1 - chi_transposition(lam))]
    rows.append(_row('characters', 'eta from transposition character', 'n<=9', len(mismatches), 0, not mismatches))

    mismatches = [lam for n in range(3, 11) for lam in partitions_of(n)
                  if gamma3_closed_form(lam, max(lam.height, 1)) != gamma(3, lam)]
    rows.append(_row('characters', 'gamma3 closed form', 'n<=10', len(mismatches), 0, not mismatches))

    for n in range(2, 11):
        partitions = partitions_of(n, d)
        vectors = {tuple(gamma(k, lam) for k in range(2, min(d, n) + 1)) for lam in partitions}
        rows.append(_row('characters', 'gamma vectors separate', f'n={n}, d={d}', len(vectors), len(partitions),
                         len(vectors) == len(partitions)))

    return rows


def dimensions_report(d: int, config: RunConfig) -> List[dict]:
    rows = []

    for e in range(1, 6):
        for n in range(1, 11):
            total = sum(dim_gl(lam, e) * dim_sn(lam) for lam in partitions_of(n, e))
            rows.append(_row('dimensions', 'Schur-Weyl', f'n={n}, d={e}', total, e ** n, total == e ** n))

    return rows


def lr_report(d: int, config: RunConfig) -> List[dict]:
    rows = []

    # chi^lam on S_(n-k) x S_k is the LR-weighted sum of products of characters
    for n in range(2, 7):
        mismatches = 0

        for lam in partitions_of(n):
            for k in range(1, n // 2 + 1):
                expansion = lr_expand(lam, k)

                for alpha in partitions_of(n - k):
                    for beta in partitions_of(k):
                        cycle_type = sorted(alpha.parts + beta.parts, reverse=True)
                        restricted = sum(c * chi(mu, alpha) * chi(nu, beta) for mu, nu, c in expansion)

                        mismatches += restricted != chi(lam, cycle_type)

        rows.append(_row('lr', 'restriction matches characters', f'n={n}', mismatches, 0, mismatches == 0))

    mismatches = []

    for n in range(3, 10):
        for lam in partitions_of(n):
            transposition = chi(lam, [2] + [1] * (n - 2))
            row_strip = skew_standard_count(SkewShape(lam, [2])) if lam.contains([2]) else 0
            column_strip = skew_standard_count(SkewShape(lam, [1, 1])) if lam.contains([1, 1]) else 0

            if row_strip - column_strip != transposition:
                mismatches.append(lam)

    rows.append(_row('lr', 'skew hooks give the transposition character', '3<=n<=9', len(mismatches), 0,
                     not mismatches))

    for n in range(2, 8):
        mismatches = [(lam, mu) for lam in partitions_of(n) for m in range(1, n) for mu in partitions_of(m)
                      if lam.contains(mu)
                      and skew_standard_count(SkewShape(lam, mu)) != count_standard_fillings(SkewShape(lam, mu))]
        rows.append(_row('lr', 'excited diagrams match chain count', f'n={n}', len(mismatches), 0, not mismatches))

    return rows


def _family_solvers(d: int, config: RunConfig):
    for n in range(3, 7):
        if d ** n > min(config.dense_cap, 1024):
            break

        yield f'clique n={n}', CliqueSolver(n, d)
        yield f'star n={n}', StarSolver(n, d)

        for k in range(1, n // 2 + 1):
            yield f'bipartite n={n}, k={k}', BipartiteSolver(n, k, d, enumerate_cap=config.enumerate_cap,
                                                             parallel_jobs=1)

    for parts in ((1, 1, 1), (2, 1, 1), (2, 2, 1)):
        if d ** sum(parts) <= min(config.dense_cap, 1024):
            yield f'multipartite {parts}', MultipartiteSolver(parts, d)


def solvers_report(d: int, config: RunConfig) -> List[dict]:
    rows = []

    for case, solver in _family_solvers(d, config):
        value = solver.max_value().value
        expected = max_eigenvalue(hamiltonian(solver.graph(), d), cap=config.dense_cap)
        passed = abs(value - expected) <= config.dense_tol * max(1.0, abs(expected))

        rows.append(_row('solvers', 'closed form matches oracle', f'{case}, d={d}', value, expected, passed))

    return rows


def npo_report(d: int, config: RunConfig) -> List[dict]:
    rows = []
    n = 5 if d ** 5 <= config.dense_cap else 4

    for seed in range(config.seed, config.seed + 3):
        g = random_graph(n, seed=seed, density=0.7)
        value, psi = top_eigenpair(hamiltonian(g, d), cap=config.dense_cap)

        for ell in (1, 2):
            sdp = MomentSDP(g, d, ell)
            x = sdp.moments_from_state(psi)
            residual = sdp.constraint_residual(x)

            rows.append(_row('npo', 'ground state satisfies constraints', f'n={n}, seed={seed}, level={ell}', residual,
                             '< 1e-10', residual < 1e-10))
            energy = float(sdp.objective_vector() @ x)
            rows.append(_row('npo', 'ground state attains objective', f'n={n}, seed={seed}, level={ell}', energy, value,
                             abs(energy - value) <= config.dense_tol * max(1.0, abs(value))))

    g = random_graph(4, seed=config.seed, density=0.8)
    dense = hamiltonian(g, d).to_dense(config.dense_cap)

    for lam in partitions_of(4, d):
        basis = range_basis(isotypic_projector(lam, 4, d, cap=config.projector_cap).to_dense(config.dense_cap))
        block = basis.T @ dense @ basis
        _, vectors = eigh((block + block.T) / 2)
        sdp = MomentSDP(g, d, 2, localization=lam)
        residual = sdp.constraint_residual(sdp.moments_from_state(basis @ vectors[:, -1]))

        rows.append(_row('npo', 'block ground state satisfies localized constraints', f'lambda={lam.parts}', residual,
                         '< 1e-10', residual < 1e-10))

    return rows


REPORTS: Dict[str, Callable[[int, RunConfig], List[dict]]] = {
    'relations': relations_report,
    'characters': characters_report,
    'dimensions': dimensions_report,
    'lr': lr_report,
    'solvers': solvers_report,
    'npo': npo_report,
}


def verify_suite(suite: str, d: int, config: RunConfig = None) -> pd.DataFrame:
    config = config or RunConfig()
    names = list(REPORTS) if suite == 'all' else [suite]
    rows = []

    for name in names:
        rows.extend(REPORTS[name](d, config))

    return pd.DataFrame(rows, columns=REPORT_COLUMNS)
