"""Verification suites cross-checking the exact deciders against the oracle.

Each suite returns a SuiteResult; ``selftest`` runs them at reduced size, the
acceptance tests at full size.
"""

from __future__ import annotations

import itertools
import math
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional

from .algebra import conjugacy_class, in_boolean_algebra, in_cone
from .cyclotomic import cyc_context, cyclotomic_poly, divisors, poly_mul
from .diophantine import (
    build_counterexample_5, counterexample_seeds_5, is_scalar_multiple,
    solutions_three_squares, verify_counterexample,
)
from .groups import (
    Q8_NAMES, Q8_TABLE, GMultiset, GroupElement, GroupSpec, abelian, is_inverse_closed,
    q8_mul, q8_times,
)
from .oracle import commute_check, oracle_check
from .sampling import (
    random_abelian_sample, random_cone_member, random_hamiltonian_sample,
    random_hamiltonian_structured, random_inverse_closed, random_q8_cone_without_pm1,
    random_q8_without_pm1,
)
from .spectra import (
    Rational, Spectrum, abelian_spectrum, check_bookkeeping, elementary_abelian_analysis,
    extract_Bq, hamiltonian_conditions, hamiltonian_spectrum, is_integral_abelian, rho_eps,
)

DEFAULT_SEED = 20100503


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    stats: Dict[str, int] = field(default_factory=dict)
    spectra_checked: int = 0
    bookkeeping_failures: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures and not self.bookkeeping_failures

    def fail(self, msg: str) -> None:
        self.failures.append(msg)

    def bump(self, key: str) -> None:
        self.stats[key] = self.stats.get(key, 0) + 1

    def bookkeep(self, spec: GroupSpec, S: GMultiset, spectrum: Spectrum, label: str) -> None:
        self.spectra_checked += 1
        if not check_bookkeeping(spec, S, spectrum):
            self.bookkeeping_failures.append(f'{label}: {spec} {S!r}')

    def summary(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        extra = ', '.join(f'{k}={v}' for k, v in sorted(self.stats.items()))
        line = f'{status} {self.name}: {self.checked} checks, {self.spectra_checked} spectra'
        if extra:
            line += f' ({extra})'
        line += f' [{self.elapsed:.1f}s]'
        if self.failures:
            line += f'; first failure: {self.failures[0]}'
        elif self.bookkeeping_failures:
            line += f'; bookkeeping failure: {self.bookkeeping_failures[0]}'
        return line


def _timed(fn: Callable[..., SuiteResult]):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def oracle_spectrum(eig: Dict[int, int]) -> Spectrum:
    return Spectrum([(Rational(v), m) for v, m in eig.items()])


GOLDEN_SET = GMultiset({
    GroupElement('i', (1,)): 1, GroupElement('-i', (2,)): 1,
    GroupElement('j', (1,)): 1, GroupElement('-j', (2,)): 1,
    GroupElement('k', (1,)): 1, GroupElement('-k', (2,)): 1,
})
GOLDEN_SPECTRUM = {6: 1, 3: 4, 1: 6, 0: 4, -2: 3, -3: 6}


def factor_lists(max_order: int) -> List[tuple]:
    """Non-decreasing factor lists (each factor >= 2) of every order <= max_order,
    the trivial group first."""
    out = [()]

    def rec(prefix, prod, lo):
        for n in range(lo, max_order // prod + 1):
            cur = prefix + (n,)
            out.append(cur)
            rec(cur, prod * n, n)
    rec((), 1, 2)
    return sorted(out, key=lambda f: (math.prod(f), f))


# -- individual suites ------------------------------------------------------------

@_timed
def q8_relations(table=Q8_TABLE) -> SuiteResult:
    """Presentation relations, associativity and agreement with the 2x2 representation."""
    res = SuiteResult('q8_relations')

    def m(x, y):
        return q8_mul(x, y, table)

    for name, got in (('i^2', m('i', 'i')), ('j^2', m('j', 'j')), ('k^2', m('k', 'k')),
                      ('ijk', m(m('i', 'j'), 'k'))):
        res.checked += 1
        if got != '-1':
            res.fail(f'{name} = {got}, expected -1')
    res.checked += 1
    if m('-1', '-1') != '1':
        res.fail('(-1)^2 != 1')
    for x, y, z in itertools.product(Q8_NAMES, repeat=3):
        res.checked += 1
        if m(m(x, y), z) != m(x, m(y, z)):
            res.fail(f'({x}{y}){z} != {x}({y}{z})')
            break
    for x, y in itertools.product(Q8_NAMES, repeat=2):
        res.checked += 1
        if _gauss_matmul(rho_eps(x), rho_eps(y)) != rho_eps(m(x, y)):
            res.fail(f'rho({x}) rho({y}) != rho({m(x, y)})')
            break
    return res


def _gauss_matmul(P, Q):
    def gm(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def ga(a, b):
        return (a[0] + b[0], a[1] + b[1])
    return tuple(tuple(ga(gm(P[r][0], Q[0][c]), gm(P[r][1], Q[1][c])) for c in range(2))
                 for r in range(2))


@_timed
def golden_example() -> SuiteResult:
    """Q8 x C3 with the six-element set: integral, outside B(G), known spectrum."""
    res = SuiteResult('golden_example')
    G, S = q8_times(3), GOLDEN_SET
    rep = hamiltonian_conditions(G, S)
    res.checked += 1
    if not (rep.cond_i and rep.cond_ii and rep.cond_iii):
        res.fail(f'conditions not all satisfied: {rep.failures()}')
    res.checked += 1
    if in_cone(G, S):
        res.fail('S unexpectedly in C(G)')
    sp = hamiltonian_spectrum(G, S)
    res.bookkeep(G, S, sp, 'golden exact')
    res.checked += 1
    if not sp.is_integral() or sp.as_dict() != GOLDEN_SPECTRUM:
        res.fail(f'exact spectrum {sp.format()}')
    orc = oracle_check(G, S)
    res.checked += 1
    if orc.spectrum != GOLDEN_SPECTRUM:
        res.fail(f'oracle spectrum {orc.spectrum}')
    else:
        res.bookkeep(G, S, oracle_spectrum(orc.spectrum), 'golden oracle')
    return res


@_timed
def abelian_equivalence(seed: int = DEFAULT_SEED, per_group: int = 200, max_order: int = 24,
                 max_mult: int = 3) -> SuiteResult:
    """Abelian groups: character sums rational <=> cone membership <=> oracle integral."""
    res = SuiteResult('abelian_equivalence')
    rng = random.Random(seed)
    for factors in factor_lists(max_order):
        spec = abelian(*factors)
        for _ in range(per_group):
            S = random_abelian_sample(spec, rng, max_mult)
            res.checked += 1
            try:
                exact = is_integral_abelian(spec, S)
            except Exception as exc:  # InconsistencyError included
                res.fail(f'{spec} {S!r}: {exc}')
                continue
            orc = oracle_check(spec, S)
            res.bump('integral' if exact else 'non_integral')
            if exact != orc.is_integral:
                res.fail(f'{spec} {S!r}: exact {exact}, oracle {orc.is_integral}')
                continue
            sp = abelian_spectrum(spec, S)
            res.bookkeep(spec, S, sp, 'abelian exact')
            if exact:
                res.bookkeep(spec, S, oracle_spectrum(orc.spectrum), 'abelian oracle')
                if sp.as_dict() != orc.spectrum:
                    res.fail(f'{spec} {S!r}: spectra differ {sp.format()} vs {orc.spectrum}')
            elif sp.is_integral():
                res.fail(f'{spec} {S!r}: non-integral verdict but rational spectrum')
    res.stats['groups'] = len(factor_lists(max_order))
    return res


HAMILTONIAN_SUITE_GROUPS = ((2,), (3,), (4,), (5,), (2, 2))


@_timed
def hamiltonian_equivalence(seed: int = DEFAULT_SEED, per_group: int = 100,
                            groups=HAMILTONIAN_SUITE_GROUPS, max_mult: int = 3) -> SuiteResult:
    """Q8 x A: conditions (i)-(iii) <=> oracle integral, spectra equal when integral."""
    res = SuiteResult('hamiltonian_equivalence')
    rng = random.Random(seed)
    for factors in groups:
        spec = q8_times(*factors)
        for _ in range(per_group):
            S = random_hamiltonian_sample(spec, rng, max_mult)
            res.checked += 1
            verdict = hamiltonian_conditions(spec, S).overall
            orc = oracle_check(spec, S)
            res.bump('integral' if verdict else 'non_integral')
            if verdict and not in_cone(spec, S):
                res.bump('integral_outside_cone')
            if verdict != orc.is_integral:
                res.fail(f'{spec} {S!r}: conditions {verdict}, oracle {orc.is_integral}')
                continue
            sp = hamiltonian_spectrum(spec, S)
            res.bookkeep(spec, S, sp, 'hamiltonian exact')
            if sp.is_integral() != verdict:
                res.fail(f'{spec} {S!r}: spectrum integrality {sp.is_integral()} vs {verdict}')
            if verdict:
                res.bookkeep(spec, S, oracle_spectrum(orc.spectrum), 'hamiltonian oracle')
                if sp.as_dict() != orc.spectrum:
                    res.fail(f'{spec} {S!r}: spectra differ {sp.format()} vs {orc.spectrum}')
    return res


@_timed
def counterexample_family(count: int = 3) -> SuiteResult:
    """Integral multisets over Q8 x C5 outside the cone, alpha_lambda = 10 alpha."""
    res = SuiteResult('counterexample_family')
    G = q8_times(5)
    built = []
    for sol in counterexample_seeds_5(count):
        m, n, alpha = sol
        S = build_counterexample_5(sol)
        built.append(S)
        res.checked += 1
        if not is_inverse_closed(G, S):
            res.fail(f'{sol}: not inverse-closed')
            continue
        if not verify_counterexample(G, S):
            res.fail(f'{sol}: verification failed')
        rep = hamiltonian_conditions(G, S)
        if not rep.cond_ii:
            res.fail(f'{sol}: condition (ii) fails')
        for chk in rep.characters[1:]:
            res.checked += 1
            if chk.alpha != 10 * alpha:
                res.fail(f'{sol}: alpha at {chk.character} is {chk.alpha}, expected {10 * alpha}')
        sp = hamiltonian_spectrum(G, S)
        res.bookkeep(G, S, sp, f'counterexample {sol} exact')
        orc = oracle_check(G, S)
        if orc.is_integral:
            res.bookkeep(G, S, oracle_spectrum(orc.spectrum), f'counterexample {sol} oracle')
            if sp.as_dict() != orc.spectrum:
                res.fail(f'{sol}: spectra differ')
    for S, T in itertools.combinations(built, 2):
        res.checked += 1
        if is_scalar_multiple(S, T):
            res.fail('two constructed multisets are multiples of one another')
    return res


@_timed
def simple_q8_cp(seed: int = DEFAULT_SEED, samples: int = 500, p: int = 5) -> SuiteResult:
    """Simple graphs over Q8 x C_p, p != 3: integral => (P1) and (P2); unions of atoms integral."""
    res = SuiteResult('simple_q8_cp')
    rng = random.Random(seed)
    G = q8_times(p)
    A = G.abelian_part()
    for t in range(samples):
        kind = t % 3
        if kind == 0:
            S = random_inverse_closed(G, rng, 1, density=rng.random())
        elif kind == 1:
            S = random_hamiltonian_structured(G, rng, 1)
        else:
            S = random_cone_member(G, rng, 1)
        res.checked += 1
        rep = hamiltonian_conditions(G, S)
        res.bookkeep(G, S, hamiltonian_spectrum(G, S), 'simple exact')
        if kind == 2 and not rep.overall:
            res.fail(f'union of atoms not integral: {S!r}')
        if not rep.overall:
            res.bump('non_integral')
            continue
        res.bump('integral')
        B = extract_Bq(G, S)
        p1 = in_boolean_algebra(A, B['1']) and in_boolean_algebra(A, B['-1'])
        p2 = all(B[q] == B['-' + q] and in_boolean_algebra(A, B[q]) for q in 'ijk')
        if not (p1 and p2):
            res.fail(f'integral S violates (P1)/(P2): {S!r}')
    return res


@_timed
def commute_suite(seed: int = DEFAULT_SEED, samples: int = 50, factors=(3,)) -> SuiteResult:
    """Cayley matrices of conjugation-closed T commute with every Cayley matrix."""
    res = SuiteResult('commute')
    rng = random.Random(seed)
    G = q8_times(*factors)
    classes = []
    for g in G.elements:
        cc = conjugacy_class(G, g)
        if cc not in classes:
            classes.append(cc)
    Ts = []
    for mask in range(1 << len(classes)):
        T = GMultiset([g for r, cc in enumerate(classes) if mask >> r & 1 for g in cc])
        if is_inverse_closed(G, T):
            Ts.append(T)
    res.stats['classes'] = len(classes)
    res.stats['T_sets'] = len(Ts)
    for _ in range(samples):
        S = random_inverse_closed(G, rng, 3)
        for T in Ts:
            res.checked += 1
            if not commute_check(G, S, T):
                res.fail(f'A_S A_T != A_T A_S for S={S!r}, T={T!r}')
    bad_T = GMultiset({GroupElement('i', (0,) * len(factors)): 1})
    res.checked += 1
    try:
        commute_check(G, GMultiset(), bad_T)
    except ValueError:
        pass
    else:
        res.fail('non-conjugation-closed T accepted')
    return res


@_timed
def cyclotomic_suite(max_m: int = 60) -> SuiteResult:
    """prod_{d|m} Phi_d = x^m - 1 and sum_{t<m} z^t = 0."""
    res = SuiteResult('cyclotomic')
    for m in range(1, max_m + 1):
        prod = (1,)
        for d in divisors(m):
            prod = poly_mul(prod, cyclotomic_poly(d))
        res.checked += 1
        if prod != (-1,) + (0,) * (m - 1) + (1,):
            res.fail(f'product of Phi_d over d | {m} is {prod}')
        if m >= 2:
            ctx = cyc_context(m)
            total = ctx.zero()
            for t in range(m):
                total = total + ctx.root(t)
            res.checked += 1
            if total:
                res.fail(f'sum of {m}-th roots of unity reduces to {total!r}')
    return res


@_timed
def pgeometry_suite(seed: int = DEFAULT_SEED, cone_samples: int = 50, free_samples: int = 50,
                    p: int = 3, d: int = 2) -> SuiteResult:
    """Q8 x C_p^d: cone members give constant b_r and alpha^2 = 0; T(e) identities on sets."""
    res = SuiteResult('pgeometry')
    rng = random.Random(seed)
    G = q8_times(*([p] * d))
    for _ in range(cone_samples):
        S = random_q8_cone_without_pm1(G, rng, 3)
        rep = elementary_abelian_analysis(G, S)
        res.checked += 1
        if not rep.constant_on_atoms or not rep.all_squares or any(rep.alpha_squared.values()):
            res.fail(f'cone member gave nonzero or non-square data: {S!r}')
    for _ in range(free_samples):
        S = random_q8_without_pm1(G, rng, 1)
        rep = elementary_abelian_analysis(G, S)
        size = sum(rep.b_prime_sizes[q] for q in 'ijk')
        res.checked += 1
        if rep.identity_coefficient != -2 * size:
            res.fail(f'T(e) = {rep.identity_coefficient}, expected {-2 * size}')
        if rep.off_identity_sum != 2 * size:
            res.fail(f'off-identity sum {rep.off_identity_sum}, expected {2 * size}')
        if rep.constant_on_atoms:
            res.bump('constant')
            cond = hamiltonian_conditions(G, S)
            for chk in cond.characters[1:]:
                if -chk.h.as_rational_integer() != rep.alpha_squared[chk.character]:
                    res.fail(f'alpha^2 mismatch at {chk.character}')
    return res


@_timed
def p7_probe(bound: int = 50) -> SuiteResult:
    res = SuiteResult('p7_probe')
    res.checked += 1
    sols = solutions_three_squares(7, bound)
    if sols:
        res.fail(f'unexpected solutions {sols[:3]}')
    return res


def run_selftest(seed: int = DEFAULT_SEED, full: bool = False,
                 only: Optional[List[str]] = None) -> List[SuiteResult]:
    scale = {
        'q8_relations': lambda: q8_relations(),
        'cyclotomic': lambda: cyclotomic_suite(60),
        'golden_example': lambda: golden_example(),
        'abelian_equivalence': lambda: abelian_equivalence(seed, 200 if full else 5, 24 if full else 12),
        'hamiltonian_equivalence': lambda: hamiltonian_equivalence(seed, 100 if full else 6),
        'counterexample_family': lambda: counterexample_family(3),
        'simple_q8_cp': lambda: simple_q8_cp(seed, 500 if full else 60),
        'commute': lambda: commute_suite(seed, 50 if full else 2),
        'pgeometry': lambda: pgeometry_suite(seed, 50 if full else 10, 50 if full else 10),
        'p7_probe': lambda: p7_probe(50),
    }
    names = only or list(scale)
    unknown = [n for n in names if n not in scale]
    if unknown:
        raise ValueError(f'unknown suite(s): {", ".join(unknown)}; choose from {", ".join(scale)}')
    return [scale[n]() for n in names]
