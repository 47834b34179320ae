"""Full-size acceptance runs. Each test prints one PASS/FAIL line in the
terminal summary (see conftest.py). Runtime limits are asserted directly."""

import io
import time

import pytest

from intcayley import cli
from intcayley.diophantine import solutions_three_squares
from intcayley.suites import (
    DEFAULT_SEED, abelian_equivalence, commute_suite, counterexample_family, cyclotomic_suite,
    golden_example, hamiltonian_equivalence, p7_probe, pgeometry_suite, simple_q8_cp,
)

GOLDEN = 'i;(1) : 1\n-i;(2) : 1\nj;(1) : 1\n-j;(2) : 1\nk;(1) : 1\n-k;(2) : 1\n'
GOLDEN_SPECTRUM = '6 x1; 3 x4; 1 x6; 0 x4; -2 x3; -3 x6'


@pytest.fixture(scope='module')
def suites():
    """Suites feeding more than one criterion run once per module."""
    return {}


def cached(suites, name, fn):
    if name not in suites:
        suites[name] = fn()
    return suites[name]


def run_cli(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


def test_criterion_01_golden_example(tmp_path, suites):
    path = tmp_path / 'golden.ms'
    path.write_text(GOLDEN)
    t0 = time.perf_counter()
    check = run_cli('check', 'Q8xZ3', str(path))
    spec = run_cli('spectrum', 'Q8xZ3', str(path), '--machine')
    orc = run_cli('oracle', 'Q8xZ3', str(path))
    elapsed = time.perf_counter() - t0
    assert check == (0, 'INTEGRAL (conditions i,ii,iii hold); S NOT in C(G)\n')
    assert spec == (0, GOLDEN_SPECTRUM + '\n')
    assert orc == (0, f'INTEGRAL; spectrum: {GOLDEN_SPECTRUM}\n')
    res = cached(suites, 'golden', golden_example)
    assert res.passed, res.summary()
    assert elapsed < 1.0, f'{elapsed:.2f}s'


def test_criterion_02_abelian_three_way_equivalence(suites):
    res = cached(suites, 'abelian', lambda: abelian_equivalence(DEFAULT_SEED, per_group=200, max_order=24,
                                                          max_mult=3))
    print(res.summary())
    assert not res.failures, res.summary()
    assert res.stats['groups'] >= 30
    assert res.checked >= 200 * res.stats['groups']
    assert res.stats['integral'] > 0 and res.stats['non_integral'] > 0
    assert res.elapsed < 300, f'{res.elapsed:.1f}s'


def test_criterion_03_q8_conditions_match_oracle(suites):
    res = cached(suites, 'hamiltonian', lambda: hamiltonian_equivalence(DEFAULT_SEED, per_group=100))
    print(res.summary())
    assert not res.failures, res.summary()
    assert res.checked >= 500
    assert res.stats['integral'] > 0 and res.stats['non_integral'] > 0
    assert res.stats.get('integral_outside_cone', 0) > 0
    assert res.elapsed < 600, f'{res.elapsed:.1f}s'


def test_criterion_04_counterexample_family(suites):
    res = cached(suites, 'counterexamples', lambda: counterexample_family(3))
    print(res.summary())
    assert not res.failures, res.summary()
    # 3 multisets, each with 4 non-principal characters, plus 3 pairwise distinctness checks
    assert res.checked == 3 + 3 * 4 + 3
    assert res.elapsed < 300, f'{res.elapsed:.1f}s'


def test_criterion_05_simple_graphs_over_q8_c5(suites):
    res = cached(suites, 'simple', lambda: simple_q8_cp(DEFAULT_SEED, samples=500, p=5))
    print(res.summary())
    assert not res.failures, res.summary()
    assert res.checked >= 500
    assert res.stats['integral'] > 0 and res.stats['non_integral'] > 0


def test_criterion_06_commute_suite():
    res = commute_suite(DEFAULT_SEED, samples=50, factors=(3,))
    print(res.summary())
    assert not res.failures, res.summary()
    assert res.checked == 50 * res.stats['T_sets'] + 1


def test_criterion_07_cyclotomic_identities():
    res = cyclotomic_suite(60)
    assert not res.failures, res.summary()
    assert res.checked == 60 + 59


def test_criterion_08_spectral_bookkeeping(suites):
    names = {
        'golden': golden_example,
        'abelian': lambda: abelian_equivalence(DEFAULT_SEED, per_group=200, max_order=24, max_mult=3),
        'hamiltonian': lambda: hamiltonian_equivalence(DEFAULT_SEED, per_group=100),
        'counterexamples': lambda: counterexample_family(3),
        'simple': lambda: simple_q8_cp(DEFAULT_SEED, samples=500, p=5),
    }
    total = 0
    for name, fn in names.items():
        res = cached(suites, name, fn)
        assert res.spectra_checked > 0, name
        assert not res.bookkeeping_failures, f'{name}: {res.bookkeeping_failures[0]}'
        total += res.spectra_checked
    print(f'{total} spectra checked')


def test_criterion_09_elementary_abelian_analysis():
    res = pgeometry_suite(DEFAULT_SEED, cone_samples=50, free_samples=50, p=3, d=2)
    print(res.summary())
    assert not res.failures, res.summary()
    assert res.checked == 100


def test_criterion_10_p7_probe():
    t0 = time.perf_counter()
    assert solutions_three_squares(7, 50) == []
    assert p7_probe(50).passed
    code, out = run_cli('counterexample', '--p', '7', '--bound', '50')
    elapsed = time.perf_counter() - t0
    assert code == 0
    assert 'alpha <= 50: 0' in out
    assert 'no primitive solutions of x^2+y^2+z^2 = 7*alpha^2 exist' in out
    assert elapsed < 10, f'{elapsed:.1f}s'
