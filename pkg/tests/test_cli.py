import io
import re

import pytest

from intcayley import cli
from intcayley.groups import Q8_NAMES, Q8_TABLE
from intcayley.suites import q8_relations

GOLDEN = """# the six-element set over Q8 x C3
i;(1) : 1
-i;(2) : 1
j;(1) : 1
-j;(2) : 1
k;(1) : 1
-k;(2) : 1
"""


def run(*argv):
    out = io.StringIO()
    code = cli.main(list(argv), out)
    return code, out.getvalue()


@pytest.fixture
def golden(tmp_path):
    p = tmp_path / 'golden.ms'
    p.write_text(GOLDEN)
    return str(p)


def write(tmp_path, name, text):
    p = tmp_path / name
    p.write_text(text)
    return str(p)


def test_atoms():
    assert run('atoms', 'Z6') == (0, '{0}\n{3}\n{2,4}\n{1,5}\n')
    assert run('atoms', 'Q8') == (0, '{1}\n{-1}\n{i,-i}\n{j,-j}\n{k,-k}\n')


def test_golden_check(golden):
    assert run('check', 'Q8xZ3', golden) == (0, 'INTEGRAL (conditions i,ii,iii hold); S NOT in C(G)\n')


def test_golden_spectrum_and_oracle(golden):
    want = '6 x1; 3 x4; 1 x6; 0 x4; -2 x3; -3 x6'
    assert run('spectrum', 'Q8xZ3', golden, '--machine') == (0, want + '\n')
    assert run('oracle', 'Q8xZ3', golden) == (0, f'INTEGRAL; spectrum: {want}\n')


def test_human_spectrum_lists_surds(tmp_path):
    f = write(tmp_path, 'pair.ms', 'i;(1) : 1\n-i;(2) : 1\n')
    code, out = run('spectrum', 'Q8xZ3', f)
    assert code == 0
    assert 'not integral' in out and 'sqrt([3])' in out


def test_abelian_check(tmp_path):
    f = write(tmp_path, 'cyc.ms', '1 : 1\n5 : 1\n')
    assert run('check', 'Z6', f) == (0, 'INTEGRAL; S in C(G)\n')
    f = write(tmp_path, 'k5.ms', '1 : 1\n2 : 1\n3 : 1\n4 : 1\n')
    assert run('check', 'Z5', f) == (0, 'INTEGRAL; S in C(G)\n')
    f = write(tmp_path, 'z8.ms', '1 : 1\n7 : 1\n')
    code, out = run('check', 'Z8', f)
    assert code == 0
    assert out.startswith('NOT INTEGRAL; S NOT in C(G) (multiplicity not constant on atom')


def test_q8_failure_reasons(tmp_path):
    f = write(tmp_path, 'pair.ms', 'i;(1) : 1\n-i;(2) : 1\n')
    code, out = run('check', 'Q8xZ3', f)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == 'NOT INTEGRAL; S NOT in C(G)'
    assert lines[1].strip().startswith('condition (iii) fails at character a=(1): h = -3')


def test_hamiltonian_report(golden):
    code, out = run('hamiltonian', 'Q8xZ3', golden)
    assert code == 0
    assert 'a=(1): h = -9, alpha = 3' in out
    assert out.rstrip().endswith('overall: INTEGRAL')


def test_oracle_charpoly(tmp_path):
    f = write(tmp_path, 'k3.ms', '1 : 1\n2 : 1\n')
    assert run('oracle', 'Z3', f, '--charpoly') == (0, 'INTEGRAL; spectrum: 2 x1; -1 x2\ncharpoly: 1 0 -3 -2\n')
    f = write(tmp_path, 'c5.ms', '1 : 1\n4 : 1\n')
    code, out = run('oracle', 'Z5', f)
    assert out == 'NOT INTEGRAL; characteristic polynomial has a non-integer root\n'


@pytest.mark.parametrize('argv', [
    ('atoms', 'Z0'), ('atoms', 'S3'), ('check', 'Z5', '/nonexistent/file.ms'),
])
def test_bad_input_exit_1(argv, capsys):
    assert run(*argv)[0] == 1
    assert capsys.readouterr().err.startswith('error:')


def test_bad_multiset_exit_1(tmp_path, capsys):
    assert run('check', 'Z5', write(tmp_path, 'a.ms', '1 : 1\n'))[0] == 1
    assert 'inverse-closed' in capsys.readouterr().err
    assert run('check', 'Z5', write(tmp_path, 'b.ms', '1 : 1\n7 : 1\n'))[0] == 1
    assert 'line 2' in capsys.readouterr().err
    assert run('hamiltonian', 'Z5', write(tmp_path, 'c.ms', ''))[0] == 1


def test_inconsistency_exit_2(tmp_path, monkeypatch, capsys):
    f = write(tmp_path, 'pair.ms', 'i;(1) : 1\n-i;(2) : 1\n')
    monkeypatch.setattr(cli, 'in_cone', lambda spec, S: True)
    assert run('check', 'Q8xZ3', f)[0] == 2
    assert 'internal inconsistency' in capsys.readouterr().err


def test_counterexample_files(tmp_path):
    code, out = run('counterexample', '--p', '5', '--count', '2', '--out', str(tmp_path))
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 2
    assert 'alpha_lambda=10 (10*alpha=10)' in lines[0]
    assert 'alpha_lambda=50 (10*alpha=50)' in lines[1]
    assert all('VERIFIED integral and not in C(G)' in line for line in lines)
    emitted = tmp_path / 'cex5_2_1_1.ms'
    code, out = run('check', 'Q8xZ5', str(emitted))
    assert out == 'INTEGRAL (conditions i,ii,iii hold); S NOT in C(G)\n'


def test_counterexample_p7_note():
    code, out = run('counterexample', '--p', '7', '--bound', '10')
    assert code == 0
    assert ': 0\n' in out
    assert '4^a(8b+7)' in out


def test_pgeometry(tmp_path):
    text = ''.join(f'{q};({x},{y}) : 1\n' for q in ('i', '-i') for x, y in ((1, 0), (2, 0)))
    code, out = run('pgeometry', 'Q8xZ3xZ3', write(tmp_path, 'pg.ms', text))
    assert code == 0
    assert 'all alpha^2 perfect squares: yes' in out


def strip_timing(text):
    return re.sub(r' \[\d+\.\ds\]', '', text)


def test_selftest_seed_determinism():
    a = run('selftest', '--seed', '5', '--only', 'abelian_equivalence', 'pgeometry')
    b = run('selftest', '--seed', '5', '--only', 'abelian_equivalence', 'pgeometry')
    assert a[0] == 0
    assert strip_timing(a[1]) == strip_timing(b[1])
    c = run('selftest', '--seed', '6', '--only', 'abelian_equivalence')
    assert strip_timing(c[1]) != strip_timing(a[1]).splitlines()[0] + '\n'


def test_selftest_unknown_suite():
    assert run('selftest', '--only', 'nope')[0] == 1


def test_corrupted_q8_table_is_caught():
    bad = [list(row) for row in Q8_TABLE]
    r, c = Q8_NAMES.index('i'), Q8_NAMES.index('j')
    bad[r][c] = '-k'
    assert q8_relations().passed
    assert not q8_relations(bad).passed
