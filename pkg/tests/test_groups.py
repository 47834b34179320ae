import itertools

import pytest
from hypothesis import given, strategies as st

from intcayley.errors import InvalidElementError, ParseError
from intcayley.groups import (
    Q8_NAMES, GMultiset, abelian, convolve, elem, element_order, format_element, format_multiset,
    inv, is_hamiltonian, is_inverse_closed, mul, parse_element, parse_groupspec, parse_multiset,
    q8_mul, q8_times,
)


def test_q8_products():
    assert q8_mul('i', 'j') == 'k'
    assert q8_mul('j', 'i') == '-k'
    assert q8_mul('j', 'k') == 'i'
    assert q8_mul('k', 'i') == 'j'
    assert q8_mul('-i', '-i') == '-1'
    for q in Q8_NAMES:
        assert q8_mul('1', q) == q == q8_mul(q, '1')


def test_orders_and_inverses():
    G = q8_times(3)
    assert element_order(G, elem('i', 1)) == 12
    assert element_order(G, elem('-1', 0)) == 2
    assert inv(G, elem('i', 1)) == elem('-i', 2)
    A = abelian(4, 6)
    assert element_order(A, elem((1, 4))) == 12
    assert inv(A, elem((1, 4))) == elem((3, 2))


@pytest.mark.parametrize('spec', [abelian(2, 4), abelian(12), q8_times(), q8_times(3), q8_times(2, 3)])
def test_associativity_exhaustive(spec):
    els = spec.elements
    for x, y, z in itertools.product(els, repeat=3):
        assert mul(spec, mul(spec, x, y), z) == mul(spec, x, mul(spec, y, z))


def test_hamiltonian_flag():
    assert is_hamiltonian(q8_times(3, 5))
    assert is_hamiltonian(q8_times(2, 2))
    assert not is_hamiltonian(q8_times(4))
    assert not is_hamiltonian(abelian(6))


def test_parse_groupspec():
    assert parse_groupspec('Q8xZ3') == q8_times(3)
    assert parse_groupspec('Z2xZ2') == abelian(2, 2)
    assert parse_groupspec('Q8') == q8_times()
    assert str(parse_groupspec('Q8xZ5xZ5')) == 'Q8xZ5xZ5'
    for bad in ('', 'Z0', 'Q8Z3', 'Z3xQ8', 'S3'):
        with pytest.raises(ParseError):
            parse_groupspec(bad)


def test_parse_elements():
    G = q8_times(3)
    assert parse_element(G, '-i;(2)') == elem('-i', 2)
    assert parse_element(abelian(6), '5') == elem(5)
    assert parse_element(abelian(2, 3), '(1, 2)') == elem((1, 2))
    assert parse_element(q8_times(), 'k') == elem('k', ())
    with pytest.raises(ParseError):
        parse_element(G, 'i;(3)')
    with pytest.raises(ParseError):
        parse_element(G, 'x;(1)')
    with pytest.raises(InvalidElementError):
        G.validate(elem('i', (1, 1)))


def test_multiset_roundtrip():
    G = q8_times(3)
    text = '# comment\ni;(1) : 2\n-i;(2) : 2   # trailing\n\n1;(0) : 1\n'
    S = parse_multiset(G, text)
    assert S.total == 5
    assert S[elem('i', 1)] == 2 and S[elem('j', 0)] == 0
    assert parse_multiset(G, format_multiset(G, S)) == S
    assert format_element(elem('i', 1), True) == 'i;(1)'
    assert format_element(elem((1, 2))) == '(1,2)'


@pytest.mark.parametrize('text, lineno', [('3 : 1\n4 1\n', 2), ('9 : 1\n', 1), ('1 : -2\n', 1), ('1 : x\n', 1)])
def test_multiset_errors_name_the_line(text, lineno):
    with pytest.raises(ParseError, match=f'line {lineno}'):
        parse_multiset(abelian(5), text)


def test_gmultiset_operations():
    a, b = elem(1), elem(2)
    S, T = GMultiset({a: 2, b: 1}), GMultiset({a: 1})
    assert (S + T)[a] == 3
    assert S.intersection(T) == GMultiset({a: 1})
    assert S.difference(T) == GMultiset({a: 1, b: 1})
    assert S.scaled(3).total == 9
    assert GMultiset({a: 0}) == GMultiset()
    assert hash(S) == hash(GMultiset({b: 1, a: 2}))
    assert S.inverse(abelian(3)) == GMultiset({elem(2): 2, elem(1): 1})
    assert not is_inverse_closed(abelian(3), S)


def test_convolution_example():
    # (a - a^4)^2 = a^2 - 2 + a^3 in Z[C5]
    A = abelian(5)
    f = {elem(1): 1, elem(4): -1}
    assert convolve(A, f, f) == {elem(0): -2, elem(2): 1, elem(3): 1}


def test_convolution_noncommutative():
    G = q8_times()
    f, g = {elem('i', ()): 1}, {elem('j', ()): 1}
    assert convolve(G, f, g) == {elem('k', ()): 1}
    assert convolve(G, g, f) == {elem('-k', ()): 1}


@given(st.lists(st.integers(0, 11), min_size=1, max_size=6), st.lists(st.integers(0, 11), min_size=1, max_size=6))
def test_convolution_commutes_on_abelian(xs, ys):
    A = abelian(12)
    f = GMultiset([elem(x) for x in xs])
    g = GMultiset([elem(y) for y in ys])
    assert convolve(A, f, g) == convolve(A, g, f)
    assert sum(convolve(A, f, g).values()) == f.total * g.total
