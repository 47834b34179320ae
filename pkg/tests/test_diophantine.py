import pytest

from intcayley.errors import DomainError
from intcayley.diophantine import (
    build_counterexample_5, build_three_square_multiset, counterexample_seeds_5,
    is_scalar_multiple, normalize_solution, solutions_three_squares, solutions_two_squares,
)
from intcayley.groups import GMultiset, elem, is_inverse_closed, q8_times
from intcayley.spectra import hamiltonian_conditions


def test_two_squares_p5():
    sols = [tuple(s) for s in solutions_two_squares(5, 13)]
    assert sols == [(1, 2, 1), (2, 1, 1), (2, 11, 5), (11, 2, 5), (2, 29, 13),
                    (19, 22, 13), (22, 19, 13), (29, 2, 13)]
    for x, y, z in sols:
        assert x * x + y * y == 5 * z * z


def test_two_squares_requires_split_prime():
    with pytest.raises(DomainError):
        solutions_two_squares(7, 5)
    with pytest.raises(DomainError):
        solutions_two_squares(9, 5)


def test_seeds_are_normalized_and_distinct():
    assert counterexample_seeds_5(4) == [(2, 1, 1), (11, 2, 5), (29, 2, 13), (22, 19, 13)]
    assert normalize_solution((1, 2, 1)) == (2, 1, 1)


def test_three_squares():
    assert solutions_three_squares(7, 50) == []
    sols = solutions_three_squares(6, 1)
    assert {tuple(s[:3]) for s in sols} == {(1, 1, 2), (1, 2, 1), (2, 1, 1)}
    for x, y, z, a in solutions_three_squares(11, 5):
        assert x * x + y * y + z * z == 11 * a * a


def test_counterexample_blocks():
    G = q8_times(5)
    S = build_counterexample_5((2, 1, 1))
    assert is_inverse_closed(G, S)
    assert S.total == 32
    assert S[elem('i', 1)] == 4 and S[elem('-i', 4)] == 4
    assert S[elem('j', 3)] == 4 and S[elem('-j', 2)] == 4
    rep = hamiltonian_conditions(G, S)
    assert rep.overall
    assert [c.alpha for c in rep.characters] == [0, 10, 10, 10, 10]


def test_counterexample_rejects_non_solutions():
    with pytest.raises(DomainError):
        build_counterexample_5((1, 1, 1))
    with pytest.raises(DomainError):
        build_counterexample_5((4, 2, 2))


def test_three_square_builder_meets_i_and_ii_only():
    G = q8_times(11)
    S = build_three_square_multiset(11, (1, 1, 3))
    rep = hamiltonian_conditions(G, S)
    assert rep.cond_i and rep.cond_ii
    assert not rep.cond_iii
    with pytest.raises(DomainError):
        build_three_square_multiset(5, (1, 2, 0))


def test_scalar_multiple():
    a, b = elem(1), elem(2)
    S = GMultiset({a: 2, b: 4})
    assert is_scalar_multiple(S, GMultiset({a: 1, b: 2}))
    assert not is_scalar_multiple(S, GMultiset({a: 1, b: 3}))
    assert not is_scalar_multiple(S, GMultiset({a: 1}))
