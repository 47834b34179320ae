import pytest

from intcayley.algebra import (
    NotInConeError, atom_partition, cone_decompose, conjugacy_class, in_boolean_algebra, in_cone,
    normal_closure,
)
from intcayley.groups import GMultiset, abelian, elem, q8_times


def fmt(spec):
    return atom_partition(spec).format(spec).splitlines()


def test_atoms_z6():
    assert fmt(abelian(6)) == ['{0}', '{3}', '{2,4}', '{1,5}']


def test_atoms_q8():
    assert fmt(q8_times()) == ['{1}', '{-1}', '{i,-i}', '{j,-j}', '{k,-k}']


def test_atoms_z2xz2_are_singletons():
    assert len(atom_partition(abelian(2, 2))) == 4


def test_atoms_partition_the_group():
    for spec in (abelian(12), abelian(2, 6), q8_times(3), q8_times(2, 2)):
        seen = [g for cls in atom_partition(spec).classes for g in cls]
        assert sorted(seen) == sorted(spec.elements)


def test_atoms_cyclic_count_divisors():
    # one atom per divisor: the generators of each cyclic subgroup
    assert len(atom_partition(abelian(12))) == 6
    assert len(atom_partition(abelian(7))) == 2


def test_normal_closure_and_conjugacy():
    G = q8_times(3)
    assert conjugacy_class(G, elem('i', 1)) == {elem('i', 1), elem('-i', 1)}
    assert len(normal_closure(G, elem('i', 0))) == 4
    assert len(normal_closure(G, elem('i', 1))) == 12
    assert normal_closure(G, elem('1', 0)) == {G.identity}


def test_cone_certificate_roundtrip():
    A = abelian(6)
    S = GMultiset({elem(1): 2, elem(5): 2, elem(3): 1})
    cert = cone_decompose(A, S)
    assert cert.reconstruct(A) == S
    assert cert.coefficients == {1: 1, 3: 2}


def test_cone_witness_on_golden_set():
    G = q8_times(3)
    S = GMultiset([elem('i', 1), elem('-i', 2), elem('j', 1), elem('-j', 2), elem('k', 1), elem('-k', 2)])
    with pytest.raises(NotInConeError) as info:
        cone_decompose(G, S)
    x, y = info.value.witness
    assert info.value.multiplicities == (S[x], S[y])
    assert S[x] != S[y]
    assert 'i;(1) has 1' in str(info.value) and 'i;(2) has 0' in str(info.value)
    assert not in_cone(G, S)


def test_boolean_algebra_membership():
    A = abelian(6)
    assert in_boolean_algebra(A, [elem(1), elem(5)])
    assert not in_boolean_algebra(A, [elem(1)])
    assert in_boolean_algebra(A, [])
