"""Atoms of the boolean algebra generated by normal subgroups, and membership
of sets and multisets in that algebra and its integral cone."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Tuple

from .groups import GMultiset, GroupElement, GroupSpec, _mul, conjugate, format_element


def conjugacy_class(spec: GroupSpec, x: GroupElement) -> FrozenSet[GroupElement]:
    x = spec.validate(x)
    if not spec.quaternion:
        return frozenset([x])
    return frozenset(conjugate(spec, g, x) for g in spec.elements)


def subgroup_closure(spec: GroupSpec, gens: Iterable[GroupElement]) -> FrozenSet[GroupElement]:
    """Smallest subgroup containing ``gens`` by breadth-first product closure.

    Finite groups only need closure under multiplication.
    """
    gens = [spec.validate(g) for g in gens]
    seen = {spec.identity}
    frontier = [spec.identity]
    while frontier:
        nxt = []
        for h in frontier:
            for g in gens:
                y = _mul(spec, h, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(seen)


def normal_closure(spec: GroupSpec, x: GroupElement) -> FrozenSet[GroupElement]:
    return subgroup_closure(spec, conjugacy_class(spec, x))


@dataclass(frozen=True)
class AtomPartition:
    classes: Tuple[Tuple[GroupElement, ...], ...]
    index: Dict[GroupElement, int]

    def __len__(self):
        return len(self.classes)

    def class_of(self, g: GroupElement) -> Tuple[GroupElement, ...]:
        return self.classes[self.index[g]]

    def format(self, spec: GroupSpec) -> str:
        return '\n'.join(
            '{' + ','.join(format_element(g, spec.quaternion) for g in cls) + '}'
            for cls in self.classes)


@lru_cache(maxsize=None)
def atom_partition(spec: GroupSpec) -> AtomPartition:
    """Classes of x ~ y iff N(x) = N(y).

    Classes are listed by increasing |N(x)|, ties broken by first element in
    the canonical enumeration; elements within a class in canonical order.
    """
    by_closure: Dict[FrozenSet[GroupElement], list] = {}
    for g in spec.elements:
        by_closure.setdefault(normal_closure(spec, g), []).append(g)
    pos = spec.index
    ordered = sorted(by_closure.items(), key=lambda kv: (len(kv[0]), pos[kv[1][0]]))
    classes = tuple(tuple(members) for _, members in ordered)
    index = {g: r for r, cls in enumerate(classes) for g in cls}
    return AtomPartition(classes, index)


def in_boolean_algebra(spec: GroupSpec, X: Iterable[GroupElement]) -> bool:
    X = {spec.validate(g) for g in X}
    atoms = atom_partition(spec)
    return all(all(h in X for h in atoms.class_of(g)) for g in X)


@dataclass(frozen=True)
class ConeCertificate:
    """Coefficient per atom id. Atoms with coefficient 0 are omitted."""

    coefficients: Dict[int, int]

    def reconstruct(self, spec: GroupSpec) -> GMultiset:
        atoms = atom_partition(spec)
        return GMultiset({g: c for r, c in self.coefficients.items() for g in atoms.classes[r]})


class NotInConeError(Exception):
    """Multiplicity is not constant on some atom; carries a witness pair."""

    def __init__(self, atom_id, x, y, mult_x, mult_y, quaternion=False):
        self.atom_id = atom_id
        self.witness = (x, y)
        self.multiplicities = (mult_x, mult_y)
        fx, fy = format_element(x, quaternion), format_element(y, quaternion)
        super().__init__(
            f'multiplicity not constant on atom {atom_id}: {fx} has {mult_x}, {fy} has {mult_y}')


def cone_decompose(spec: GroupSpec, S: GMultiset) -> ConeCertificate:
    """Write S as a non-negative integer combination of atoms.

    Raises NotInConeError with the first offending atom otherwise.
    """
    for g in S:
        spec.validate(g)
    atoms = atom_partition(spec)
    coeffs = {}
    for r, cls in enumerate(atoms.classes):
        first = cls[0]
        c = S[first]
        for h in cls[1:]:
            if S[h] != c:
                raise NotInConeError(r, first, h, c, S[h], spec.quaternion)
        if c:
            coeffs[r] = c
    return ConeCertificate(coeffs)


def in_cone(spec: GroupSpec, S: GMultiset) -> bool:
    try:
        cone_decompose(spec, S)
    except NotInConeError:
        return False
    return True
