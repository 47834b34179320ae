"""Seeded generators of inverse-closed multisets for the randomized suites."""

from __future__ import annotations

import random
from typing import Dict, List

from .algebra import atom_partition
from .groups import GMultiset, GroupElement, GroupSpec, _inv, q8_neg


def inverse_pairs(spec: GroupSpec) -> List[List[GroupElement]]:
    """Elements grouped as {x, x^-1}, in canonical order of the first member."""
    seen = set()
    out = []
    for g in spec.elements:
        if g in seen:
            continue
        gi = _inv(spec, g)
        pair = [g] if gi == g else [g, gi]
        seen.update(pair)
        out.append(pair)
    return out


def random_inverse_closed(spec: GroupSpec, rng: random.Random, max_mult: int = 3,
                          density: float = 0.5) -> GMultiset:
    entries = {}
    for pair in inverse_pairs(spec):
        if rng.random() < density:
            m = rng.randint(1, max_mult)
            for g in pair:
                entries[g] = m
    return GMultiset(entries)


def random_cone_member(spec: GroupSpec, rng: random.Random, max_mult: int = 3,
                       density: float = 0.5) -> GMultiset:
    entries = {}
    for cls in atom_partition(spec).classes:
        if rng.random() < density:
            m = rng.randint(1, max_mult)
            for g in cls:
                entries[g] = m
    return GMultiset(entries)


def perturbed_cone_member(spec: GroupSpec, rng: random.Random, max_mult: int = 3) -> GMultiset:
    """A cone member with one inverse pair reassigned; usually just outside the cone."""
    base = dict(random_cone_member(spec, rng, max_mult))
    pair = rng.choice(inverse_pairs(spec))
    m = rng.randint(0, max_mult)
    for g in pair:
        base[g] = m
    return GMultiset(base)


def random_abelian_sample(spec: GroupSpec, rng: random.Random, max_mult: int = 3) -> GMultiset:
    kind = rng.randrange(3)
    if kind == 0:
        return random_inverse_closed(spec, rng, max_mult)
    if kind == 1:
        return random_cone_member(spec, rng, max_mult)
    return perturbed_cone_member(spec, rng, max_mult)


def _symmetric_block(Aspec: GroupSpec, rng: random.Random, max_mult: int) -> Dict[GroupElement, int]:
    """B over A with B + B^-1 constant on every atom; B itself is arbitrary otherwise."""
    B: Dict[GroupElement, int] = {}
    for cls in atom_partition(Aspec).classes:
        if len(cls) == 1 and _inv(Aspec, cls[0]) == cls[0]:
            B[cls[0]] = rng.randint(0, max_mult) if rng.random() < 0.5 else 0
            continue
        c = rng.randint(0, max_mult) if rng.random() < 0.6 else 0
        done = set()
        for x in cls:
            if x in done:
                continue
            xi = _inv(Aspec, x)
            lo = max(0, c - max_mult)
            v = rng.randint(lo, min(c, max_mult))
            B[x] = v
            B[xi] = c - v
            done.update((x, xi))
    return B


def random_hamiltonian_structured(spec: GroupSpec, rng: random.Random,
                                  max_mult: int = 3) -> GMultiset:
    """Inverse-closed S over Q8 x A satisfying conditions (i) and (ii) by construction."""
    Aspec = spec.abelian_part()
    entries = {}
    for q in ('1', '-1'):
        if rng.random() < 0.5:
            for g, m in random_cone_member(Aspec, rng, max_mult).items():
                entries[GroupElement(q, g.a)] = m
    for q in ('i', 'j', 'k'):
        for x, m in _symmetric_block(Aspec, rng, max_mult).items():
            if m:
                entries[GroupElement(q, x.a)] = m
                entries[GroupElement(q8_neg(q), _inv(Aspec, x).a)] = m
    return GMultiset(entries)


def random_q8_cone_without_pm1(spec: GroupSpec, rng: random.Random,
                               max_mult: int = 3) -> GMultiset:
    """Cone member over Q8 x A using only atoms off {+-1} x A."""
    entries = {}
    for cls in atom_partition(spec).classes:
        if cls[0].q in ('1', '-1'):
            continue
        if rng.random() < 0.5:
            m = rng.randint(1, max_mult)
            for g in cls:
                entries[g] = m
    return GMultiset(entries)


def random_q8_without_pm1(spec: GroupSpec, rng: random.Random, max_mult: int = 1) -> GMultiset:
    """Inverse-closed S over Q8 x A with B_1 = B_-1 = empty."""
    S = random_inverse_closed(spec, rng, max_mult)
    return GMultiset({g: m for g, m in S.items() if g.q not in ('1', '-1')})


def random_hamiltonian_sample(spec: GroupSpec, rng: random.Random, max_mult: int = 3) -> GMultiset:
    kind = rng.randrange(3)
    if kind == 0:
        return random_inverse_closed(spec, rng, max_mult)
    if kind == 1:
        return random_cone_member(spec, rng, max_mult)
    return random_hamiltonian_structured(spec, rng, max_mult)

