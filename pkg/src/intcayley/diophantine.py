"""Sums-of-squares enumerators and the integral-but-not-in-cone multisets they
produce over Q8 x C5 (and the three-square analogue over Q8 x C_p)."""

from __future__ import annotations

import math
from typing import Dict, List, NamedTuple, Tuple

from .algebra import in_cone
from .errors import DomainError
from .groups import GMultiset, GroupElement, GroupSpec
from .oracle import oracle_check
from .spectra import _is_prime, is_integral

P7_NOTE = (
    'note: no primitive solutions of x^2+y^2+z^2 = 7*alpha^2 exist: 7*alpha^2 always '
    'has the form 4^a(8b+7), which no sum of three squares takes. The claimed '
    'infinite family for p=7 is empty, so no Q8xZ7 multisets are built.')


class Solution3(NamedTuple):
    x: int
    y: int
    z: int


class Solution4(NamedTuple):
    x: int
    y: int
    z: int
    alpha: int


def solutions_two_squares(p: int, bound: int) -> List[Solution3]:
    """Primitive x^2 + y^2 = p z^2 with x, y >= 0 and 1 <= z <= bound.

    Sorted by (z, x, y).
    """
    if not _is_prime(p) or p % 4 != 1:
        raise DomainError(f'p must be a prime congruent to 1 mod 4, got {p}')
    out = []
    for z in range(1, bound + 1):
        target = p * z * z
        for x in range(math.isqrt(target) + 1):
            y2 = target - x * x
            y = math.isqrt(y2)
            if y * y == y2 and math.gcd(x, y, z) == 1:
                out.append(Solution3(x, y, z))
    return out


def solutions_three_squares(p: int, bound: int) -> List[Solution4]:
    """Primitive x^2 + y^2 + z^2 = p alpha^2 with 1 <= alpha <= bound.

    Ordered triples of non-negative integers, sorted by (alpha, x, y, z).
    """
    if p < 2:
        raise DomainError(f'p must be >= 2, got {p}')
    out = []
    for alpha in range(1, bound + 1):
        target = p * alpha * alpha
        for x in range(math.isqrt(target) + 1):
            rx = target - x * x
            for y in range(math.isqrt(rx) + 1):
                z2 = rx - y * y
                z = math.isqrt(z2)
                if z * z == z2 and math.gcd(x, y, z, alpha) == 1:
                    out.append(Solution4(x, y, z, alpha))
    return out


def _assemble(p: int, blocks: Dict[str, Dict[int, int]]) -> GMultiset:
    """S over Q8 x Z_p from B_q for q in {i, j, k}; B_-q is B_q inverted."""
    entries = {}
    for q, B in blocks.items():
        for t, m in B.items():
            if m:
                pos = GroupElement(q, (t % p,))
                entries[pos] = entries.get(pos, 0) + m
                neg = GroupElement('-' + q, ((-t) % p,))
                entries[neg] = entries.get(neg, 0) + m
    return GMultiset(entries)


def normalize_solution(sol) -> Tuple[int, int, int]:
    m, n, alpha = sol
    return (m, n, alpha) if n <= m else (n, m, alpha)


def build_counterexample_5(sol) -> GMultiset:
    """S over Q8 x Z5 from a primitive solution of m^2 + n^2 = 5 alpha^2.

    B_i = {2m a, (m+n) a^2, (m-n) a^3}, B_j = {(m+n) a, (m-n) a^4, 2m a^3},
    B_-q = B_q^-1, all other blocks empty. The pair is swapped so that n <= m.
    """
    m, n, alpha = normalize_solution(sol)
    if m * m + n * n != 5 * alpha * alpha or alpha <= 0:
        raise DomainError(f'{tuple(sol)} does not solve x^2 + y^2 = 5 z^2 nontrivially')
    if math.gcd(m, n, alpha) != 1:
        raise DomainError(f'{tuple(sol)} is not primitive')
    B_i = {1: 2 * m, 2: m + n, 3: m - n}
    B_j = {1: m + n, 4: m - n, 3: 2 * m}
    return _assemble(5, {'i': B_i, 'j': B_j})


def counterexample_seeds_5(count: int) -> List[Tuple[int, int, int]]:
    """First ``count`` primitive solutions for p=5 with n <= m, distinct after normalization."""
    seeds: List[Tuple[int, int, int]] = []
    bound = 1
    while len(seeds) < count:
        seeds = []
        for sol in solutions_two_squares(5, bound):
            s = normalize_solution(sol)
            if s not in seeds:
                seeds.append(s)
        bound *= 2
    return seeds[:count]


def build_three_square_multiset(p: int, sol) -> GMultiset:
    """S over Q8 x Z_p with B'_i = m a + n a^2 + l a^3, B'_j = l a + m a^2 + n a^3,
    B'_k = n a + l a^2 + m a^3.

    Each B_q is B'_q (doubled, as in the five-square case) padded by a symmetric
    multiset so that B_q + B_-q is constant on the non-identity atom. Needs p >= 7
    so that B'_q and its inverse have disjoint supports.
    """
    if not _is_prime(p) or p < 7:
        raise DomainError(f'p must be a prime >= 7, got {p}')
    m, n, l = sol[0], sol[1], sol[2]
    rows = {'i': (m, n, l), 'j': (l, m, n), 'k': (n, l, m)}
    blocks = {}
    for q, (c1, c2, c3) in rows.items():
        prime = {1: 2 * c1, 2: 2 * c2, 3: 2 * c3}
        # B'_q + B'_-q takes value 2c_t at a^t and a^-t, 0 elsewhere off the identity
        top = max(prime.values())
        # symmetric padding, added at both a^t and a^-t, lifts every off-identity value to top
        pad = {t: (top - prime.get(t, 0)) // 2 for t in range(1, (p - 1) // 2 + 1)}
        B = dict(prime)
        for t, c in pad.items():
            B[t] = B.get(t, 0) + c
            B[p - t] = B.get(p - t, 0) + c
        blocks[q] = B
    return _assemble(p, blocks)


def verify_counterexample(spec: GroupSpec, S: GMultiset) -> bool:
    """Integral by the exact test, not in the cone, and the oracle agrees."""
    exact = is_integral(spec, S)
    if not exact or in_cone(spec, S):
        return False
    return oracle_check(spec, S).is_integral


def is_scalar_multiple(S: GMultiset, T: GMultiset) -> bool:
    """True iff S = c T or T = c S for some positive integer c."""
    if set(S) != set(T) or not S:
        return set(S) == set(T)
    g = next(iter(S))
    for big, small in ((S, T), (T, S)):
        c, r = divmod(big[g], small[g])
        if r == 0 and all(big[x] == c * small[x] for x in S):
            return True
    return False
