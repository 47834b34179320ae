"""Brute-force ground truth: dense adjacency matrix, exact characteristic
polynomial by evaluation and interpolation, and integer root deflation.

Nothing here uses characters or the atom structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .errors import PreconditionError
from .groups import GMultiset, GroupSpec, _inv, _mul, check_supported, conjugate, is_inverse_closed

IntMatrix = List[List[int]]
IntPolynomial = Tuple[int, ...]  # coefficients, lowest degree first


def adjacency_matrix(spec: GroupSpec, S: GMultiset) -> IntMatrix:
    """Entry (g, h) is mu_S(g h^-1), rows and columns in canonical element order."""
    check_supported(spec, S)
    els = spec.elements
    inverses = [_inv(spec, h) for h in els]
    return [[S[_mul(spec, g, hi)] for hi in inverses] for g in els]


def bareiss_det(M: Sequence[Sequence[int]]) -> int:
    """Fraction-free Gaussian elimination; every division is exact."""
    a = [list(row) for row in M]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rowk = a[k]
        for i in range(k + 1, n):
            rowi = a[i]
            aik = rowi[k]
            for j in range(k + 1, n):
                rowi[j] = (rowi[j] * akk - aik * rowk[j]) // prev
            rowi[k] = 0
        prev = akk
    return sign * a[n - 1][n - 1]


def default_points(count: int) -> List[int]:
    """0, 1, -1, 2, -2, ..."""
    pts = [0]
    t = 1
    while len(pts) < count:
        pts.append(t)
        if len(pts) < count:
            pts.append(-t)
        t += 1
    return pts


def interpolate(xs: Sequence[int], ys: Sequence[int]) -> List[Fraction]:
    """Coefficients (lowest first) of the unique polynomial of degree < len(xs)."""
    n = len(xs)
    dd = [Fraction(y) for y in ys]
    for level in range(1, n):
        for t in range(n - 1, level - 1, -1):
            dd[t] = (dd[t] - dd[t - 1]) / (xs[t] - xs[t - level])
    # Newton form -> monomial basis, Horner from the top
    coeffs = [Fraction(0)] * n
    coeffs[0] = dd[n - 1]
    for t in range(n - 2, -1, -1):
        # coeffs <- coeffs * (x - xs[t]) + dd[t]
        shifted = [Fraction(0)] + coeffs[:-1]
        coeffs = [s - xs[t] * c for s, c in zip(shifted, coeffs)]
        coeffs[0] += dd[t]
    return coeffs


def char_poly(M: Sequence[Sequence[int]], points: Optional[Sequence[int]] = None) -> IntPolynomial:
    """det(xI - M) from n+1 exact determinant evaluations."""
    n = len(M)
    pts = list(points) if points is not None else default_points(n + 1)
    if len(pts) != n + 1 or len(set(pts)) != n + 1:
        raise ValueError(f'need {n + 1} distinct evaluation points')
    values = []
    for t in pts:
        shifted = [[(t if r == c else 0) - M[r][c] for c in range(n)] for r in range(n)]
        values.append(bareiss_det(shifted))
    coeffs = interpolate(pts, values)
    if any(c.denominator != 1 for c in coeffs) or coeffs[-1] != 1:
        raise ArithmeticError('interpolated characteristic polynomial is not monic over Z')
    return tuple(int(c) for c in coeffs)


def poly_eval(p: IntPolynomial, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def synthetic_divide(p: IntPolynomial, r: int) -> IntPolynomial:
    """p / (x - r), assuming r is a root."""
    out = []
    acc = 0
    for c in reversed(p):
        acc = acc * r + c
        out.append(acc)
    assert out[-1] == 0
    return tuple(reversed(out[:-1]))


def integer_spectrum(p: IntPolynomial, degree_bound: int) -> Optional[Dict[int, int]]:
    """Integer roots with multiplicity if every root is an integer in [-bound, bound], else None."""
    roots: Dict[int, int] = {}
    cur = tuple(p)
    for r in sorted(range(-degree_bound, degree_bound + 1), key=abs):
        while len(cur) > 1 and poly_eval(cur, r) == 0:
            cur = synthetic_divide(cur, r)
            roots[r] = roots.get(r, 0) + 1
        if len(cur) == 1:
            break
    if len(cur) > 1:
        return None
    return dict(sorted(roots.items(), reverse=True))


@dataclass
class OracleResult:
    is_integral: bool
    spectrum: Optional[Dict[int, int]]
    charpoly: IntPolynomial


def oracle_check(spec: GroupSpec, S: GMultiset) -> OracleResult:
    if not is_inverse_closed(spec, S):
        raise PreconditionError('multiset is not inverse-closed (mu(s) != mu(s^-1) for some s)')
    cp = char_poly(adjacency_matrix(spec, S))
    eig = integer_spectrum(cp, S.total)
    return OracleResult(eig is not None, eig, cp)


def is_conjugation_invariant(spec: GroupSpec, T: GMultiset) -> bool:
    return all(T[conjugate(spec, g, t)] == m for t, m in T.items() for g in spec.elements)


def _as_array(M: IntMatrix):
    bound = max((abs(x) for row in M for x in row), default=0)
    if bound and len(M) * bound * bound >= 2 ** 62:
        return np.array(M, dtype=object)
    return np.array(M, dtype=np.int64)


@lru_cache(maxsize=4096)
def _cayley_array(spec: GroupSpec, S: GMultiset):
    arr = _as_array(adjacency_matrix(spec, S))
    arr.flags.writeable = False
    return arr


@lru_cache(maxsize=4096)
def _commute_preconditions(spec: GroupSpec, T: GMultiset) -> None:
    if not is_inverse_closed(spec, T):
        raise PreconditionError('T is not inverse-closed')
    if not is_conjugation_invariant(spec, T):
        raise PreconditionError('T is not closed under conjugation (gT != Tg for some g)')


def commute_check(spec: GroupSpec, S: GMultiset, T: GMultiset) -> bool:
    """A_S A_T == A_T A_S entrywise. T must be invariant under conjugation."""
    if not is_inverse_closed(spec, S):
        raise PreconditionError('S is not inverse-closed')
    _commute_preconditions(spec, T)
    AS = _cayley_array(spec, S)
    AT = _cayley_array(spec, T)
    return bool((AS @ AT == AT @ AS).all())
