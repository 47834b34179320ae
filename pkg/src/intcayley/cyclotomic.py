"""Exact arithmetic in Z[zeta_m] using the power basis 1, z, ..., z^(phi(m)-1)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence, Tuple


def poly_mul(a: Sequence[int], b: Sequence[int]) -> Tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for s, x in enumerate(a):
        if x:
            for t, y in enumerate(b):
                out[s + t] += x * y
    return tuple(out)


def poly_divmod_monic(num: Sequence[int], den: Sequence[int]):
    """Long division by a monic integer polynomial (coefficients low to high)."""
    if den[-1] != 1:
        raise ValueError('divisor must be monic')
    rem = list(num)
    dn = len(den) - 1
    if len(rem) - 1 < dn:
        return (0,), tuple(rem)
    quot = [0] * (len(rem) - dn)
    for k in range(len(rem) - 1, dn - 1, -1):
        c = rem[k]
        if c:
            quot[k - dn] = c
            for t in range(dn + 1):
                rem[k - dn + t] -= c * den[t]
    return tuple(quot), tuple(rem[:dn] or [0])


def divisors(m: int):
    return [d for d in range(1, m + 1) if m % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_poly(m: int) -> Tuple[int, ...]:
    """Phi_m as integer coefficients, lowest degree first.

    x^m - 1 divided exactly by Phi_d for every proper divisor d of m.
    """
    if m < 1:
        raise ValueError(f'cyclotomic_poly needs m >= 1, got {m}')
    num: Tuple[int, ...] = (-1,) + (0,) * (m - 1) + (1,)
    for d in divisors(m)[:-1]:
        num, rem = poly_divmod_monic(num, cyclotomic_poly(d))
        assert not any(rem), f'inexact division by Phi_{d}'
    return num


def totient(m: int) -> int:
    return len(cyclotomic_poly(m)) - 1


@dataclass(frozen=True)
class CycContext:
    m: int

    @cached_property
    def cyclo_poly(self) -> Tuple[int, ...]:
        return cyclotomic_poly(self.m)

    @cached_property
    def phi_m(self) -> int:
        return len(self.cyclo_poly) - 1

    @cached_property
    def root_powers(self) -> Tuple[Tuple[int, ...], ...]:
        """Canonical coefficient vector of z^t for 0 <= t < m."""
        phi, poly = self.phi_m, self.cyclo_poly
        vecs = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(self.m):
            vecs.append(tuple(cur))
            # multiply by z, then fold z^phi = -(lower terms of Phi_m)
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(phi):
                    cur[t] -= top * poly[t]
        return tuple(vecs)

    def zero(self) -> 'CycInt':
        return CycInt(self, (0,) * self.phi_m)

    def const(self, c: int) -> 'CycInt':
        return CycInt(self, (c,) + (0,) * (self.phi_m - 1))

    def root(self, t: int) -> 'CycInt':
        return CycInt(self, self.root_powers[t % self.m])

    def from_exponent_counts(self, counts: Sequence[int]) -> 'CycInt':
        """sum_t counts[t] z^t for a length-m vector of integer counts."""
        out = [0] * self.phi_m
        for t, c in enumerate(counts):
            if c:
                for s, v in enumerate(self.root_powers[t]):
                    if v:
                        out[s] += c * v
        return CycInt(self, tuple(out))

    def reduce(self, coeffs: Sequence[int]) -> 'CycInt':
        """Canonical form of sum_t coeffs[t] z^t for any length."""
        counts = [0] * self.m
        for t, c in enumerate(coeffs):
            counts[t % self.m] += c
        return self.from_exponent_counts(counts)


@lru_cache(maxsize=None)
def cyc_context(m: int) -> CycContext:
    if m < 1:
        raise ValueError(f'modulus must be >= 1, got {m}')
    return CycContext(m)


def from_root_power(ctx: CycContext, t: int) -> 'CycInt':
    return ctx.root(t)


@dataclass(frozen=True)
class CycInt:
    ctx: CycContext
    coeffs: Tuple[int, ...]

    def _coerce(self, other) -> 'CycInt':
        if isinstance(other, int):
            return self.ctx.const(other)
        if isinstance(other, CycInt):
            if other.ctx.m != self.ctx.m:
                raise ValueError(f'context mismatch: zeta_{self.ctx.m} vs zeta_{other.ctx.m}')
            return other
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycInt(self.ctx, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.ctx, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ctx.reduce(poly_mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.ctx.const(other)
        if isinstance(other, CycInt):
            return self.ctx.m == other.ctx.m and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx.m, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def conjugate(self) -> 'CycInt':
        """Image under z -> z^-1 (complex conjugation)."""
        counts = [0] * self.ctx.m
        for t, c in enumerate(self.coeffs):
            counts[(-t) % self.ctx.m] += c
        return self.ctx.from_exponent_counts(counts)

    def is_self_conjugate(self) -> bool:
        return self.conjugate() == self

    def as_rational_integer(self):
        """The integer value if this is in Z, else None."""
        return as_rational_integer(self)

    def to_complex(self) -> complex:
        """Floating approximation, for display ordering only."""
        import cmath
        w = cmath.exp(2j * cmath.pi / self.ctx.m)
        return sum(c * w ** t for t, c in enumerate(self.coeffs))

    def __str__(self):
        c0 = self.as_rational_integer()
        if c0 is not None:
            return str(c0)
        terms = []
        for t, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = '' if t == 0 else ('z' if t == 1 else f'z^{t}')
            if t == 0:
                terms.append((c, str(abs(c))))
            elif abs(c) == 1:
                terms.append((c, mono))
            else:
                terms.append((c, f'{abs(c)}*{mono}'))
        out = ('-' if terms[0][0] < 0 else '') + terms[0][1]
        for c, body in terms[1:]:
            out += (' - ' if c < 0 else ' + ') + body
        return out

    def __repr__(self):
        return f'CycInt(m={self.ctx.m}, {list(self.coeffs)})'


def as_rational_integer(a: CycInt):
    if any(a.coeffs[1:]):
        return None
    return a.coeffs[0]
