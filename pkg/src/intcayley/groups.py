"""Finite groups Z_n1 x ... x Z_nk and Q8 x A, multisets over them, and the
integer group algebra.

Elements are ``GroupElement(q, a)`` pairs: ``q`` is a quaternion symbol
(always ``'1'`` for purely abelian specs) and ``a`` is a tuple of residues.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Dict, Iterable, Iterator, Mapping, NamedTuple, Tuple

from .errors import InvalidElementError, ParseError

Q8_NAMES = ('1', '-1', 'i', '-i', 'j', '-j', 'k', '-k')

# Q8_TABLE[x][y] = x*y, rows and columns in Q8_NAMES order.
# Expanded from i^2 = j^2 = k^2 = ijk = -1, (-1)^2 = 1.
Q8_TABLE = (
    ('1', '-1', 'i', '-i', 'j', '-j', 'k', '-k'),
    ('-1', '1', '-i', 'i', '-j', 'j', '-k', 'k'),
    ('i', '-i', '-1', '1', 'k', '-k', '-j', 'j'),
    ('-i', 'i', '1', '-1', '-k', 'k', 'j', '-j'),
    ('j', '-j', '-k', 'k', '-1', '1', 'i', '-i'),
    ('-j', 'j', 'k', '-k', '1', '-1', '-i', 'i'),
    ('k', '-k', 'j', '-j', '-i', 'i', '-1', '1'),
    ('-k', 'k', '-j', 'j', 'i', '-i', '1', '-1'),
)

_Q8_INDEX = {name: t for t, name in enumerate(Q8_NAMES)}


def q8_mul(x: str, y: str, table=Q8_TABLE) -> str:
    return table[_Q8_INDEX[x]][_Q8_INDEX[y]]


def q8_neg(q: str) -> str:
    return q[1:] if q.startswith('-') else '-' + q


def q8_inv(q: str) -> str:
    # 1 and -1 are involutions; every other unit has order 4
    return q if q in ('1', '-1') else q8_neg(q)


class GroupElement(NamedTuple):
    q: str
    a: Tuple[int, ...]


@dataclass(frozen=True)
class AbelianGroup:
    factors: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'factors', tuple(int(n) for n in self.factors))
        if any(n < 2 for n in self.factors):
            raise ParseError(f'cyclic factor orders must be >= 2, got {self.factors}')

    @property
    def order(self) -> int:
        return math.prod(self.factors)

    @property
    def exponent(self) -> int:
        return reduce(math.lcm, self.factors, 1)

    @property
    def rank(self) -> int:
        return len(self.factors)

    def elements(self) -> Iterator[Tuple[int, ...]]:
        def rec(k):
            if k == len(self.factors):
                yield ()
                return
            for c in range(self.factors[k]):
                for rest in rec(k + 1):
                    yield (c,) + rest
        return rec(0)

    def add(self, x, y):
        return tuple((u + v) % n for u, v, n in zip(x, y, self.factors))

    def neg(self, x):
        return tuple((-u) % n for u, n in zip(x, self.factors))

    def element_order(self, x) -> int:
        return reduce(math.lcm, (n // math.gcd(n, u) for u, n in zip(x, self.factors)), 1)

    def __str__(self):
        return 'x'.join(f'Z{n}' for n in self.factors) or 'Z1'


@dataclass(frozen=True)
class GroupSpec:
    """Either an abelian group A or the direct product Q8 x A."""

    abelian: AbelianGroup
    quaternion: bool = False

    @classmethod
    def parse(cls, text: str) -> 'GroupSpec':
        return parse_groupspec(text)

    @property
    def order(self) -> int:
        return (8 if self.quaternion else 1) * self.abelian.order

    @cached_property
    def elements(self) -> Tuple[GroupElement, ...]:
        qs = Q8_NAMES if self.quaternion else ('1',)
        abel = list(self.abelian.elements())
        return tuple(GroupElement(q, a) for q in qs for a in abel)

    @cached_property
    def index(self) -> Dict[GroupElement, int]:
        return {g: t for t, g in enumerate(self.elements)}

    @property
    def identity(self) -> GroupElement:
        return GroupElement('1', (0,) * self.abelian.rank)

    def abelian_part(self) -> 'GroupSpec':
        return GroupSpec(self.abelian)

    def validate(self, x) -> GroupElement:
        if not isinstance(x, tuple) or len(x) != 2:
            raise InvalidElementError(f'not a group element: {x!r}')
        q, a = x
        if q not in _Q8_INDEX or (q != '1' and not self.quaternion):
            raise InvalidElementError(f'quaternion component {q!r} invalid in {self}')
        if len(a) != self.abelian.rank:
            raise InvalidElementError(
                f'element {x!r} has {len(a)} residues, {self} needs {self.abelian.rank}')
        for u, n in zip(a, self.abelian.factors):
            if not 0 <= u < n:
                raise InvalidElementError(f'residue {u} out of range for Z{n}')
        return GroupElement(q, tuple(a))

    def __str__(self):
        if self.quaternion:
            return 'Q8x' + str(self.abelian) if self.abelian.factors else 'Q8'
        return str(self.abelian)


def abelian(*factors: int) -> GroupSpec:
    return GroupSpec(AbelianGroup(factors))


def q8_times(*factors: int) -> GroupSpec:
    return GroupSpec(AbelianGroup(factors), quaternion=True)


def elem(q_or_a, a=None) -> GroupElement:
    """Shorthand: ``elem(3)``, ``elem((1, 2))`` or ``elem('i', (1,))``."""
    if a is None:
        q, a = '1', q_or_a
    else:
        q = q_or_a
    if isinstance(a, int):
        a = (a,)
    return GroupElement(q, tuple(a))


# -- group law ---------------------------------------------------------------

def mul(spec: GroupSpec, x: GroupElement, y: GroupElement) -> GroupElement:
    x = spec.validate(x)
    y = spec.validate(y)
    return _mul(spec, x, y)


def _mul(spec, x, y):
    return GroupElement(q8_mul(x.q, y.q), spec.abelian.add(x.a, y.a))


def inv(spec: GroupSpec, x: GroupElement) -> GroupElement:
    x = spec.validate(x)
    return _inv(spec, x)


def _inv(spec, x):
    return GroupElement(q8_inv(x.q), spec.abelian.neg(x.a))


def element_order(spec: GroupSpec, x: GroupElement) -> int:
    x = spec.validate(x)
    q_order = {'1': 1, '-1': 2}.get(x.q, 4)
    return math.lcm(q_order, spec.abelian.element_order(x.a))


def power(spec: GroupSpec, x: GroupElement, t: int) -> GroupElement:
    x = spec.validate(x)
    t %= element_order(spec, x)
    out = spec.identity
    for _ in range(t):
        out = _mul(spec, out, x)
    return out


def conjugate(spec: GroupSpec, g: GroupElement, x: GroupElement) -> GroupElement:
    """g x g^-1"""
    return _mul(spec, _mul(spec, g, x), _inv(spec, g))


def is_hamiltonian(spec: GroupSpec) -> bool:
    if not spec.quaternion:
        return False
    return all(n % 4 != 0 for n in spec.abelian.factors)


# -- multisets and the group algebra ------------------------------------------

class GMultiset(Mapping):
    """Immutable multiset of group elements. Missing elements have multiplicity 0."""

    __slots__ = ('_data', '_hash')

    def __init__(self, entries: Mapping | Iterable = ()):
        data: Dict[GroupElement, int] = {}
        items = entries.items() if isinstance(entries, Mapping) else ((e, 1) for e in entries)
        for g, m in items:
            m = int(m)
            if m < 0:
                raise ValueError(f'negative multiplicity {m} for {g}')
            if m:
                g = GroupElement(*g)
                data[g] = data.get(g, 0) + m
        self._data = data
        self._hash = None

    def __getitem__(self, g):
        return self._data.get(g, 0)

    def __iter__(self):
        return iter(self._data)

    def __len__(self):
        return len(self._data)

    def __contains__(self, g):
        return g in self._data

    def __eq__(self, other):
        if isinstance(other, GMultiset):
            return self._data == other._data
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._data.items()))
        return self._hash

    def __repr__(self):
        body = ', '.join(f'{format_element(g)}:{m}' for g, m in sorted(self._data.items()))
        return f'GMultiset({{{body}}})'

    @property
    def total(self) -> int:
        return sum(self._data.values())

    def __add__(self, other: 'GMultiset') -> 'GMultiset':
        out = dict(self._data)
        for g, m in other.items():
            out[g] = out.get(g, 0) + m
        return GMultiset(out)

    def scaled(self, c: int) -> 'GMultiset':
        return GMultiset({g: c * m for g, m in self._data.items()})

    def intersection(self, other: 'GMultiset') -> 'GMultiset':
        """Pointwise minimum of multiplicities."""
        return GMultiset({g: min(m, other[g]) for g, m in self._data.items()})

    def difference(self, other: 'GMultiset') -> 'GMultiset':
        """Pointwise max(0, mu - nu)."""
        return GMultiset({g: max(0, m - other[g]) for g, m in self._data.items()})

    def inverse(self, spec: GroupSpec) -> 'GMultiset':
        return GMultiset({_inv(spec, g): m for g, m in self._data.items()})

    def as_vector(self) -> Dict[GroupElement, int]:
        return dict(self._data)


def check_supported(spec: GroupSpec, S: GMultiset) -> None:
    for g in S:
        spec.validate(g)


def is_inverse_closed(spec: GroupSpec, S: GMultiset) -> bool:
    return all(S[_inv(spec, spec.validate(s))] == m for s, m in S.items())


def convolve(spec: GroupSpec, f: Mapping, g: Mapping) -> Dict[GroupElement, int]:
    """(f*g)(z) = sum over xy = z of f(x) g(y), integer coefficients."""
    out: Dict[GroupElement, int] = {}
    for x, cx in f.items():
        if not cx:
            continue
        x = spec.validate(x)
        for y, cy in g.items():
            if not cy:
                continue
            z = _mul(spec, x, spec.validate(y))
            out[z] = out.get(z, 0) + cx * cy
    return {z: c for z, c in out.items() if c}


def vector_sub(f: Mapping, g: Mapping) -> Dict[GroupElement, int]:
    out = dict(f)
    for x, c in g.items():
        out[x] = out.get(x, 0) - c
    return {x: c for x, c in out.items() if c}


def vector_add(f: Mapping, g: Mapping) -> Dict[GroupElement, int]:
    out = dict(f)
    for x, c in g.items():
        out[x] = out.get(x, 0) + c
    return {x: c for x, c in out.items() if c}


# -- text formats --------------------------------------------------------------

_SPEC_RE = re.compile(r'^(Q8)?((?:x?Z\d+)*)$')


def parse_groupspec(text: str) -> GroupSpec:
    """``Z6``, ``Z2xZ2``, ``Q8xZ3``, ``Q8xZ5xZ5`` or bare ``Q8``."""
    s = text.strip()
    quaternion = False
    if s.startswith('Q8'):
        quaternion = True
        s = s[2:]
        if s and not s.startswith('x'):
            raise ParseError(f'bad group spec {text!r}: expected "x" after Q8')
        s = s[1:]
    elif not s:
        raise ParseError('empty group spec')
    elif s == 'Z1':
        return GroupSpec(AbelianGroup(()))
    factors = []
    if s:
        for tok in s.split('x'):
            m = re.fullmatch(r'Z(\d+)', tok)
            if not m:
                raise ParseError(f'bad group spec {text!r}: offending token {tok!r}')
            n = int(m.group(1))
            if n < 2:
                raise ParseError(f'bad group spec {text!r}: factor Z{n} must have order >= 2')
            factors.append(n)
    if not quaternion and not factors:
        raise ParseError(f'bad group spec {text!r}')
    return GroupSpec(AbelianGroup(tuple(factors)), quaternion)


def parse_element(spec: GroupSpec, text: str) -> GroupElement:
    """``q;(c1,...,ck)`` for Q8 x A, ``(c1,...,ck)`` or a bare residue for abelian A."""
    s = text.strip().replace(' ', '')
    q = '1'
    if ';' in s:
        q, s = s.split(';', 1)
    elif spec.quaternion and s in Q8_NAMES and spec.abelian.rank == 0:
        q, s = s, '()'
    if s.startswith('(') and s.endswith(')'):
        s = s[1:-1]
    try:
        a = tuple(int(c) for c in s.split(',')) if s else ()
    except ValueError:
        raise ParseError(f'bad element literal {text!r}') from None
    try:
        return spec.validate(GroupElement(q, a))
    except InvalidElementError as exc:
        raise ParseError(f'bad element literal {text!r}: {exc}') from None


def format_element(g: GroupElement, quaternion: bool | None = None) -> str:
    if quaternion is None:
        quaternion = g.q != '1'
    if quaternion:
        return g.q if not g.a else f'{g.q};({",".join(map(str, g.a))})'
    return str(g.a[0]) if len(g.a) == 1 else '(' + ','.join(map(str, g.a)) + ')'


def parse_multiset(spec: GroupSpec, text: str) -> GMultiset:
    entries: Dict[GroupElement, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if ':' not in line:
            raise ParseError(f'line {lineno}: expected "element : multiplicity", got {raw.strip()!r}')
        left, right = line.rsplit(':', 1)
        try:
            g = parse_element(spec, left)
        except ParseError as exc:
            raise ParseError(f'line {lineno}: {exc}') from None
        try:
            m = int(right)
        except ValueError:
            raise ParseError(f'line {lineno}: bad multiplicity {right.strip()!r}') from None
        if m < 0:
            raise ParseError(f'line {lineno}: negative multiplicity {m}')
        entries[g] = entries.get(g, 0) + m
    return GMultiset(entries)


def format_multiset(spec: GroupSpec, S: GMultiset) -> str:
    lines = [f'{format_element(g, spec.quaternion)} : {S[g]}'
             for g in spec.elements if S[g]]
    return '\n'.join(lines) + '\n'
