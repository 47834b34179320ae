"""Character sums and exact spectra of Cayley multigraphs over A and Q8 x A.

Every value lives in Z[zeta_m] with m the exponent of the abelian part, so
integrality questions are answered by coefficient inspection, never by
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .algebra import NotInConeError, atom_partition, cone_decompose, in_cone
from .cyclotomic import CycInt, cyc_context
from .errors import InconsistencyError, PreconditionError, UnsupportedSpecError
from .groups import (
    Q8_NAMES, AbelianGroup, GMultiset, GroupElement, GroupSpec, convolve,
    is_inverse_closed, vector_add, vector_sub,
)

QUATERNION_UNITS = ('i', 'j', 'k')

# Values of the four linear characters of Q8 on 1, i, j, k (they do not see sign).
LINEAR_Q8 = {
    'one': {'1': 1, 'i': 1, 'j': 1, 'k': 1},
    'lambda_i': {'1': 1, 'i': 1, 'j': -1, 'k': -1},
    'lambda_j': {'1': 1, 'i': -1, 'j': 1, 'k': -1},
    'lambda_k': {'1': 1, 'i': -1, 'j': -1, 'k': 1},
}

# The degree-2 representation, entries as Gaussian integers (re, im).
RHO_EPS = {
    '1': (((1, 0), (0, 0)), ((0, 0), (1, 0))),
    'i': (((0, 1), (0, 0)), ((0, 0), (0, -1))),
    'j': (((0, 0), (1, 0)), ((-1, 0), (0, 0))),
    'k': (((0, 0), (0, 1)), ((0, 1), (0, 0))),
}


def _unsigned(q: str) -> Tuple[int, str]:
    return (-1, q[1:]) if q.startswith('-') else (1, q)


def rho_eps(q: str):
    sign, base = _unsigned(q)
    return tuple(tuple((sign * re, sign * im) for re, im in row) for row in RHO_EPS[base])


def linear_q8(name: str, q: str) -> int:
    return LINEAR_Q8[name][_unsigned(q)[1]]


# -- characters of abelian groups ----------------------------------------------

def characters(A: AbelianGroup):
    """Character indices in canonical order; index 0 is the principal character."""
    return list(A.elements())


def char_exponent(A: AbelianGroup, a: Sequence[int], x: Sequence[int]) -> int:
    m = A.exponent
    return sum((m // n) * u * v for n, u, v in zip(A.factors, a, x)) % m


def char_sum(A: AbelianGroup, a: Sequence[int], D) -> CycInt:
    """sum_g mu_D(g) chi_a(g), exactly. D maps elements (or residue tuples) to integers."""
    ctx = cyc_context(A.exponent)
    counts = [0] * ctx.m
    for g, mult in D.items():
        x = g.a if isinstance(g, GroupElement) else g
        counts[char_exponent(A, a, x)] += mult
    return ctx.from_exponent_counts(counts)


def format_character(a: Sequence[int]) -> str:
    return '(' + ','.join(map(str, a)) + ')'


# -- spectral values -------------------------------------------------------------

@dataclass(frozen=True)
class Rational:
    value: int

    def __str__(self):
        return str(self.value)

    def sort_key(self):
        return (float(self.value), 0.0, ())


@dataclass(frozen=True)
class Cyclotomic:
    value: CycInt

    def __str__(self):
        return f'[{self.value}]'

    def sort_key(self):
        return (self.value.to_complex().real, 0.0, self.value.coeffs)


@dataclass(frozen=True)
class Surd:
    """The pair base + sqrt(radicand), base - sqrt(radicand)."""

    base: CycInt
    radicand: CycInt

    def __str__(self):
        return f'[{self.base}] +- sqrt([{self.radicand}])'

    def sort_key(self):
        return (self.base.to_complex().real, abs(self.radicand.to_complex()) ** 0.5,
                self.base.coeffs + self.radicand.coeffs)


SpectralValue = Union[Rational, Cyclotomic, Surd]


def spectral_value(c: CycInt) -> SpectralValue:
    r = c.as_rational_integer()
    return Cyclotomic(c) if r is None else Rational(r)


def _surd_values(base: CycInt, radicand: CycInt) -> List[SpectralValue]:
    """Split base +- sqrt(radicand) into plain values when the root is an integer."""
    r = radicand.as_rational_integer()
    if r is not None and r >= 0:
        s = math.isqrt(r)
        if s * s == r:
            if s == 0:
                return [spectral_value(base)]
            return [spectral_value(base + s), spectral_value(base - s)]
    return [Surd(base, radicand)]


@dataclass
class Spectrum:
    """Eigenvalues with multiplicities. A Surd entry's multiplicity counts each branch."""

    entries: List[Tuple[SpectralValue, int]] = field(default_factory=list)

    def add(self, value: SpectralValue, mult: int) -> None:
        for t, (v, m) in enumerate(self.entries):
            if v == value:
                self.entries[t] = (v, m + mult)
                return
        self.entries.append((value, mult))

    def sorted(self) -> List[Tuple[SpectralValue, int]]:
        return sorted(self.entries, key=lambda e: e[0].sort_key(), reverse=True)

    @property
    def size(self) -> int:
        return sum(2 * m if isinstance(v, Surd) else m for v, m in self.entries)

    def is_integral(self) -> bool:
        return all(isinstance(v, Rational) for v, _ in self.entries)

    def as_dict(self) -> Dict[int, int]:
        """{eigenvalue: multiplicity}; only for integral spectra."""
        if not self.is_integral():
            raise ValueError('spectrum is not integral')
        return {v.value: m for v, m in self.entries}

    def format(self) -> str:
        return '; '.join(f'{v} x{m}' for v, m in self.sorted())

    def power_sums(self, m: int):
        """(sum of lambda*mult, sum of lambda^2*mult) in Z[zeta_m]."""
        ctx = cyc_context(m)
        s1, s2 = ctx.zero(), ctx.zero()
        for v, mult in self.entries:
            if isinstance(v, Rational):
                s1 += v.value * mult
                s2 += v.value * v.value * mult
            elif isinstance(v, Cyclotomic):
                s1 += v.value * mult
                s2 += v.value * v.value * mult
            else:
                s1 += v.base * (2 * mult)
                s2 += (v.base * v.base + v.radicand) * (2 * mult)
        return s1, s2


def check_bookkeeping(spec: GroupSpec, S: GMultiset, spectrum: Spectrum) -> bool:
    """Multiplicities sum to |G|, and the first two power sums match tr A and tr A^2."""
    n = spec.order
    s1, s2 = spectrum.power_sums(spec.abelian.exponent)
    return (spectrum.size == n
            and s1 == n * S[spec.identity]
            and s2 == n * sum(m * m for m in S.values()))


# -- abelian groups ------------------------------------------------------------------

def _require_inverse_closed(spec, S):
    if not is_inverse_closed(spec, S):
        raise PreconditionError('multiset is not inverse-closed (mu(s) != mu(s^-1) for some s)')


def abelian_spectrum(A: Union[AbelianGroup, GroupSpec], S: GMultiset) -> Spectrum:
    spec = A if isinstance(A, GroupSpec) else GroupSpec(A)
    if spec.quaternion:
        raise UnsupportedSpecError(f'{spec} is not abelian')
    _require_inverse_closed(spec, S)
    spec_out = Spectrum()
    for a in characters(spec.abelian):
        spec_out.add(spectral_value(char_sum(spec.abelian, a, S)), 1)
    return spec_out


def is_integral_abelian(A: Union[AbelianGroup, GroupSpec], S: GMultiset) -> bool:
    """Decide integrality twice: rational character sums, and cone membership.

    The two must agree; disagreement raises InconsistencyError.
    """
    spec = A if isinstance(A, GroupSpec) else GroupSpec(A)
    if spec.quaternion:
        raise UnsupportedSpecError(f'{spec} is not abelian')
    _require_inverse_closed(spec, S)
    by_characters = all(
        char_sum(spec.abelian, a, S).as_rational_integer() is not None
        for a in characters(spec.abelian))
    by_cone = in_cone(spec, S)
    if by_characters != by_cone:
        raise InconsistencyError(
            f'character-sum path says {by_characters}, cone path says {by_cone} for {S!r} over {spec}')
    return by_characters


# -- Q8 x A ----------------------------------------------------------------------------

def extract_Bq(spec: GroupSpec, S: GMultiset) -> Dict[str, GMultiset]:
    """B_q(a) = mu_S((q, a)), as multisets over the abelian part."""
    if not spec.quaternion:
        raise UnsupportedSpecError(f'{spec} has no Q8 factor')
    parts: Dict[str, Dict[GroupElement, int]] = {q: {} for q in Q8_NAMES}
    for g, m in S.items():
        g = spec.validate(g)
        parts[g.q][GroupElement('1', g.a)] = m
    return {q: GMultiset(d) for q, d in parts.items()}


def lambda_hat(A: AbelianGroup, a, Bq: GMultiset, Bmq: GMultiset) -> CycInt:
    return char_sum(A, a, Bq) - char_sum(A, a, Bmq)


@dataclass
class CharacterCheck:
    character: Tuple[int, ...]
    h: CycInt
    alpha: Optional[int]

    @property
    def ok(self) -> bool:
        return self.alpha is not None

    def reason(self) -> str:
        h_int = self.h.as_rational_integer()
        where = f'character a={format_character(self.character)}'
        if h_int is None:
            return f'condition (iii) fails at {where}: h = {self.h} is not rational'
        return f'condition (iii) fails at {where}: h = {h_int} is not a negative perfect square'


@dataclass
class HamiltonianReport:
    cond_i: bool
    cond_i_witnesses: Dict[str, NotInConeError]
    cond_ii: bool
    cond_ii_witnesses: Dict[str, NotInConeError]
    cond_iii: bool
    characters: List[CharacterCheck]

    @property
    def overall(self) -> bool:
        return self.cond_i and self.cond_ii and self.cond_iii

    def failures(self) -> List[str]:
        out = []
        for q, exc in self.cond_i_witnesses.items():
            out.append(f'condition (i) fails: B_{q} not in C(A) ({exc})')
        for q, exc in self.cond_ii_witnesses.items():
            out.append(f'condition (ii) fails: B_{q} + B_-{q} not in C(A) ({exc})')
        out.extend(c.reason() for c in self.characters if not c.ok)
        return out


def negative_square_root(h: CycInt) -> Optional[int]:
    """alpha >= 0 with h = -alpha^2, or None. h = 0 gives 0."""
    v = h.as_rational_integer()
    if v is None or v > 0:
        return None
    s = math.isqrt(-v)
    return s if s * s == -v else None


def hamiltonian_conditions(spec: GroupSpec, S: GMultiset) -> HamiltonianReport:
    B = extract_Bq(spec, S)
    _require_inverse_closed(spec, S)
    A = spec.abelian
    Aspec = spec.abelian_part()

    cond_i_w = {}
    for q in ('1', '-1'):
        try:
            cone_decompose(Aspec, B[q])
        except NotInConeError as exc:
            cond_i_w[q] = exc
    cond_ii_w = {}
    for q in QUATERNION_UNITS:
        try:
            cone_decompose(Aspec, B[q] + B['-' + q])
        except NotInConeError as exc:
            cond_ii_w[q] = exc

    checks = []
    for a in characters(A):
        h = cyc_context(A.exponent).zero()
        for q in QUATERNION_UNITS:
            lh = lambda_hat(A, a, B[q], B['-' + q])
            h = h + lh * lh
        checks.append(CharacterCheck(tuple(a), h, negative_square_root(h)))
    return HamiltonianReport(
        cond_i=not cond_i_w, cond_i_witnesses=cond_i_w,
        cond_ii=not cond_ii_w, cond_ii_witnesses=cond_ii_w,
        cond_iii=all(c.ok for c in checks), characters=checks)


def hamiltonian_spectrum(spec: GroupSpec, S: GMultiset) -> Spectrum:
    """Assemble the spectrum block by block over Irr(Q8) x Irr(A).

    Linear characters rho of Q8 give sum_q lambda(B_q) rho(q), multiplicity 1.
    The degree-2 block is base*I + N with base = lambda(B_1) - lambda(B_-1),
    N traceless with det N = h, so its eigenvalues are base +- sqrt(-h), each
    counted twice.
    """
    B = extract_Bq(spec, S)
    _require_inverse_closed(spec, S)
    A = spec.abelian
    out = Spectrum()
    for a in characters(A):
        lam = {q: char_sum(A, a, B[q]) for q in Q8_NAMES}
        plus = {q: lam[q] + lam['-' + q] for q in QUATERNION_UNITS}
        plus['1'] = lam['1'] + lam['-1']
        for rho in LINEAR_Q8.values():
            ev = plus['1'] + sum((rho[q] * plus[q] for q in QUATERNION_UNITS),
                                 cyc_context(A.exponent).zero())
            out.add(spectral_value(ev), 1)
        base = lam['1'] - lam['-1']
        h = cyc_context(A.exponent).zero()
        for q in QUATERNION_UNITS:
            d = lam[q] - lam['-' + q]
            h = h + d * d
        values = _surd_values(base, -h)
        if len(values) == 1 and not isinstance(values[0], Surd):
            out.add(values[0], 4)
        else:
            for v in values:
                out.add(v, 2)
    return out


def spectrum(spec: GroupSpec, S: GMultiset) -> Spectrum:
    if spec.quaternion:
        return hamiltonian_spectrum(spec, S)
    return abelian_spectrum(spec, S)


def is_integral(spec: GroupSpec, S: GMultiset) -> bool:
    if spec.quaternion:
        return hamiltonian_conditions(spec, S).overall
    return is_integral_abelian(spec, S)


# -- Q8 x C_p^d analysis ----------------------------------------------------------------

def _is_prime(n: int) -> bool:
    return n >= 2 and all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass
class ElementaryAbelianReport:
    p: int
    d: int
    T: Dict[GroupElement, int]
    b_prime: Dict[str, GMultiset]
    identity_coefficient: int
    off_identity_sum: int
    constant_on_atoms: bool
    atom_values: List[Optional[int]]       # b_r per non-trivial atom, None if not constant
    alpha_squared: Dict[Tuple[int, ...], int]  # per non-principal character
    nonconstant_witness: Optional[Tuple[GroupElement, GroupElement]] = None

    @property
    def b_prime_sizes(self) -> Dict[str, int]:
        return {q: m.total for q, m in self.b_prime.items()}

    @property
    def all_squares(self) -> bool:
        return self.constant_on_atoms and all(
            math.isqrt(v) ** 2 == v for v in self.alpha_squared.values())


def elementary_abelian_analysis(spec: GroupSpec, S: GMultiset) -> ElementaryAbelianReport:
    """Necessary conditions for integrality over Q8 x C_p^d with B_1 = B_-1 = empty.

    Builds T = sum_q (B'_q - B'_-q)^2 in the group algebra of A, checks that its
    off-identity coefficients are constant on atoms (values b_r) and computes
    alpha^2 = p * sum of b_r over atoms outside each character's kernel.
    """
    if not spec.quaternion:
        raise UnsupportedSpecError(f'{spec} has no Q8 factor')
    A = spec.abelian
    ps = set(A.factors)
    if len(ps) != 1 or not _is_prime(next(iter(ps))) or A.rank < 2:
        raise PreconditionError(f'abelian part {A} is not C_p^d with p prime and d >= 2')
    p, d = next(iter(ps)), A.rank
    B = extract_Bq(spec, S)
    _require_inverse_closed(spec, S)
    if B['1'] or B['-1']:
        raise PreconditionError('B_1 and B_-1 must be empty')

    Aspec = spec.abelian_part()
    b_prime = {}
    T: Dict[GroupElement, int] = {}
    for q in QUATERNION_UNITS:
        bq, bmq = B[q], B['-' + q]
        common = bq.intersection(bmq)
        b_prime[q] = bq.difference(common)
        b_prime['-' + q] = bmq.difference(common)
        diff = vector_sub(b_prime[q].as_vector(), b_prime['-' + q].as_vector())
        T = vector_add(T, convolve(Aspec, diff, diff))

    e = Aspec.identity
    atoms = atom_partition(Aspec)
    values: List[Optional[int]] = []
    witness = None
    for cls in atoms.classes:
        if cls == (e,):
            continue
        first = T.get(cls[0], 0)
        bad = next((g for g in cls if T.get(g, 0) != first), None)
        if bad is not None and witness is None:
            witness = (cls[0], bad)
        values.append(None if bad is not None else first)
    constant = witness is None

    alpha_sq = {}
    if constant:
        nontrivial = [cls for cls in atoms.classes if cls != (e,)]
        for a in characters(A)[1:]:
            outside = [r for r, cls in enumerate(nontrivial)
                       if char_exponent(A, a, cls[0].a) != 0]
            alpha_sq[tuple(a)] = p * sum(values[r] for r in outside)

    return ElementaryAbelianReport(
        p=p, d=d, T=T, b_prime=b_prime,
        identity_coefficient=T.get(e, 0),
        off_identity_sum=sum(c for g, c in T.items() if g != e),
        constant_on_atoms=constant, atom_values=values,
        alpha_squared=alpha_sq, nonconstant_witness=witness)
