"""Command-line front end.

Exit codes: 0 success (including a NOT INTEGRAL verdict), 1 bad input,
2 internal inconsistency between independent decision paths.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from typing import List, Optional

from .algebra import NotInConeError, atom_partition, cone_decompose, in_cone
from .diophantine import (
    P7_NOTE, build_counterexample_5, counterexample_seeds_5, solutions_three_squares,
    verify_counterexample,
)
from .errors import DomainError, InconsistencyError, UnsupportedSpecError
from .groups import GroupSpec, format_multiset, is_inverse_closed, parse_groupspec, parse_multiset, q8_times
from .oracle import oracle_check
from .spectra import (
    elementary_abelian_analysis, format_character, hamiltonian_conditions, is_integral_abelian,
    spectrum,
)
from .suites import DEFAULT_SEED, run_selftest


def _load(spec_text: str, path: str):
    spec = parse_groupspec(spec_text)
    try:
        with open(path, encoding='utf-8') as fh:
            text = fh.read()
    except OSError as exc:
        raise DomainError(f'cannot read multiset file {path!r}: {exc.strerror}') from None
    S = parse_multiset(spec, text)
    return spec, S


def _require_inverse_closed(spec: GroupSpec, S) -> None:
    if not is_inverse_closed(spec, S):
        raise DomainError('multiset is not inverse-closed: Cay(G,S) needs mu(s) = mu(s^-1)')


def cmd_atoms(args, out):
    spec = parse_groupspec(args.groupspec)
    print(atom_partition(spec).format(spec), file=out)


def cmd_spectrum(args, out):
    spec, S = _load(args.groupspec, args.multiset)
    _require_inverse_closed(spec, S)
    sp = spectrum(spec, S)
    if args.machine:
        print(sp.format(), file=out)
        return
    kind = 'integral' if sp.is_integral() else 'not integral'
    print(f'spectrum of Cay({spec}, S): {spec.order} eigenvalues, {kind}', file=out)
    m = spec.abelian.exponent
    if not sp.is_integral():
        print(f'  (z = zeta_{m})', file=out)
    for v, mult in sp.sorted():
        print(f'  {v}  x{mult}', file=out)


def _cone_line(spec, S) -> str:
    try:
        cone_decompose(spec, S)
    except NotInConeError as exc:
        return f'S NOT in C(G) ({exc})'
    return 'S in C(G)'


def cmd_check(args, out):
    spec, S = _load(args.groupspec, args.multiset)
    _require_inverse_closed(spec, S)
    if not spec.quaternion:
        integral = is_integral_abelian(spec, S)  # raises InconsistencyError on disagreement
        verdict = 'INTEGRAL' if integral else 'NOT INTEGRAL'
        print(f'{verdict}; {_cone_line(spec, S)}', file=out)
        return
    rep = hamiltonian_conditions(spec, S)
    sp = spectrum(spec, S)
    if sp.is_integral() != rep.overall:
        raise InconsistencyError(
            f'conditions (i)-(iii) say {rep.overall} but the assembled spectrum says {sp.is_integral()}')
    cone = in_cone(spec, S)
    if cone and not rep.overall:
        raise InconsistencyError('S is in C(G) but conditions (i)-(iii) fail')
    if rep.overall:
        cone_text = 'S in C(G)' if cone else 'S NOT in C(G)'
        print(f'INTEGRAL (conditions i,ii,iii hold); {cone_text}', file=out)
    else:
        print('NOT INTEGRAL; S NOT in C(G)', file=out)
        for reason in rep.failures():
            print(f'  {reason}', file=out)


def cmd_hamiltonian(args, out):
    spec, S = _load(args.groupspec, args.multiset)
    if not spec.quaternion:
        raise UnsupportedSpecError(f'{spec} has no Q8 factor; use "check" for abelian groups')
    _require_inverse_closed(spec, S)
    rep = hamiltonian_conditions(spec, S)

    def status(ok):
        return 'holds' if ok else 'FAILS'
    print(f'condition (i)   B_1, B_-1 in C(A): {status(rep.cond_i)}', file=out)
    for q, exc in rep.cond_i_witnesses.items():
        print(f'    B_{q}: {exc}', file=out)
    print(f'condition (ii)  B_q + B_-q in C(A): {status(rep.cond_ii)}', file=out)
    for q, exc in rep.cond_ii_witnesses.items():
        print(f'    q={q}: {exc}', file=out)
    print(f'condition (iii) h = -alpha^2 for every character: {status(rep.cond_iii)}', file=out)
    print(f'    (z = zeta_{spec.abelian.exponent})', file=out)
    for chk in rep.characters:
        tail = f'alpha = {chk.alpha}' if chk.ok else 'not a negative perfect square'
        print(f'    a={format_character(chk.character)}: h = {chk.h}, {tail}', file=out)
    print(f'overall: {"INTEGRAL" if rep.overall else "NOT INTEGRAL"}', file=out)
    for reason in rep.failures():
        print(f'  {reason}', file=out)


def cmd_oracle(args, out):
    spec, S = _load(args.groupspec, args.multiset)
    _require_inverse_closed(spec, S)
    res = oracle_check(spec, S)
    if res.is_integral:
        body = '; '.join(f'{v} x{m}' for v, m in res.spectrum.items())
        print(f'INTEGRAL; spectrum: {body}', file=out)
    else:
        print('NOT INTEGRAL; characteristic polynomial has a non-integer root', file=out)
    if args.charpoly:
        print('charpoly: ' + ' '.join(str(c) for c in reversed(res.charpoly)), file=out)


def cmd_counterexample(args, out):
    if args.p == 7:
        sols = solutions_three_squares(7, args.bound)
        print(f'primitive solutions of x^2+y^2+z^2 = 7*alpha^2 with alpha <= {args.bound}: '
              f'{len(sols)}', file=out)
        print(P7_NOTE, file=out)
        return
    if args.p != 5:
        raise DomainError(f'counterexample construction is defined for --p 5 (and the p=7 probe), got {args.p}')
    G = q8_times(5)
    os.makedirs(args.out, exist_ok=True)
    all_ok = True
    for m, n, alpha in counterexample_seeds_5(args.count):
        S = build_counterexample_5((m, n, alpha))
        path = os.path.join(args.out, f'cex5_{m}_{n}_{alpha}.ms')
        with open(path, 'w', encoding='utf-8') as fh:
            fh.write(f'# Q8xZ5 multiset from (m,n,alpha)=({m},{n},{alpha})\n')
            fh.write(format_multiset(G, S))
        rep = hamiltonian_conditions(G, S)
        alphas = sorted({c.alpha for c in rep.characters[1:]}, key=lambda a: (a is None, a))
        ok = verify_counterexample(G, S) and alphas == [10 * alpha]
        all_ok &= ok
        print(f'(m,n,alpha)=({m},{n},{alpha}): {path}, |S|={S.total}, '
              f'alpha_lambda={",".join(map(str, alphas))} (10*alpha={10 * alpha}), '
              f'{"VERIFIED integral and not in C(G)" if ok else "VERIFICATION FAILED"}', file=out)
    if not all_ok:
        raise InconsistencyError('a constructed multiset failed verification')


def cmd_pgeometry(args, out):
    spec, S = _load(args.groupspec, args.multiset)
    _require_inverse_closed(spec, S)
    rep = elementary_abelian_analysis(spec, S)
    A = spec.abelian_part()
    sizes = rep.b_prime_sizes
    print(f'group Q8 x C_{rep.p}^{rep.d}; |B\'_i|={sizes["i"]} |B\'_j|={sizes["j"]} '
          f'|B\'_k|={sizes["k"]}', file=out)
    print(f'T(e) = {rep.identity_coefficient}; sum of off-identity coefficients = '
          f'{rep.off_identity_sum}', file=out)
    atoms = [c for c in atom_partition(A).classes if c != (A.identity,)]
    if not rep.constant_on_atoms:
        x, y = rep.nonconstant_witness
        print(f'coefficients NOT constant on atoms: T({x.a}) = {rep.T.get(x, 0)}, '
              f'T({y.a}) = {rep.T.get(y, 0)}; S is not integral', file=out)
        return
    for r, (cls, b) in enumerate(zip(atoms, rep.atom_values), 1):
        print(f'  A_{r} = <{format_character(cls[0].a)}>: b = {b}', file=out)
    for a, v in rep.alpha_squared.items():
        mark = 'square' if math.isqrt(v) ** 2 == v else 'NOT a square'
        print(f'  character {format_character(a)}: alpha^2 = {v} ({mark})', file=out)
    print(f'all alpha^2 perfect squares: {"yes" if rep.all_squares else "no"}', file=out)


def cmd_selftest(args, out):
    results = run_selftest(seed=args.seed, full=args.full, only=args.only or None)
    for r in results:
        print(r.summary(), file=out)
    if not all(r.passed for r in results):
        raise _SelftestFailed()


class _SelftestFailed(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='intcayley', description='Integrality of Cayley multigraphs over A and Q8 x A.')
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('atoms', help='list the atoms (~-classes) of B(G)')
    p.add_argument('groupspec')
    p.set_defaults(func=cmd_atoms)

    for name, func, helptext in (
            ('spectrum', cmd_spectrum, 'exact spectrum from characters'),
            ('check', cmd_check, 'decide integrality and cone membership'),
            ('hamiltonian', cmd_hamiltonian, 'report conditions (i)-(iii) for Q8 x A'),
            ('oracle', cmd_oracle, 'brute-force integer characteristic polynomial'),
            ('pgeometry', cmd_pgeometry, 'Q8 x C_p^d necessary-condition analysis')):
        p = sub.add_parser(name, help=helptext)
        p.add_argument('groupspec')
        p.add_argument('multiset', help='multiset file: "element : multiplicity" per line')
        p.set_defaults(func=func)
        if name == 'spectrum':
            p.add_argument('--machine', action='store_true',
                           help='single line "value xmult; ..." sorted descending')
        if name == 'oracle':
            p.add_argument('--charpoly', action='store_true',
                           help='print characteristic polynomial coefficients, highest first')

    p = sub.add_parser('counterexample', help='integral multisets outside C(G) over Q8 x C5')
    p.add_argument('--p', type=int, default=5)
    p.add_argument('--count', type=int, default=3)
    p.add_argument('--out', default='.', help='directory for the emitted multiset files')
    p.add_argument('--bound', type=int, default=50, help='alpha bound for the p=7 search')
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser('selftest', help='run the verification suites')
    p.add_argument('--seed', type=int, default=DEFAULT_SEED)
    p.add_argument('--full', action='store_true', help='acceptance-sized runs (minutes)')
    p.add_argument('--only', nargs='*', help='suite names to run')
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv: Optional[List[str]] = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except InconsistencyError as exc:
        print(f'internal inconsistency: {exc}', file=sys.stderr)
        return 2
    except _SelftestFailed:
        return 1
    except (DomainError, ValueError) as exc:
        print(f'error: {exc}', file=sys.stderr)
        return 1
    return 0


if __name__ == '__main__':
    sys.exit(main())
