"""Command line front end: parse weights and codes, run the pipeline
stages, render matrices and chains, and emit machine-readable JSON.

Weights are written "[a,..,a;a0;a,..,a]" with the negative-side labels
first; the shape is inferred from the counts.  Overlined digits of the
source notation become leading minus signs.  Exit status is 0 on
success, 1 on input errors and 2 on verification failure.
"""
import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from .atypicality import atyp_matrix, atypical_roots, nqc, nqc_triangle
from .chains import all_chains, d_sigma, sigma_weight
from .codes import (code_from_text, code_to_text, decompose, enumerate_codes,
                    is_linked)
from .pbw import AlgebraElement, to_text
from .primvec import (DEFAULT_CAP, act, construct, group_by_odd,
                      shapovalov_zero, trace_to_json)
from .rootdata import index_set, is_dominant

SCHEMA = 'superkac/1'


def _num(tok, integral):
    v = Fraction(tok)
    if integral and v.denominator != 1:
        raise ValueError('side label %r is not an integer' % tok)
    return int(v) if v.denominator == 1 else v


def parse_weight(text):
    """Parse "[a,..;a0;a,..]" into (labels, m, n); commas or spaces
    separate labels, and the middle label may be rational."""
    text = text.strip()
    if not (text.startswith('[') and text.endswith(']')):
        raise ValueError('weight must be bracketed: %r' % text)
    parts = text[1:-1].split(';')
    if len(parts) != 3:
        raise ValueError('weight needs two semicolons: %r' % text)
    neg = [_num(t, True) for t in parts[0].replace(',', ' ').split()]
    mid = parts[1].replace(',', ' ').split()
    if len(mid) != 1:
        raise ValueError('exactly one middle label required: %r' % text)
    pos = [_num(t, True) for t in parts[2].replace(',', ' ').split()]
    labels = tuple(neg + [_num(mid[0], False)] + pos)
    return labels, len(neg), len(pos)


def weight_to_text(labels, m, n):
    def f(v):
        v = Fraction(v)
        return str(v.numerator) if v.denominator == 1 else str(v)
    return '[%s;%s;%s]' % (','.join(f(v) for v in labels[:m]),
                           f(labels[m]),
                           ','.join(f(v) for v in labels[m + 1:]))


def _fmt(v):
    v = Fraction(v)
    return str(v.numerator) if v.denominator == 1 else str(v)


def render_atyp(labels, m, n):
    """The atypicality matrix with the Dynkin labels in the margins: each
    side label sits in the gap between the two rows it separates, each
    positive label in the gap between two columns."""
    A = atyp_matrix(labels, m, n)
    cells = [[_fmt(v) for v in row] for row in A]
    w = max(len(s) for row in cells for s in row)
    lw = max([len(_fmt(labels[b])) for b in range(m)], default=0)
    inner = (w + 1) * (n + 1) - 1
    lines = []
    for b in range(m + 1):
        body = ' '.join(s.rjust(w) for s in cells[b])
        lines.append(' ' * lw + ' | ' + body + ' |')
        if b < m:
            lines.append(_fmt(labels[b]).rjust(lw) + ' |'
                         + ' ' * (inner + 2) + '|')
    if n:
        pos = [' '] * inner
        for c in range(1, n + 1):
            s = _fmt(labels[m + c])
            gap = c * (w + 1) - 1
            start = min(max(0, gap - (len(s) - 1) // 2), inner - len(s))
            for k, ch in enumerate(s):
                pos[start + k] = ch
        lines.append(' ' * lw + '   ' + ''.join(pos).rstrip())
    return '\n'.join(lines)


def _json_num(v):
    v = Fraction(v)
    return v.numerator if v.denominator == 1 else str(v)


def _emit(payload):
    payload = {'schema': SCHEMA, **payload}
    print(json.dumps(payload, indent=2, sort_keys=True))


def _setup(args):
    labels, m, n = parse_weight(args.weight)
    if args.shape is not None and tuple(args.shape) != (m, n):
        raise ValueError('--shape %s does not match the weight (%d, %d)'
                         % (args.shape, m, n))
    if not is_dominant(labels, m, n):
        raise ValueError('weight is not dominant: %s' % args.weight)
    return labels, m, n


def _gammas(labels, m, n):
    A = atyp_matrix(labels, m, n)
    return A, atypical_roots(A)


def cmd_atyp(args):
    labels, m, n = _setup(args)
    A, gam = _gammas(labels, m, n)
    if args.json:
        _emit({'command': 'atyp',
               'shape': [m, n],
               'weight': weight_to_text(labels, m, n),
               'matrix': [[_json_num(v) for v in row] for row in A],
               'atypical_roots': [list(g) for g in gam]})
    else:
        print(render_atyp(labels, m, n))
        print('atypical roots: '
              + (' '.join('(%d,%d)' % g for g in gam) if gam else 'none'))
    return 0


def cmd_nqc(args):
    labels, m, n = _setup(args)
    A, gam = _gammas(labels, m, n)
    rel = nqc(A, gam)
    if args.json:
        _emit({'command': 'nqc',
               'shape': [m, n],
               'weight': weight_to_text(labels, m, n),
               'atypical_roots': [list(g) for g in gam],
               'relations': [[s, t, rel[(s, t)]] for (s, t) in sorted(rel)]})
    else:
        print(nqc_triangle(rel, len(gam)))
    return 0


def cmd_codes(args):
    labels, m, n = _setup(args)
    A, gam = _gammas(labels, m, n)
    rel = nqc(A, gam)
    codes = sorted(enumerate_codes(rel, len(gam)))
    if args.json:
        _emit({'command': 'codes',
               'shape': [m, n],
               'weight': weight_to_text(labels, m, n),
               'codes': [{'code': code_to_text(c),
                          'linked': is_linked(c),
                          'components': [code_to_text(p) for p in decompose(c)]}
                         for c in codes]})
    else:
        for c in codes:
            comps = decompose(c)
            note = 'linked' if is_linked(c) else 'unlinked'
            body = ' + '.join(code_to_text(p) for p in comps) if comps else '-'
            print('%s | %s | %s' % (code_to_text(c), note, body))
    return 0


def cmd_chains(args):
    labels, m, n = _setup(args)
    chains = all_chains(labels, m, n)
    if args.json:
        _emit({'command': 'chains',
               'shape': [m, n],
               'weight': weight_to_text(labels, m, n),
               'chains': [{'s': ch.s, 'start': list(ch.start),
                           'west': [list(p) for p in ch.west],
                           'south': [list(p) for p in ch.south],
                           'special': ch.special} for ch in chains]})
    else:
        for ch in chains:
            west = ' -> '.join('(%d,%d)' % p for p in ch.west)
            south = ' -> '.join('(%d,%d)' % p for p in ch.south)
            tag = ' (special)' if ch.special else ''
            print('gamma %d at (%d,%d)%s: west %s; south %s'
                  % (ch.s, ch.start[0], ch.start[1], tag, west, south))
    return 0


def cmd_factors(args):
    labels, m, n = _setup(args)
    A, gam = _gammas(labels, m, n)
    rel = nqc(A, gam)
    rows = []
    for c in sorted(enumerate_codes(rel, len(gam))):
        if is_linked(c):
            continue
        rows.append((c, sigma_weight(labels, m, n, c)))
    if args.json:
        _emit({'command': 'factors',
               'shape': [m, n],
               'weight': weight_to_text(labels, m, n),
               'factors': [{'code': code_to_text(c),
                            'sigma': weight_to_text(sig, m, n)}
                           for c, sig in rows]})
    else:
        for c, sig in rows:
            print('%s -> %s' % (code_to_text(c), weight_to_text(sig, m, n)))
    return 0


def _build(args, labels, m, n):
    code = code_from_text(args.code)
    cap = args.max_verify_dim
    v, trace = construct(labels, m, n, code, cap=cap)
    return code, cap, v, trace


def cmd_primvec(args):
    labels, m, n = _setup(args)
    code, cap, v, trace = _build(args, labels, m, n)
    sig = v.weight()
    if args.json:
        _emit({'command': 'primvec',
               'shape': [m, n],
               'weight': weight_to_text(labels, m, n),
               'code': code_to_text(code),
               'sigma': weight_to_text(sig, m, n),
               'monomials': len(v.element.terms),
               'vector': to_text(v.element),
               'trace': json.loads(trace_to_json(trace))})
    else:
        print('sigma: %s' % weight_to_text(sig, m, n))
        print('monomials: %d' % len(v.element.terms))
        print('vector: %s' % to_text(v.element))
    return 0


def _threads():
    raw = os.environ.get('SUPERKAC_THREADS', '1')
    try:
        k = int(raw)
    except ValueError:
        raise ValueError('SUPERKAC_THREADS must be an integer: %r' % raw)
    if k < 1:
        raise ValueError('SUPERKAC_THREADS must be positive: %r' % raw)
    return k


def verify_generators(v, workers=1):
    """Per-generator annihilation check; returns [(i, ok)] for every
    simple raising generator."""
    labels, m, n = v.labels, v.m, v.n

    def check(i):
        e = AlgebraElement.from_gens(m, n, [('e', i, i)])
        w = act(labels, m, n, e * v.element)
        return all(shapovalov_zero(labels, m, n, Y)
                   for Y in group_by_odd(w).values())

    gens = list(index_set(m, n))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as ex:
            return list(zip(gens, ex.map(check, gens)))
    return [(i, check(i)) for i in gens]


def cmd_verify(args):
    labels, m, n = _setup(args)
    code, cap, v, trace = _build(args, labels, m, n)
    skipped = cap is not None and len(v.element.terms) > cap
    results = [] if skipped else verify_generators(v, _threads())
    ok = all(r for _, r in results)
    if args.json:
        _emit({'command': 'verify',
               'shape': [m, n],
               'weight': weight_to_text(labels, m, n),
               'code': code_to_text(code),
               'sigma': weight_to_text(v.weight(), m, n),
               'monomials': len(v.element.terms),
               'skipped': skipped,
               'generators': [{'i': i, 'ok': r} for i, r in results],
               'primitive': None if skipped else ok})
    else:
        if skipped:
            print('skipped: %d monomials exceed the cap %d'
                  % (len(v.element.terms), cap))
        for i, r in results:
            print('e(%d): %s' % (i, 'ok' if r else 'FAIL'))
        if not skipped:
            print('primitive: %s' % ('yes' if ok else 'NO'))
    return 0 if skipped or ok else 2


def main(argv=None):
    top = argparse.ArgumentParser(prog='superkac', description=__doc__)
    sub = top.add_subparsers(dest='command', required=True)
    handlers = {'atyp': cmd_atyp, 'nqc': cmd_nqc, 'codes': cmd_codes,
                'chains': cmd_chains, 'factors': cmd_factors,
                'primvec': cmd_primvec, 'verify': cmd_verify}
    for name, fn in handlers.items():
        p = sub.add_parser(name)
        p.add_argument('--weight', required=True,
                       help='weight as "[a,..;a0;a,..]"')
        p.add_argument('--shape', nargs=2, type=int, metavar=('M', 'N'),
                       help='expected shape; checked against the weight')
        p.add_argument('--json', action='store_true')
        if name in ('primvec', 'verify'):
            p.add_argument('--code', required=True,
                           help='code columns, entries joined by "/"')
            p.add_argument('--max-verify-dim', type=int, default=DEFAULT_CAP,
                           help='monomial cap before verification is skipped')
        p.set_defaults(fn=fn)
    args = top.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, AssertionError) as exc:
        print('error: %s' % exc, file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
