"""Exact normal ordering in the universal enveloping algebra, plus the
family of lowering operators chi built from the Omega sums and their
closed-form expansion.

Elements are stored as maps from monomials (tuples of generators in the
global order) to rational coefficients.  The global block order puts odd
lowering generators first, then even lowering, Cartan, even raising and
odd raising; inside a block generators sort by (span, start).  With this
order an element of U(G- + H) acting on a highest weight vector reduces
to dropping raising monomials and evaluating the Cartan factors.
"""
import re
from fractions import Fraction

from .rootdata import bracket, gen_parity, lab

_NF_CACHE = {}
# keep the rewrite cache from growing without bound on big expansions
_NF_CACHE_MAX = 4000000


def gen_key(g):
    if g[0] == 'h':
        return (2, g[1], 0)
    i, j = g[1], g[2]
    odd = i <= 0 <= j
    if g[0] == 'f':
        block = 0 if odd else 1
    else:
        block = 4 if odd else 3
    return (block, j - i, -i)


def _acc(out, terms, scale):
    if not scale:
        return
    for mono, c in terms.items():
        v = out.get(mono, 0) + scale * c
        if v:
            out[mono] = v
        else:
            out.pop(mono, None)


def normal_form(m, n, mono):
    """Rewrite a product of generators into the ordered PBW basis."""
    key = (m, n, mono)
    cached = _NF_CACHE.get(key)
    if cached is not None:
        return cached
    for p in range(len(mono) - 1):
        x, y = mono[p], mono[p + 1]
        if gen_key(x) > gen_key(y) or (x == y and gen_parity(x)):
            break
    else:
        res = {mono: Fraction(1)}
        _NF_CACHE[key] = res
        return res
    head, tail = mono[:p], mono[p + 2:]
    out = {}
    px, py = gen_parity(x), gen_parity(y)
    if x == y:
        # odd square: x x = [x,x]/2
        for g, c in bracket(m, n, x, x).items():
            _acc(out, normal_form(m, n, head + (g,) + tail), Fraction(c, 2))
    else:
        sign = Fraction(-1 if px and py else 1)
        _acc(out, normal_form(m, n, head + (y, x) + tail), sign)
        for g, c in bracket(m, n, x, y).items():
            _acc(out, normal_form(m, n, head + (g,) + tail), Fraction(c))
    if len(_NF_CACHE) > _NF_CACHE_MAX:
        _NF_CACHE.clear()
    _NF_CACHE[key] = out
    return out


class AlgebraElement:
    """Finite rational combination of ordered PBW monomials."""

    __slots__ = ('m', 'n', 'terms')

    def __init__(self, m, n, terms=None):
        self.m = m
        self.n = n
        self.terms = {} if terms is None else terms

    @classmethod
    def zero(cls, m, n):
        return cls(m, n)

    @classmethod
    def one(cls, m, n, coeff=1):
        return cls(m, n, {(): Fraction(coeff)})

    @classmethod
    def from_gens(cls, m, n, gens, coeff=1):
        terms = {}
        _acc(terms, normal_form(m, n, tuple(gens)), Fraction(coeff))
        return cls(m, n, terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return (self.m, self.n) == (other.m, other.n) \
                and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        _acc(out, other.terms, Fraction(1))
        return AlgebraElement(self.m, self.n, out)

    def __sub__(self, other):
        out = dict(self.terms)
        _acc(out, other.terms, Fraction(-1))
        return AlgebraElement(self.m, self.n, out)

    def __neg__(self):
        return AlgebraElement(self.m, self.n,
                              {k: -v for k, v in self.terms.items()})

    def scaled(self, c):
        c = Fraction(c)
        if not c:
            return AlgebraElement(self.m, self.n)
        return AlgebraElement(self.m, self.n,
                              {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, AlgebraElement):
            return self.scaled(other)
        out = {}
        for ma, ca in self.terms.items():
            # fold the left factors in one at a time so normal_form only
            # ever sees a single out-of-place generator
            cur = other.terms
            for g in reversed(ma):
                nxt = {}
                for mb, cb in cur.items():
                    _acc(nxt, normal_form(self.m, self.n, (g,) + mb), cb)
                cur = nxt
            _acc(out, cur, ca)
        return AlgebraElement(self.m, self.n, out)

    def __rmul__(self, other):
        return self.scaled(other)


def project_phi(a):
    """Drop every monomial with a raising factor (the projection onto
    U(G- + H) along the left ideal generated by G+)."""
    out = {mono: c for mono, c in a.terms.items()
           if not any(g[0] == 'e' for g in mono)}
    return AlgebraElement(a.m, a.n, out)


def eval_cartan(a, labels):
    """Evaluate the Cartan factors of an element of U(G- + H) at a weight;
    in normal form they sit rightmost, next to the vector acted on."""
    out = {}
    for mono, c in a.terms.items():
        val = c
        fpart = []
        for g in mono:
            if g[0] == 'h':
                val *= lab(labels, a.m, g[1])
            else:
                if g[0] == 'e':
                    raise ValueError('raising factor in Cartan evaluation')
                fpart.append(g)
        if val:
            fpart = tuple(fpart)
            v = out.get(fpart, 0) + val
            if v:
                out[fpart] = v
            else:
                del out[fpart]
    return AlgebraElement(a.m, a.n, out)


def omega(m, n, i, mp=None, np_=None):
    """Cartan-plus-constant part of the X operator, for the sub-shape
    (mp, np_) embedded next to the zero node."""
    mp = m if mp is None else mp
    np_ = n if np_ is None else np_
    if i < 0:
        const, ks = mp + 1 + i, range(-mp, i + 1)
    else:
        const, ks = np_ + 1 - i, range(i, np_ + 1)
    terms = {(): Fraction(const)}
    for k in ks:
        terms[(('h', k),)] = Fraction(1)
    return AlgebraElement(m, n, terms)


def omega_big(m, n, i, mp=None, np_=None):
    """The quadratic part: 1 minus the sum of f e over the hook at i."""
    mp = m if mp is None else mp
    np_ = n if np_ is None else np_
    terms = {(): Fraction(1)}
    if i < 0:
        for k in range(-mp, i + 1):
            terms[(('f', k, i), ('e', k, i))] = Fraction(-1)
    else:
        for k in range(i, np_ + 1):
            terms[(('f', i, k), ('e', i, k))] = Fraction(-1)
    return AlgebraElement(m, n, terms)


def x_el(m, n, i, mp=None, np_=None):
    return omega(m, n, i, mp, np_) + omega_big(m, n, i, mp, np_)


def chi_c(m, n, i, c, g, mp=None, np_=None):
    """chi_{i,c} g = c g + phi(Omega_i g)."""
    if any(x[0] == 'e' for mono in g.terms for x in mono):
        raise ValueError('chi argument has raising factors')
    return g.scaled(c) + project_phi(omega_big(m, n, i, mp, np_) * g)


def chi_plain(m, n, i, g, mp=None, np_=None):
    """chi_i g = phi(X_i g); Cartan factors stay symbolic."""
    if any(x[0] == 'e' for mono in g.terms for x in mono):
        raise ValueError('chi argument has raising factors')
    return project_phi(x_el(m, n, i, mp, np_) * g)


def chi_J_C(m, n, J, C, g, mp=None, np_=None):
    for j in J:
        g = chi_c(m, n, j, C[j], g, mp, np_)
    return g


def chi_J(m, n, J, g, mp=None, np_=None):
    for j in J:
        g = chi_plain(m, n, j, g, mp, np_)
    return g


def _subsets(seq):
    out = [()]
    for x in seq:
        out += [s + (x,) for s in out]
    return out


def expand_5_8(m, n, r, s, Pbar, Q, C):
    """Closed-form expansion of chi_{J,C} applied to the odd generator
    f_{-r,s}, as a double sum over subsets of the negative and positive
    parts of J."""
    Pm = sorted(-j for j in Pbar)     # magnitudes, increasing
    Qs = sorted(Q)
    out = AlgebraElement.zero(m, n)
    for K in _subsets(Pm):            # j_1 < ... < j_k (magnitudes)
        for L in _subsets(Qs):        # i_1 < ... < i_l
            coeff = Fraction((-1) ** len(L))
            for j in Pm:
                if j not in K:
                    coeff *= C[-j]
            for i in Qs:
                if i not in L:
                    coeff *= C[i]
            j0 = -r if not K else -(K[0] - 1)
            i0 = s if not L else L[0] - 1
            gens = [('f', j0, i0)]
            for t in range(len(K) - 1):
                gens.append(('f', -(K[t + 1] - 1), -K[t]))
            if K:
                gens.append(('f', -r, -K[-1]))
            for t in range(len(L) - 1):
                gens.append(('f', L[t], L[t + 1] - 1))
            if L:
                gens.append(('f', L[-1], s))
            out = out + AlgebraElement.from_gens(m, n, gens, coeff)
    return out


def c_of(labels, m, n, i):
    """Natural coefficient of a weight at a nonzero index."""
    if i == 0:
        raise ValueError('index must be nonzero')
    if i < 0:
        tot = sum(lab(labels, m, k) for k in range(-m, i + 1)) + m + i
    else:
        tot = sum(lab(labels, m, k) for k in range(i, n + 1)) + n - i
    return Fraction(tot)


_TOK = re.compile(r'([efh])\((-?\d+)(?:,(-?\d+))?\)(?:\^(\d+))?$')


def to_text(a):
    if not a.terms:
        return '0'
    parts = []
    for mono in sorted(a.terms, key=lambda mo: tuple(gen_key(g) for g in mo)):
        c = a.terms[mono]
        factors = []
        run, count = None, 0
        for g in mono + (None,):
            if g == run:
                count += 1
                continue
            if run is not None:
                if run[0] == 'h':
                    txt = 'h(%d)' % run[1]
                else:
                    txt = '%s(%d,%d)' % run
                factors.append(txt if count == 1 else txt + '^%d' % count)
            run, count = g, 1
        parts.append(str(c) if not factors
                     else '%s * %s' % (c, ' '.join(factors)))
    return ' + '.join(parts)


def from_text(m, n, text):
    text = text.strip()
    out = AlgebraElement.zero(m, n)
    if text == '0':
        return out
    for part in text.split(' + '):
        toks = part.split(' * ')
        coeff = Fraction(toks[0])
        gens = []
        if len(toks) > 1:
            for tok in toks[1].split():
                mt = _TOK.match(tok)
                if not mt:
                    raise ValueError('bad factor %r' % tok)
                kind, i, j, p = mt.groups()
                g = ('h', int(i)) if kind == 'h' else (kind, int(i), int(j))
                gens += [g] * (int(p) if p else 1)
        out = out + AlgebraElement.from_gens(m, n, gens, coeff)
    return out
