"""Construction of primitive vectors of Kac modules for unlinked codes,
and their verification by an annihilation oracle.

A module vector is an element of U(G-) applied to the highest weight
vector; Cartan factors produced along the way are evaluated at the
highest weight (in normal form they sit directly next to it).  The
construction peels the topmost row (or, mirrored, the rightmost column)
of the chain region attached to the code, one odd corner root at a time,
each step applying a product of chi operators over a fixed index window,
then recurses on the sub-superalgebra with that row (column) removed.
"""
import json
from fractions import Fraction

from .chains import d_sigma, sigma_weight
from .codes import code_to_text, decompose, is_indecomposable, is_linked
from .pbw import (AlgebraElement, chi_J_C, eval_cartan, gen_key, project_phi,
                  to_text)
from .rootdata import (beta_pair, index_set, lab, root_weight, subtract_roots,
                       vec_add, weight_vector)

DEFAULT_CAP = 2000


class ModuleVector:
    """element * v_highest inside the Kac module of the given weight."""

    def __init__(self, labels, m, n, element):
        self.labels = tuple(labels)
        self.m = m
        self.n = n
        self.element = element

    def is_zero(self):
        return not self.element

    def weight(self):
        """Dynkin labels of the (single) weight of the vector."""
        if self.is_zero():
            raise ValueError('zero vector has no weight')
        monos = iter(self.element.terms)
        pairs = [(g[1], g[2]) for g in next(monos)]
        labs = subtract_roots(self.labels, pairs, self.m, self.n)
        for mono in monos:
            p2 = [(g[1], g[2]) for g in mono]
            if subtract_roots(self.labels, p2, self.m, self.n) != labs:
                raise ValueError('vector mixes weights')
        return labs

    def to_text(self):
        return to_text(self.element)


def act(labels, m, n, a):
    """Reduce an element of U(G) applied to the highest weight vector:
    drop raising monomials, evaluate Cartan factors at the weight."""
    return eval_cartan(project_phi(a), labels)


def _zero_vec(m, n):
    return (tuple([Fraction(0)] * (m + 1)), tuple([Fraction(0)] * (n + 1)))


def _mono_weight(m, n, mono):
    vec = _zero_vec(m, n)
    for g in mono:
        vec = vec_add(vec, root_weight(g[1], g[2], m, n))
    return vec


def _split_mono(mono):
    k = 0
    while k < len(mono) and gen_key(mono[k])[0] == 0:
        k += 1
    return mono[:k], mono[k:]


def group_by_odd(a):
    """Split an element of U(G-) as a sum of (odd monomial) * (even part)."""
    groups = {}
    for mono, c in a.terms.items():
        b, y = _split_mono(mono)
        groups.setdefault(b, {})[y] = c
    return {b: AlgebraElement(a.m, a.n, ys) for b, ys in groups.items()}


# ---------------------------------------------------------------------------
# Shapovalov-form oracle on the simple highest weight module of the even part

def _even_coords(m, n, vec):
    """Coordinates of a weight over the even simple roots, or None if the
    weight is not a nonnegative integral combination of them."""
    eps, delta = vec
    cs = []
    tot = Fraction(0)
    for t in range(m):
        tot += eps[t]
        cs.append(tot)
    if tot + eps[m] != 0:
        return None
    tot = Fraction(0)
    for t in range(n):
        tot += delta[t]
        cs.append(tot)
    if tot + delta[n] != 0:
        return None
    for c in cs:
        if c.denominator != 1 or c < 0:
            return None
    return cs


def even_lowering_pairs(m, n):
    pairs = [(i, j) for i in range(-m, 0) for j in range(i, 0)]
    pairs += [(i, j) for i in range(1, n + 1) for j in range(i, n + 1)]
    pairs.sort(key=lambda p: gen_key(('f',) + p))
    return pairs


def monomials_of_weight(m, n, vec):
    """All ordered monomials in the even lowering generators whose root
    sum equals the given weight."""
    gens = even_lowering_pairs(m, n)
    roots = [root_weight(i, j, m, n) for (i, j) in gens]
    out = []

    def rec(idx, remaining, acc):
        cs = _even_coords(m, n, remaining)
        if cs is None:
            return
        if not any(cs):
            out.append(tuple(('f',) + p for p in acc))
            return
        if idx == len(gens):
            return
        rec(idx + 1, remaining, acc)
        cur = vec_add(remaining, roots[idx], scale=-1)
        k = 1
        while _even_coords(m, n, cur) is not None:
            rec(idx + 1, cur, acc + [gens[idx]] * k)
            cur = vec_add(cur, roots[idx], scale=-1)
            k += 1

    rec(0, vec, [])
    return out


def shapovalov_zero(labels, m, n, Y):
    """True iff Y (a single-weight element of the even lowering algebra)
    annihilates the highest weight vector of the simple module of the
    even part with the given highest weight."""
    if not Y.terms:
        return True
    monos = list(Y.terms)
    wt = _mono_weight(m, n, monos[0])
    for mo in monos[1:]:
        if _mono_weight(m, n, mo) != wt:
            raise ValueError('mixed-weight element')
    if wt == _zero_vec(m, n):
        return Y.terms.get((), Fraction(0)) == 0
    for a in monomials_of_weight(m, n, wt):
        tau = AlgebraElement.from_gens(
            m, n, [('e', g[1], g[2]) for g in reversed(a)])
        val = eval_cartan(project_phi(tau * Y), labels).terms.get((), 0)
        if val:
            return False
    return True


def is_primitive(vec, cap=DEFAULT_CAP):
    """True iff every simple raising generator annihilates the vector
    inside the Kac module; None when the vector exceeds the monomial cap
    and verification is skipped."""
    if vec.is_zero():
        raise ValueError('zero vector')
    m, n, labels = vec.m, vec.n, vec.labels
    if cap is not None and len(vec.element.terms) > cap:
        return None
    for i in index_set(m, n):
        e = AlgebraElement.from_gens(m, n, [('e', i, i)])
        w = act(labels, m, n, e * vec.element)
        for Y in group_by_odd(w).values():
            if not shapovalov_zero(labels, m, n, Y):
                return False
    return True


# ---------------------------------------------------------------------------
# expansion bookkeeping: leading and prime terms

def expansion(vec):
    """Terms of the vector grouped by odd monomial, largest first (depth,
    then first differing root)."""
    groups = group_by_odd(vec.element)
    order = sorted(groups, key=lambda b: (len(b),
                                          tuple(gen_key(g) for g in b)),
                   reverse=True)
    return [(b, groups[b]) for b in order]


def leading_term(vec):
    if vec.is_zero():
        raise ValueError('zero vector')
    return expansion(vec)[0]


def prime_terms(vec):
    out = []
    for b, y in expansion(vec):
        if set(y.terms) == {()}:
            out.append((b, y.terms[()]))
    return out


# ---------------------------------------------------------------------------
# the construction

def top_right(cells):
    if not cells:
        raise ValueError('empty region')
    b0 = min(b for b, _ in cells)
    c0 = max(c for _, c in cells)
    return b0, c0


def xy_counts(cells):
    b0, c0 = top_right(cells)
    x = sum(1 for (b, c) in cells if b == b0)
    y = sum(1 for (b, c) in cells if c == c0)
    return x, y


def eta_roots(cells, m):
    """Root pairs along the topmost row (right to left) and the rightmost
    column (top to bottom) of the region."""
    b0, c0 = top_right(cells)
    x, y = xy_counts(cells)
    etas = [beta_pair(b0, c, m) for c in range(c0, c0 - x, -1)]
    eta_ps = [beta_pair(b, c0, m) for b in range(b0, b0 + y)]
    return etas, eta_ps


def c_window(labels, m, mp, np_, i):
    """The natural coefficient of the weight at index i, for the
    sub-superalgebra spanning indices -mp .. np_."""
    if i < 0:
        tot = sum(lab(labels, m, k) for k in range(-mp, i + 1)) + mp + i
    else:
        tot = sum(lab(labels, m, k) for k in range(i, np_ + 1)) + np_ - i
    return Fraction(tot)


def peel(labels, m, n, x, y, steps, axis):
    """Apply the corner operators d_1 .. d_steps along the topmost row
    (axis 'row') or the rightmost column (axis 'col').  Returns the
    accumulated lowering element, the weight labels after the peel, and
    the per-step coefficient data."""
    J = list(range(-(m - y + 1), 0)) + list(range(1, n - x + 2))
    element = AlgebraElement.one(m, n)
    lam = tuple(labels)
    info = []
    for k in range(1, steps + 1):
        if axis == 'row':
            mp, np_ = m, n - k + 1
        else:
            mp, np_ = m - k + 1, n
        C = {j: c_window(lam, m, mp, np_, j) for j in J}
        corner = AlgebraElement.from_gens(m, n, [('f', -mp, np_)])
        d = chi_J_C(m, n, J, C, corner, mp=mp, np_=np_)
        element = act(labels, m, n, d * element)
        info.append({'step': k, 'corner': (-mp, np_),
                     'C': {j: C[j] for j in J}})
        lam = subtract_roots(lam, [(-mp, np_)], m, n)
    return element, lam, {'J': J, 'steps': info}


def _embed(a, m, n):
    return AlgebraElement(m, n, dict(a.terms))


def _contiguous(values):
    vs = sorted(values)
    return vs == list(range(vs[0], vs[0] + len(vs)))


def build_from_region(labels, m, n, cells, trace, cap=DEFAULT_CAP):
    """Lowering element g with g * v_highest primitive for the current
    shape, for a chain region whose top-right position rules the peel."""
    if not cells:
        return AlgebraElement.one(m, n)
    b0, c0 = top_right(cells)
    if (b0, c0) not in cells:
        raise ValueError('region has no top-right corner cell')
    if (b0, c0) != (1, n + 1):
        m_s, n_s = m + 1 - b0, c0 - 1
        sub_labels = labels[m - m_s: m + n_s + 1]
        sub_cells = {(b - b0 + 1, c) for (b, c) in cells}
        trace.append({'restrict': [m_s, n_s]})
        sub = build_from_region(sub_labels, m_s, n_s, sub_cells, trace, cap)
        return _embed(sub, m, n)
    x, y = xy_counts(cells)
    assert _contiguous([c for (b, c) in cells if b == 1])
    assert _contiguous([b for (b, c) in cells if c == n + 1])

    def candidate(axis):
        steps = x if axis == 'row' else y
        el, lam, info = peel(labels, m, n, x, y, steps, axis)
        if axis == 'row':
            sub_labels = lam[1:]
            sub_cells = {(b - 1, c) for (b, c) in cells if b > 1}
            sub_shape = (m - 1, n)
        else:
            sub_labels = lam[:-1]
            sub_cells = {(b, c) for (b, c) in cells if c < n + 1}
            sub_shape = (m, n - 1)
        subtrace = []
        deep = build_from_region(sub_labels, *sub_shape, sub_cells,
                                 subtrace, cap)
        total = act(labels, m, n, _embed(deep, m, n) * el)
        entry = {'shape': [m, n], 'x': x, 'y': y, 'axis': axis,
                 'peel': info, 'sub': subtrace}
        return total, entry

    if x < y:
        el, entry = candidate('row')
        trace.append(entry)
        return el
    if y < x:
        el, entry = candidate('col')
        trace.append(entry)
        return el
    el_r, entry_r = candidate('row')
    if x == 1:
        trace.append(entry_r)
        return el_r
    ok = is_primitive(ModuleVector(labels, m, n, el_r), cap)
    if ok:
        trace.append(entry_r)
        return el_r
    if ok is None:
        # verification capped: keep the row-first candidate by convention
        entry_r['selection'] = 'skipped'
        trace.append(entry_r)
        return el_r
    el_c, entry_c = candidate('col')
    ok_c = is_primitive(ModuleVector(labels, m, n, el_c), cap)
    if not ok_c:
        raise RuntimeError('neither candidate verified primitive')
    entry_c['selection'] = 'mirror'
    trace.append(entry_c)
    return el_c


def construct_indecomposable(labels, m, n, code, cap=DEFAULT_CAP):
    if not is_indecomposable(code):
        raise ValueError('code is not indecomposable')
    cells = d_sigma(labels, m, n, code)
    trace = []
    element = build_from_region(labels, m, n, cells, trace, cap)
    return ModuleVector(labels, m, n, element), trace


def construct(labels, m, n, code, cap=DEFAULT_CAP):
    """Primitive vector attached to an unlinked code, composing the
    vectors of its indecomposable components."""
    if is_linked(code):
        raise ValueError('linked code')
    comps = decompose(code)
    if not comps:
        return ModuleVector(labels, m, n, AlgebraElement.one(m, n)), []
    last = comps[-1]
    vk, trace = construct_indecomposable(labels, m, n, last, cap)
    if len(comps) == 1:
        return vk, trace
    rest = tuple(next((c[s] for c in comps[:-1] if c[s] != (0,)), (0,))
                 for s in range(len(code)))
    sig = tuple(int(v) if Fraction(v).denominator == 1 else v
                for v in sigma_weight(labels, m, n, last))
    vo, tr2 = construct(sig, m, n, rest, cap)
    element = vo.element * vk.element
    trace = trace + [{'compose': code_to_text(rest), 'on_weight':
                      [str(v) for v in sig]}] + tr2
    return ModuleVector(labels, m, n, element), trace


def build_vk(labels, m, n, cells, k):
    """The k-th row-peel vector for a region with top-right corner
    (1, n+1), together with the coefficient data of each step."""
    x, y = xy_counts(cells)
    if not 1 <= k <= x:
        raise ValueError('step out of range')
    element, lam, info = peel(labels, m, n, x, y, k, 'row')
    return ModuleVector(labels, m, n, element), lam, info


def layer_peeling(cells, axes=None):
    """Decompose a region into successive layers, each the full topmost
    row or the full rightmost column of what remains.  axes optionally
    fixes the choice per layer ('row'/'col'); the default takes the row
    when it is no longer than the column."""
    rem = set(cells)
    layers = []
    k = 0
    while rem:
        b0, c0 = top_right(rem)
        row = {(b, c) for (b, c) in rem if b == b0}
        col = {(b, c) for (b, c) in rem if c == c0}
        if axes is not None and k < len(axes):
            ax = axes[k]
        else:
            ax = 'row' if len(row) <= len(col) else 'col'
        layer = row if ax == 'row' else col
        layers.append(frozenset(layer))
        rem -= layer
        k += 1
    return layers


def _json_ready(obj):
    if isinstance(obj, dict):
        return {str(k): _json_ready(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set)):
        return [_json_ready(v) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    return obj


def trace_to_json(trace):
    return json.dumps(_json_ready(trace), indent=2, sort_keys=True)
