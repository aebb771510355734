"""South-west chains of an atypicality matrix, the regions they enclose,
and the composition-factor weights attached to unlinked codes.

Positions are 1-based (row, col) pairs inside the matrix grid.  The west
chain walks left from an atypical zero, dropping by the Dynkin label
between columns; the south chain walks down, shifting left by the label
between rows.  Truncation keeps the initial run of each chain up to (and
excluding) the first point where the two extended chains meet or cross.
"""
from .atypicality import atyp_matrix, atypical_roots
from .codes import decompose, is_linked
from .rootdata import beta_pair, lab, subtract_roots


class ChainSet:
    def __init__(self, s, start, west_ext, south_ext, west, south, special):
        self.s = s
        self.start = start
        self.west_ext = west_ext    # ordered from the start, leftwards
        self.south_ext = south_ext  # ordered from the start, downwards
        self.west = west
        self.south = south
        self.special = special      # south chain immediately above west

    @property
    def sw_ext(self):
        return set(self.west_ext) | set(self.south_ext)

    @property
    def sw(self):
        return set(self.west) | set(self.south)


def west_chain_ext(labels, m, n, start):
    bs, cs = start
    out = []
    off = 0
    for c in range(cs, 0, -1):
        b = bs + off
        if b > m + 1:
            break
        out.append((b, c))
        if c > 1:
            off += lab(labels, m, c - 1)
    return out


def south_chain_ext(labels, m, n, start):
    bs, cs = start
    out = []
    off = 0
    for b in range(bs, m + 2):
        c = cs - off
        if c < 1:
            break
        out.append((b, c))
        off += lab(labels, m, -(m - b + 1))
    return out


def sw_chain(labels, m, n, s, A=None, gammas=None):
    if A is None:
        A = atyp_matrix(labels, m, n)
    if gammas is None:
        gammas = atypical_roots(A)
    start = gammas[s - 1]
    bs, cs = start
    w_ext = west_chain_ext(labels, m, n, start)
    s_ext = south_chain_ext(labels, m, n, start)

    # special case: the very first steps already put the south chain above
    # the west chain (the product of the two adjacent labels exceeds 1)
    special = False
    if cs > 1 and bs < m + 1:
        if lab(labels, m, cs - 1) * lab(labels, m, -(m - bs + 1)) > 1:
            special = True
    if special:
        return ChainSet(s, start, w_ext, s_ext, [start], [start], True)

    w_set = set(w_ext)
    s_set = set(s_ext)
    west = [start]
    for (b, c) in w_ext[1:]:
        if A[b - 1][c - 1] < 0 or (b, c) in s_set:
            break
        west.append((b, c))
    south = [start]
    for (b, c) in s_ext[1:]:
        if A[b - 1][c - 1] > 0 or (b, c) in w_set:
            break
        south.append((b, c))
    return ChainSet(s, start, w_ext, s_ext, west, south, False)


def all_chains(labels, m, n):
    A = atyp_matrix(labels, m, n)
    gammas = atypical_roots(A)
    return [sw_chain(labels, m, n, s, A, gammas)
            for s in range(1, len(gammas) + 1)]


def region_D(labels, m, n, t, chain=None):
    """Cells enclosed by the truncated chains of gamma_t together with the
    closing vertical and horizontal boundary lines."""
    if chain is None:
        chain = sw_chain(labels, m, n, t)
    bs, cs = chain.start
    d_t, e_t = chain.west[-1]
    d2, e2 = chain.south[-1]
    assert d2 >= d_t and e2 >= e_t
    w_row = {c: b for (b, c) in chain.west}
    s_col = {b: c for (b, c) in chain.south}
    cells = set()
    for b in range(bs, d2 + 1):
        for c in range(e_t, cs + 1):
            if c in w_row and b < w_row[c]:
                continue
            if b in s_col and c > s_col[b]:
                continue
            cells.add((b, c))
    return cells


def d_sigma(labels, m, n, code, check=True):
    """Union of the truncated chains over the nonzero columns of an
    unlinked code."""
    if is_linked(code):
        raise ValueError('linked code has no chain weight')
    chains = all_chains(labels, m, n)
    if len(code) != len(chains):
        raise ValueError('code length does not match the atypicality degree')
    cells = set()
    nonzero = [s for s in range(1, len(code) + 1) if code[s - 1] != (0,)]
    for s in nonzero:
        cells |= chains[s - 1].sw
    if check:
        for t in nonzero:
            reg = region_D(labels, m, n, t, chains[t - 1])
            assert reg <= cells, 'wrap condition violated for column %d' % t
    return cells


def sigma_weight(labels, m, n, code):
    cells = d_sigma(labels, m, n, code)
    pairs = [beta_pair(b, c, m) for (b, c) in sorted(cells)]
    return subtract_roots(labels, pairs, m, n)


def check_indecomposable_region(labels, m, n, code):
    """The column index t with D_sigma = D(t), if one exists."""
    cells = d_sigma(labels, m, n, code)
    if not cells:
        return None
    chains = all_chains(labels, m, n)
    for s in range(len(code), 0, -1):
        if code[s - 1] == (0,):
            continue
        if region_D(labels, m, n, s, chains[s - 1]) == cells:
            return s
    return None
