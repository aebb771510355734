"""Matrix realization and root data for the Lie superalgebra sl(m+1/n+1).

A shape (m, n) selects sl(m+1/n+1), realized as (m+n+2)x(m+n+2) matrices
with zero supertrace.  Basis elements are tagged tuples:

    ('e', i, j)   raising root vector, i <= j
    ('f', i, j)   lowering root vector
    ('h', i)      Cartan basis element

with indices in I = {-m, .., -1, 0, 1, .., n}.  The root attached to
('e', i, j) is the sum of the simple roots alpha_i + ... + alpha_j; it is
odd exactly when i <= 0 <= j.

Weights are handled in two forms: Dynkin labels (a flat tuple of length
m+n+1, entry k holding the value on ('h', k-m)) and (eps, delta) coordinate
vectors in a fixed gauge.  All arithmetic is exact (ints / Fractions).
"""
from fractions import Fraction
from functools import lru_cache


def index_set(m, n):
    return list(range(-m, n + 1))


def root_pairs(m, n):
    I = index_set(m, n)
    return [(i, j) for i in I for j in I if i <= j]


def sigma(i, j):
    """Parity of the root alpha_{ij}: odd iff it crosses the odd node."""
    return 1 if i <= 0 <= j else 0


def gen_parity(g):
    if g[0] == 'h':
        return 0
    return sigma(g[1], g[2])


def _zero(N):
    return [[0] * N for _ in range(N)]


def gen_matrix(m, n, g):
    N = m + n + 2
    M = _zero(N)
    if g[0] == 'e':
        i, j = g[1], g[2]
        M[m + i][m + j + 1] = 1
    elif g[0] == 'f':
        i, j = g[1], g[2]
        M[m + j + 1][m + i] = 1
    elif g[0] == 'h':
        i = g[1]
        if i == 0:
            M[m][m] = 1
            M[m + 1][m + 1] = 1
        else:
            M[m + i][m + i] = 1
            M[m + i + 1][m + i + 1] = -1
    else:
        raise ValueError(f'unknown generator {g!r}')
    return M


def h_components(i, j):
    """h_{ij} written in the Cartan basis, as a list of (k, sign)."""
    if j <= -1 or i >= 1:
        return [(k, 1) for k in range(i, j + 1)]
    return [(k, 1) for k in range(i, 1)] + [(k, -1) for k in range(1, j + 1)]


def _mat_mul(A, B):
    N = len(A)
    return [[sum(A[r][k] * B[k][c] for k in range(N)) for c in range(N)]
            for r in range(N)]


def decompose(m, n, M):
    """Write a supertraceless matrix in the e/f/h basis; dict gen -> coeff."""
    out = {}
    N = m + n + 2
    for r in range(N):
        for c in range(N):
            v = M[r][c]
            if v == 0 or r == c:
                continue
            if r < c:
                out[('e', r - m, c - m - 1)] = v
            else:
                out[('f', c - m, r - m - 1)] = v
    d = [M[r][r] for r in range(N)]
    coef = {}
    if n >= 1:
        coef[n] = -d[m + n + 1]
        for k in range(n, 1, -1):
            coef[k - 1] = coef[k] - d[m + k]
        coef[0] = d[m + 1] - coef[1]
    else:
        coef[0] = d[m + 1]
    if m >= 1:
        coef[-1] = coef[0] - d[m]
        for p in range(m - 1, 0, -1):
            coef[p - m - 1] = coef[p - m] - d[p]
    # consistency: the recurrence must reproduce the whole diagonal
    check = [0] * N
    for k, v in coef.items():
        hm = gen_matrix(m, n, ('h', k))
        for r in range(N):
            check[r] += v * hm[r][r]
    if check != d:
        raise ValueError('matrix is not in the algebra (bad diagonal)')
    for k, v in coef.items():
        if v != 0:
            out[('h', k)] = v
    return out


@lru_cache(maxsize=None)
def _bracket_cached(m, n, g1, g2):
    A = gen_matrix(m, n, g1)
    B = gen_matrix(m, n, g2)
    s = (-1) ** (gen_parity(g1) * gen_parity(g2))
    N = len(A)
    AB = _mat_mul(A, B)
    BA = _mat_mul(B, A)
    M = [[AB[r][c] - s * BA[r][c] for c in range(N)] for r in range(N)]
    return tuple(sorted(decompose(m, n, M).items()))


def bracket(m, n, g1, g2):
    """Supercommutator [g1, g2] as a dict gen -> integer coefficient."""
    return dict(_bracket_cached(m, n, g1, g2))


def all_gens(m, n):
    pairs = root_pairs(m, n)
    return ([('f', i, j) for (i, j) in pairs]
            + [('h', i) for i in index_set(m, n)]
            + [('e', i, j) for (i, j) in pairs])


# ---------------------------------------------------------------------------
# weights

def lab(labels, m, i):
    return labels[i + m]


def weight_vector(labels, m, n):
    """(eps, delta) coordinates of a weight, gauge: last delta coord is 0."""
    a = lambda i: Fraction(labels[i + m])
    delta = [Fraction(0)] * (n + 1)
    for b in range(n, 0, -1):
        delta[b - 1] = delta[b] + a(b)
    eps = [Fraction(0)] * (m + 1)
    eps[m] = a(0) - delta[0]
    for p in range(m - 1, -1, -1):
        eps[p] = eps[p + 1] + a(p - m)
    return tuple(eps), tuple(delta)


def labels_from_vector(vec, m, n):
    eps, delta = vec
    labs = []
    for i in range(-m, n + 1):
        if i < 0:
            labs.append(eps[m + i] - eps[m + i + 1])
        elif i == 0:
            labs.append(eps[m] + delta[0])
        else:
            labs.append(delta[i - 1] - delta[i])
    return tuple(labs)


def inner(v, w):
    (e1, d1), (e2, d2) = v, w
    return (sum(x * y for x, y in zip(e1, e2))
            - sum(x * y for x, y in zip(d1, d2)))


def vec_add(v, w, scale=1):
    (e1, d1), (e2, d2) = v, w
    return (tuple(x + scale * y for x, y in zip(e1, e2)),
            tuple(x + scale * y for x, y in zip(d1, d2)))


def root_weight(i, j, m, n):
    """(eps, delta) vector of the root alpha_{ij}."""
    eps = [Fraction(0)] * (m + 1)
    delta = [Fraction(0)] * (n + 1)
    if j <= -1:
        eps[m + i] += 1
        eps[m + j + 1] -= 1
    elif i >= 1:
        delta[i - 1] += 1
        delta[j] -= 1
    else:
        eps[m + i] += 1
        delta[j] -= 1
    return tuple(eps), tuple(delta)


def rho(m, n):
    """Half-sum of even positive roots minus half-sum of odd positive roots."""
    half = Fraction(1, 2)
    eps = [Fraction(0)] * (m + 1)
    delta = [Fraction(0)] * (n + 1)
    for a_ in range(m + 1):
        for b_ in range(a_ + 1, m + 1):
            eps[a_] += half
            eps[b_] -= half
    for a_ in range(n + 1):
        for b_ in range(a_ + 1, n + 1):
            delta[a_] += half
            delta[b_] -= half
    for b_ in range(m + 1):
        for c_ in range(n + 1):
            eps[b_] -= half
            delta[c_] += half
    return tuple(eps), tuple(delta)


def beta_pair(b, c, m):
    """Position (b, c), 1-based, of the odd root grid -> (i, j) root pair."""
    return (-(m - b + 1), c - 1)


def pair_to_pos(i, j, m):
    return (m + 1 + i, j + 1)


def subtract_roots(labels, pairs, m, n):
    """Dynkin labels of (weight - sum of the listed roots alpha_{ij})."""
    vec = weight_vector(labels, m, n)
    for (i, j) in pairs:
        vec = vec_add(vec, root_weight(i, j, m, n), scale=-1)
    return labels_from_vector(vec, m, n)


def is_dominant(labels, m, n):
    """Labels a_i with i != 0 must be nonnegative integers."""
    for i in range(-m, n + 1):
        if i == 0:
            continue
        v = Fraction(lab(labels, m, i))
        if v.denominator != 1 or v < 0:
            return False
    return True


def is_integral(labels, m, n):
    for i in range(-m, n + 1):
        if i == 0:
            continue
        if Fraction(lab(labels, m, i)).denominator != 1:
            return False
    return True
