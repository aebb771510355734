"""Atypicality matrices of dominant weights and the n/q/c relations
between atypical roots.

The matrix A has rows b = 1..m+1 and columns c = 1..n+1 (stored 0-based);
entry (b, c) is the pairing of (weight + rho) with the odd positive root
at grid position (b, c).  Zeros mark the atypical roots gamma_1 < ... <
gamma_r, ordered by descending row (equivalently ascending column).
"""
from fractions import Fraction

from .rootdata import lab


def atyp_matrix(labels, m, n):
    A = []
    for b in range(1, m + 2):
        row = []
        for c in range(1, n + 2):
            v = Fraction(m - b - c + 2)
            for k in range(-(m - b + 1), 1):
                v += Fraction(lab(labels, m, k))
            for k in range(1, c):
                v -= Fraction(lab(labels, m, k))
            row.append(v)
        A.append(tuple(row))
    return tuple(A)


def weight_from_matrix(A):
    """Recover Dynkin labels from an additive matrix; inverse of atyp_matrix."""
    m = len(A) - 1
    n = len(A[0]) - 1
    labs = [Fraction(0)] * (m + n + 1)
    labs[m] = A[m][0]  # a_0 is the bottom-left entry
    for b in range(1, m + 1):
        labs[b - 1] = A[b - 1][0] - A[b][0] - 1  # a_{-(m-b+1)}
    for c in range(1, n + 1):
        labs[m + c] = A[0][c - 1] - A[0][c] - 1  # a_c
    return tuple(labs)


def is_additive(A):
    rows = len(A)
    cols = len(A[0])
    for b in range(rows):
        for d in range(b + 1, rows):
            for c in range(cols):
                for e in range(c + 1, cols):
                    if A[b][c] + A[d][e] != A[b][e] + A[d][c]:
                        return False
    return True


def atypical_roots(A):
    """Zeros of A as 1-based (b, c) positions, ordered gamma_1 < ... < gamma_r
    (descending row)."""
    zeros = [(b + 1, c + 1)
             for b in range(len(A)) for c in range(len(A[0]))
             if A[b][c] == 0]
    zeros.sort(key=lambda bc: -bc[0])
    return zeros


def atypicality(A):
    return len(atypical_roots(A))


def cross_value(A, gammas, s, t):
    """x_{st}: entry in the row of gamma_t and the column of gamma_s (s < t)."""
    bt = gammas[t - 1][0]
    cs = gammas[s - 1][1]
    return A[bt - 1][cs - 1]


def hook_length(gammas, s, t):
    bs, cs = gammas[s - 1]
    bt, ct = gammas[t - 1]
    return bs - bt + ct - cs + 1


def relation(A, gammas, s, t):
    """'n', 'q' or 'c' depending on how x_{st} compares with the hook."""
    x = cross_value(A, gammas, s, t)
    h = hook_length(gammas, s, t)
    if x > h - 1:
        return 'n'
    if x == h - 1:
        return 'q'
    return 'c'


def nqc(A, gammas=None):
    """All pairwise relations as a dict {(s, t): 'n'|'q'|'c'}, 1 <= s < t <= r."""
    if gammas is None:
        gammas = atypical_roots(A)
    r = len(gammas)
    return {(s, t): relation(A, gammas, s, t)
            for t in range(2, r + 1) for s in range(1, t)}


def nqc_triangle(rel, r):
    """Triangle display: first row lists the relations to gamma_r, then to
    gamma_{r-1}, and so on, each row ending in 0."""
    lines = []
    for t in range(r, 0, -1):
        parts = [rel[(s, t)] for s in range(1, t)] + ['0']
        lines.append(' '.join(parts))
    return '\n'.join(lines)
