"""Permissible codes attached to the n/q/c relation triangle of an r-fold
atypical weight.

A code is a tuple of r columns; column s (1-based position) is a tuple of
strictly increasing labels from {0..r}, the first entry being the top
label.  The zero column is (0,).  Text form: columns separated by spaces,
entries within a column separated by '/', e.g. '1 2/2 3 4/4 0'.
"""
from itertools import combinations, product


def code_to_text(code):
    return ' '.join('/'.join(str(x) for x in col) for col in code)


def code_from_text(text):
    cols = []
    for tok in text.split():
        col = tuple(int(x) for x in tok.split('/'))
        cols.append(col)
    return tuple(cols)


def _column_ok(col, r):
    if len(col) == 0:
        return False
    if any(x < 0 or x > r for x in col):
        return False
    if list(col) != sorted(set(col)):
        return False
    if col[0] == 0 and len(col) > 1:
        return False
    return True


def check_code(code, rel, r):
    """Return a list of violated rule names; empty means permissible.

    rel is the dict {(s, t): 'n'|'q'|'c'} of pairwise relations.
    """
    bad = []
    if len(code) != r or not all(_column_ok(col, r) for col in code):
        return ['shape']
    top = [col[0] for col in code]

    # rule i: top of column s is 0, s, or a > s with a the top of a
    # q-related column
    for s in range(1, r + 1):
        a = top[s - 1]
        if a == 0 or a == s:
            continue
        if a < s:
            bad.append(f'i:{s}')
            continue
        if not any(rel.get((s, t)) == 'q' and top[t - 1] == a
                   for t in range(s + 1, r + 1)):
            bad.append(f'i:{s}')

    # rule ii: runs of c-relations force wraps
    for t in range(2, r + 1):
        a = top[t - 1]
        if a < t:
            continue
        for s in range(t - 1, 0, -1):
            if rel[(s, t)] != 'c':
                break
            if a not in code[s - 1][1:]:
                bad.append(f'ii:{s},{t}')

    # rule iii: entries below s must be c-related tops of their own columns
    for col in code:
        for p, s in enumerate(col):
            for t in col[p + 1:]:
                if not (s < t and top[t - 1] == t and rel.get((s, t)) == 'c'):
                    bad.append(f'iii:{s},{t}')

    # entries below a top are exactly the wraps forced by rule ii: each must
    # be required by some column t whose top is that label
    for s in range(1, r + 1):
        for a in code[s - 1][1:]:
            forced = False
            for t in range(s + 1, r + 1):
                if top[t - 1] == a and t <= a and all(
                        rel[(u, t)] == 'c' for u in range(s, t)):
                    forced = True
                    break
            if not forced:
                bad.append(f'wrap:{s},{a}')

    # rule iv: an immediate successor of a repeated label is shared
    succ = {}
    for col in code:
        if col == (0,):
            continue
        for p, s in enumerate(col):
            t = col[p + 1] if p + 1 < len(col) else None
            succ.setdefault(s, set()).add(t)
    for s, succs in succ.items():
        if len(succs) > 1:
            bad.append(f'iv:{s}')

    # rule v: no zero column between q-linked equal tops
    for s in range(1, r + 1):
        for t in range(s + 1, r + 1):
            for u in range(t + 1, r + 1):
                if rel[(s, t)] == 'q' and rel[(t, u)] == 'q':
                    if top[s - 1] == top[u - 1] != 0 and top[t - 1] == 0:
                        bad.append(f'v:{s},{t},{u}')

    # rule vi: alternating tops a b a b force containments
    for s, t, u, v in combinations(range(1, r + 1), 4):
        a, b = top[s - 1], top[t - 1]
        if a == 0 or b == 0:
            continue
        if top[u - 1] != a or top[v - 1] != b:
            continue
        if a < b:
            if b not in code[s - 1] or b not in code[u - 1]:
                bad.append(f'vi:{s},{t},{u},{v}')
        elif a > b:
            if a not in code[t - 1] or a not in code[v - 1]:
                bad.append(f'vi:{s},{t},{u},{v}')

    return bad


def is_permissible(code, rel, r):
    return not check_code(code, rel, r)


def _candidate_columns(s, rel, r):
    """Columns allowed at position s by the top-label part of rule i."""
    tops = [s]
    for t in range(s + 1, r + 1):
        if rel.get((s, t)) == 'q':
            tops.extend(range(s + 1, r + 1))
            break
    cols = [(0,)]
    seen = set(cols)
    for a in tops:
        rest = [x for x in range(a + 1, r + 1)]
        for k in range(len(rest) + 1):
            for sub in combinations(rest, k):
                col = (a,) + sub
                if col not in seen:
                    seen.add(col)
                    cols.append(col)
    return cols


def enumerate_codes(rel, r):
    """All permissible codes for the given relation triangle, by generating
    candidate columns per position and filtering on the full rule set."""
    pools = [_candidate_columns(s, rel, r) for s in range(1, r + 1)]
    out = []
    for cand in product(*pools):
        if is_permissible(cand, rel, r):
            out.append(cand)
    return out


def is_linked(code):
    top = [col[0] for col in code]
    for s in range(len(code)):
        for t in range(s + 1, len(code)):
            if top[s] == top[t] != 0:
                return True
    return False


def connected_components(code):
    """Partition of the (1-based) nonzero column positions into classes of
    columns sharing a common nonzero entry."""
    r = len(code)
    pos = [s for s in range(1, r + 1) if code[s - 1] != (0,)]
    parent = {s: s for s in pos}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in pos:
        for t in pos:
            if t <= s:
                continue
            if set(code[s - 1]) & set(code[t - 1]):
                parent[find(t)] = find(s)
    groups = {}
    for s in pos:
        groups.setdefault(find(s), []).append(s)
    return sorted(sorted(g) for g in groups.values())


def is_indecomposable(code):
    return len(connected_components(code)) == 1


def decompose(code):
    """Split into indecomposable components, each zero-padded to full length.
    The all-zero code yields an empty list."""
    r = len(code)
    out = []
    for group in connected_components(code):
        comp = tuple(code[s - 1] if s in group else (0,)
                     for s in range(1, r + 1))
        out.append(comp)
    return out
