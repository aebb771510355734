from superkac.atypicality import atyp_matrix, atypical_roots, nqc
from superkac.codes import (check_code, code_from_text, code_to_text,
                            connected_components, decompose, enumerate_codes,
                            is_indecomposable, is_linked, is_permissible)

REL_5 = {(1, 2): 'c',
         (1, 3): 'q', (2, 3): 'n',
         (1, 4): 'c', (2, 4): 'q', (3, 4): 'c',
         (1, 5): 'c', (2, 5): 'c', (3, 5): 'c', (4, 5): 'c'}

CODES_15 = [
    '0 0 0 0 0',
    '1 0 0 0 0',
    '1/2 2 0 0 0',
    '0 0 3 0 0',
    '1 0 3 0 0',
    '1/2 2 3 0 0',
    '3 0 3 0 0',
    '0 0 3/4 4 0',
    '1 0 3/4 4 0',
    '1/2 2 3/4 4 0',
    '1/4 4 3/4 4 0',
    '3/4 4 3/4 4 0',
    '1/2/5 2/5 3/4/5 4/5 5',
    '1/4/5 4/5 3/4/5 4/5 5',
    '3/4/5 4/5 3/4/5 4/5 5',
]


def test_fifteen_codes():
    got = {code_to_text(c) for c in enumerate_codes(REL_5, 5)}
    assert got == set(CODES_15)


def test_relation_triangle_matches_weight():
    labs = (0, 0, 0, 2, 0, 0, 0, 2, 1, 0)
    A = atyp_matrix(labs, 5, 4)
    assert nqc(A, atypical_roots(A)) == REL_5


def test_rank_two_counts():
    for kind, count in [('c', 3), ('n', 4), ('q', 5)]:
        assert len(enumerate_codes({(1, 2): kind}, 2)) == count


def test_rejections_report_rules():
    # unwrapped c-related top
    assert any(v.startswith('ii') for v in
               check_code(code_from_text('1 2 0 0 0'), REL_5, 5))
    # top label below which a non-top appears
    assert not is_permissible(code_from_text('1/3 0 0 0 0'), REL_5, 5)
    # top not q-justified
    assert any(v.startswith('i:') for v in
               check_code(code_from_text('2 2 0 0 0'), REL_5, 5))


def test_linking_and_components():
    assert is_linked(code_from_text('3 0 3 0 0'))
    assert not is_linked(code_from_text('1 0 3 0 0'))
    code = code_from_text('1/2 2 3/4 4')
    assert connected_components(code) == [[1, 2], [3, 4]]
    assert not is_indecomposable(code)
    parts = decompose(code)
    assert [code_to_text(p) for p in parts] == ['1/2 2 0 0', '0 0 3/4 4']
    assert all(is_indecomposable(p) for p in parts)
    big = code_from_text('1/2/5 2/5 3/4/5 4/5 5')
    assert is_indecomposable(big)
    assert decompose(code_from_text('0 0 0 0 0')) == []


def test_text_round_trip():
    for txt in CODES_15:
        assert code_to_text(code_from_text(txt)) == txt
