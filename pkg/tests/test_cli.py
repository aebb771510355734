"""Command line interface: parsing, renders, exit codes, JSON."""
import json
from fractions import Fraction

import pytest

from superkac.chains import all_chains
from superkac.cli import main, parse_weight, render_atyp, weight_to_text
from superkac.codes import code_from_text, code_to_text
from superkac.pbw import AlgebraElement, from_text
from superkac.primvec import ModuleVector

W33 = '[0,0,0,2,0;0;0,2,1,0]'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_parse_weight_examples():
    labels, m, n = parse_weight('[1,0,0;0;1,0,0,0]')
    assert (m, n) == (3, 4)
    assert labels == (1, 0, 0, 0, 1, 0, 0, 0)
    labels, m, n = parse_weight(W33)
    assert (m, n) == (5, 4)
    labels, m, n = parse_weight('[;0;]')
    assert (m, n) == (0, 0) and labels == (0,)
    labels, m, n = parse_weight('[1 2; -3/2 ;0 1]')
    assert labels == (1, 2, Fraction(-3, 2), 0, 1)


def test_parse_weight_errors():
    for bad in ['1,0;0;1', '[1;0]', '[a;0;1]', '[1;0;1;2]', '[1/2;0;1]',
                '[1;0 1;2]']:
        with pytest.raises(ValueError):
            parse_weight(bad)


def test_weight_text_round_trip():
    for text in ['[1,0,0;0;1,0,0,0]', W33, '[;0;]', '[1,2;-3/2;0,1]']:
        labels, m, n = parse_weight(text)
        assert parse_weight(weight_to_text(labels, m, n)) == (labels, m, n)


GOLD_RENDERS = {
    (1, 0, 0, 0, 1, 0, 0, 0): (3, 4, """\
  |  4  2  1  0 -1 |
1 |                |
  |  2  0 -1 -2 -3 |
0 |                |
  |  1 -1 -2 -3 -4 |
0 |                |
  |  0 -2 -3 -4 -5 |
      1  0  0  0"""),
    (0, 0, 0, 2, 0, 0, 0, 2, 1, 0): (5, 4, """\
  |  7  6  3  1  0 |
0 |                |
  |  6  5  2  0 -1 |
0 |                |
  |  5  4  1 -1 -2 |
0 |                |
  |  4  3  0 -2 -3 |
2 |                |
  |  1  0 -3 -5 -6 |
0 |                |
  |  0 -1 -4 -6 -7 |
      0  2  1  0"""),
    (1, 1, 1, 1, -1, 1, 0, 0, 1, 0): (4, 5, """\
  |  7  5  4  3  1  0 |
1 |                   |
  |  5  3  2  1 -1 -2 |
1 |                   |
  |  3  1  0 -1 -3 -4 |
1 |                   |
  |  1 -1 -2 -3 -5 -6 |
1 |                   |
  | -1 -3 -4 -5 -7 -8 |
      1  0  0  1  0"""),
    (2, 3, 0, 2, -1, 0, 1, 1, 2, 1): (4, 5, """\
  |  10   9   7   5   2   0 |
2 |                         |
  |   7   6   4   2  -1  -3 |
3 |                         |
  |   3   2   0  -2  -5  -7 |
0 |                         |
  |   2   1  -1  -3  -6  -8 |
2 |                         |
  |  -1  -2  -4  -6  -9 -11 |
       0   1   1   2   1"""),
    (1, 2, 1, 1, -1, 1, 0, 0, 0, 2): (4, 5, """\
  |  8  6  5  4  3  0 |
1 |                   |
  |  6  4  3  2  1 -2 |
2 |                   |
  |  3  1  0 -1 -2 -5 |
1 |                   |
  |  1 -1 -2 -3 -4 -7 |
1 |                   |
  | -1 -3 -4 -5 -6 -9 |
      1  0  0  0  2"""),
}


def test_render_goldens():
    for labels, (m, n, want) in GOLD_RENDERS.items():
        assert render_atyp(labels, m, n) == want


def test_atyp_command(capsys):
    code, out, _ = run(capsys, 'atyp', '--weight', W33)
    assert code == 0
    labels, m, n = parse_weight(W33)
    assert out.startswith(render_atyp(labels, m, n))
    assert 'atypical roots: (6,1) (5,2) (4,3) (2,4) (1,5)' in out


def test_nqc_command(capsys):
    code, out, _ = run(capsys, 'nqc', '--weight', W33)
    assert code == 0
    assert out.splitlines() == ['c c c c 0', 'c q c 0', 'q n 0', 'c 0', '0']


def test_codes_command(capsys):
    code, out, _ = run(capsys, 'codes', '--weight', W33)
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 15
    texts = {line.split(' | ')[0] for line in lines}
    assert '1/2/5 2/5 3/4/5 4/5 5' in texts
    assert sum(' | linked | ' in line for line in lines) == 5
    # code text column round-trips
    for line in lines:
        t = line.split(' | ')[0]
        assert code_to_text(code_from_text(t)) == t


def test_chains_command_round_trip(capsys):
    rc, out, _ = run(capsys, 'chains', '--weight', W33, '--json')
    assert rc == 0
    data = json.loads(out)
    assert data['schema'] == 'superkac/1'
    labels, m, n = parse_weight(W33)
    chains = all_chains(labels, m, n)
    assert len(data['chains']) == len(chains)
    for got, ch in zip(data['chains'], chains):
        assert [tuple(p) for p in got['west']] == list(ch.west)
        assert [tuple(p) for p in got['south']] == list(ch.south)
        assert got['special'] == ch.special


def test_factors_command(capsys):
    rc, out, _ = run(capsys, 'factors', '--weight', W33)
    assert rc == 0
    rows = dict(line.split(' -> ') for line in out.strip().splitlines())
    assert len(rows) == 10
    assert rows['0 0 0 0 0'] == W33
    assert rows['1 0 3/4 4 0'] == '[1,1,0,0,1;0;1,0,0,3]'
    assert rows['1/2/5 2/5 3/4/5 4/5 5'] == '[1,0,2,0,0;0;0,0,2,0]'


def test_primvec_command_json(capsys):
    rc, out, _ = run(capsys, 'primvec', '--weight', '[1,0;0;2,1]',
                     '--code', '1/2 2', '--json')
    assert rc == 0
    data = json.loads(out)
    assert data['schema'] == 'superkac/1'
    labels, m, n = parse_weight(data['weight'])
    el = from_text(m, n, data['vector'])
    assert el and len(el.terms) == data['monomials']
    assert parse_weight(data['sigma'])[0] == \
        tuple(parse_weight('[0,1;0;2,2]')[0])
    assert isinstance(data['trace'], list) and data['trace']


def test_verify_command(capsys, monkeypatch):
    rc, out, _ = run(capsys, 'verify', '--weight', '[1,0;0;2,1]',
                     '--code', '1/2 2')
    assert rc == 0
    assert 'primitive: yes' in out
    # a cap of zero skips verification but still succeeds
    rc, out, _ = run(capsys, 'verify', '--weight', '[1,0;0;2,1]',
                     '--code', '1/2 2', '--max-verify-dim', '0')
    assert rc == 0
    assert 'skipped' in out
    # worker count comes from the environment
    monkeypatch.setenv('SUPERKAC_THREADS', '2')
    rc, out, _ = run(capsys, 'verify', '--weight', '[1,0;0;2,1]',
                     '--code', '1/2 2')
    assert rc == 0
    monkeypatch.setenv('SUPERKAC_THREADS', 'many')
    rc, out, err = run(capsys, 'verify', '--weight', '[1,0;0;2,1]',
                       '--code', '1/2 2')
    assert rc == 1 and 'SUPERKAC_THREADS' in err


def test_verify_failure_exit_code(capsys, monkeypatch):
    # a non-primitive vector must drive exit status 2
    import superkac.cli as cli

    def fake(labels, m, n, code, cap=None):
        el = AlgebraElement.from_gens(m, n, [('f', -m, n)])
        return ModuleVector(labels, m, n, el), {'steps': []}

    monkeypatch.setattr(cli, 'construct', fake)
    rc, out, _ = run(capsys, 'verify', '--weight', '[1,0;0;2,1]',
                     '--code', '1/2 2')
    assert rc == 2
    assert 'FAIL' in out and 'primitive: NO' in out


def test_input_error_exit_codes(capsys):
    rc, _, err = run(capsys, 'atyp', '--weight', '[1;0]')
    assert rc == 1 and 'error:' in err
    rc, _, err = run(capsys, 'atyp', '--weight', '[1,0;0;2,1]',
                     '--shape', '3', '3')
    assert rc == 1
    rc, _, err = run(capsys, 'atyp', '--weight', '[-1,0;0;2,1]')
    assert rc == 1 and 'dominant' in err
    rc, _, err = run(capsys, 'primvec', '--weight', W33, '--code', '1 0 3')
    assert rc == 1
    assert main(['atyp', '--weight', '[1,0;0;2,1]',
                 '--shape', '2', '2']) == 0


def test_atyp_json_round_trip(capsys):
    rc, out, _ = run(capsys, 'atyp', '--weight', W33, '--json')
    assert rc == 0
    data = json.loads(out)
    labels, m, n = parse_weight(data['weight'])
    assert (labels, m, n) == parse_weight(W33)
    assert data['shape'] == [5, 4]
    from superkac.atypicality import atyp_matrix
    A = atyp_matrix(labels, m, n)
    assert [[int(v) for v in row] for row in A] == data['matrix']
