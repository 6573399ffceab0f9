import json
import os

import NegStat_stats
import NegStat_class
import NegStat_group
import NegStat_verify
import NegStat_io_lib as io_lib


#%% NegStat_stats.py
def test_stats_pretty(capsys):
    rc = NegStat_stats.main(['NegStat_stats.py', '-w', '[-3,1,-6,2,-4,-5]'])
    out = capsys.readouterr().out
    assert rc == 0
    assert '  nmaj    29' in out
    assert '  len_B   27' in out
    assert '  Des_B   {0,2,4,5}' in out
    assert '  NDes    {2,3,4,4,5,5,6}' in out
    assert 'All statistic relations hold.' in out


def test_stats_json_positional(capsys):
    rc = NegStat_stats.main(['NegStat_stats.py', '--output', 'json', '[-4,1,3,-5,-2,-6]'])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out['n'] == 6
    assert out['statistics']['dmaj'] == 21
    assert out['statistics']['ddes'] == 6
    assert out['statistics']['ddes_multiset'] == [1, 3, 3, 4, 5, 5]
    assert out['violated'] == []


def test_stats_usage_errors(capsys):
    assert NegStat_stats.main(['NegStat_stats.py', '-w', '[1,1]']) == 2
    err = capsys.readouterr().err
    assert 'repeats absolute value 1' in err
    assert 'For help, use -h or --help.' in err
    assert NegStat_stats.main(['NegStat_stats.py']) == 2
    assert NegStat_stats.main(['NegStat_stats.py', '--output', 'xml', '[1]']) == 2


#%% NegStat_class.py
def test_class_filter(capsys):
    rc = NegStat_class.main(['NegStat_class.py', '-g', 'B', '-n', '2', '-s', '0'])
    out = capsys.readouterr().out
    assert rc == 0
    assert 'B({0}) n=2 subset mode: 4 elements' in out
    assert '[2,-1]' in out
    assert '  len_B   1 + q + q^2 + q^3' in out


def test_class_both_agree(capsys):
    rc = NegStat_class.main(['NegStat_class.py', '-g', 'D', '-n', '4', '-s', '1,3', '--both', '--count'])
    out = capsys.readouterr().out
    assert rc == 0
    assert 'Constructive and filtered classes agree' in out
    assert 'case3c' in out


def test_class_unrestricted(capsys):
    rc = NegStat_class.main(['NegStat_class.py', '-g', 'D', '-n', '2', '-s', '1', '--mode', 'exact',
                             '--unrestricted'])
    out = capsys.readouterr().out
    assert rc == 0
    assert 'Des_D class of B_2 for {1}' in out
    assert '[-2,1]\n[2,1]' in out


def test_class_json(capsys):
    rc = NegStat_class.main(['NegStat_class.py', '-g', 'D', '-n', '3', '-s', '1', '--output', 'json'])
    assert rc == 0
    out = json.loads(capsys.readouterr().out)
    assert out['count'] == 4
    assert out['gf']['dmaj']['caps'] == {'t': 9, 'q': 9, 'p': 9}
    assert out['gf']['dmaj']['terms'] == out['gf']['len_D']['terms'] == out['closed_form']['terms']


def test_class_usage_errors(capsys):
    assert NegStat_class.main(['NegStat_class.py', '-g', 'B', '-n', '3', '--construct',
                               '--mode', 'exact']) == 2
    assert NegStat_class.main(['NegStat_class.py', '-g', 'B', '-n', '3', '--unrestricted']) == 2
    assert NegStat_class.main(['NegStat_class.py', '-g', 'A', '-n', '3', '-s', '0']) == 2
    assert NegStat_class.main(['NegStat_class.py', '-g', 'C', '-n', '3']) == 2
    assert NegStat_class.main(['NegStat_class.py', '-g', 'B']) == 2
    err = capsys.readouterr().err
    assert 'group must be A, B or D' in err


#%% NegStat_group.py
def test_group_quotient(capsys):
    assert NegStat_group.main(['NegStat_group.py', '-g', 'B', '-n', '2', '--quotient']) == 0
    out = capsys.readouterr().out
    assert 'B^J_2:\n[-2,-1]\n[-2,1]\n[-1,2]\n[1,2]' in out


def test_group_count_and_tsv(capsys):
    assert NegStat_group.main(['NegStat_group.py', '-g', 'D', '-n', '3', '--count']) == 0
    assert 'D_3: 24 elements' in capsys.readouterr().out
    assert NegStat_group.main(['NegStat_group.py', '-g', 'A', '-n', '2', '--output', 'tsv']) == 0
    out = capsys.readouterr().out
    assert 'window\tinv\t' in out
    assert '[2,1]\t1\t' in out
    assert NegStat_group.main(['NegStat_group.py', '-g', 'A', '-n', '2', '--quotient']) == 2


#%% NegStat_verify.py
def test_verify_writes_reports(capsys, tmp_path):
    outdir = str(tmp_path / 'reports')
    rc = NegStat_verify.main(['NegStat_verify.py', '--jobs', '1', '--n-max', '3', '-o', outdir,
                              'poincare', 'lemmino'])
    out = capsys.readouterr().out
    assert rc == 0
    assert '2 passed, 0 failed, 0 unknown' in out
    assert sorted(os.listdir(outdir)) == ['lemmino.json', 'poincare.json', 'summary.tsv']
    report = io_lib.read_json(os.path.join(outdir, 'poincare.json'))
    assert report['status'] == 'pass'
    assert report['params']['n_max'] == 3
    with open(os.path.join(outdir, 'summary.tsv')) as f:
        lines = f.read().splitlines()
    assert lines[0].startswith('identity_id\tstatus')
    assert lines[1].startswith('poincare\tpass\t')


def test_verify_unknown_id(capsys):
    rc = NegStat_verify.main(['NegStat_verify.py', '--jobs', '1', '--n-max', '2', 'qbinomial', 'nope'])
    captured = capsys.readouterr()
    assert rc == 2
    assert 'unknown identity id nope' in captured.err
    assert '1 passed, 0 failed, 1 unknown' in captured.out


def test_verify_series_caps_and_tsv(capsys):
    rc = NegStat_verify.main(['NegStat_verify.py', '--jobs', '1', '--caps', 'u=2,t=4,q=4',
                              '--output', 'tsv', '-i', 'roselle_A,gessel_A'])
    out = capsys.readouterr().out
    assert rc == 0
    assert 'roselle_A\tpass\t' in out
    assert 'gessel_A\tpass\t' in out


def test_verify_list_and_errors(capsys):
    assert NegStat_verify.main(['NegStat_verify.py', '--list']) == 0
    assert 'roselle_B' in capsys.readouterr().out
    assert NegStat_verify.main(['NegStat_verify.py', '--caps', 'x=3', 'poincare']) == 2
    assert NegStat_verify.main(['NegStat_verify.py', '--mode', 'both', 'poincare']) == 2
    assert NegStat_verify.main(['NegStat_verify.py', '--jobs', '0', 'poincare']) == 2


def test_verify_options_after_ids(capsys):
    rc = NegStat_verify.main(['NegStat_verify.py', 'symmetry_B', '--n', '3', '--jobs', '1'])
    captured = capsys.readouterr()
    assert rc == 0
    assert 'unknown identity id' not in captured.err
    assert '1 passed, 0 failed, 0 unknown' in captured.out
    rc = NegStat_verify.main(['NegStat_verify.py', 'roselle_D', '--caps', 'u=3,t=6,q=6',
                              '--jobs', '1', '--output', 'json'])
    captured = capsys.readouterr()
    assert rc == 0
    reports = json.loads(captured.out)
    assert reports[0]['params']['caps'] == {'u': 3, 't': 6, 'q': 6}
    assert reports[0]['status'] == 'pass'
    assert '1 passed, 0 failed, 0 unknown' in captured.err


def test_verify_set_over_rank_range(capsys):
    rc = NegStat_verify.main(['NegStat_verify.py', '-i', 'class_B', '--set', '0,2', '--n-max', '4',
                              '--jobs', '1', '--output', 'json'])
    assert rc == 0
    report, = json.loads(capsys.readouterr().out)
    assert report['status'] == 'pass'
    assert report['notes'] == ['ranks too small to hold M={0,2} are skipped']


def test_json_output_is_stable(capsys):
    argv = ['NegStat_class.py', '-g', 'B', '-n', '2', '-s', '0', '--output', 'json']
    assert NegStat_class.main(argv) == 0
    first = capsys.readouterr()
    assert NegStat_class.main(argv) == 0
    second = capsys.readouterr()
    assert first.out == second.out
    assert json.loads(first.out)['count'] == 4
    assert 'Elapsed time' in first.err
    argv = ['NegStat_verify.py', '--jobs', '2', '--n-max', '2', '--output', 'json', 'poincare', 'qbinomial']
    assert NegStat_verify.main(argv) == 0
    first = capsys.readouterr()
    assert NegStat_verify.main(argv) == 0
    assert capsys.readouterr().out == first.out
    assert [r['identity_id'] for r in json.loads(first.out)] == ['poincare', 'qbinomial']


def test_group_json_count(capsys):
    assert NegStat_group.main(['NegStat_group.py', '-g', 'B', '-n', '3', '--count', '--output', 'json']) == 0
    assert json.loads(capsys.readouterr().out) == {'group': 'B', 'n': 3, 'count': 48}
