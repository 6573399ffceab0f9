import json

import pytest

import NegStat_perm_lib as perm_lib
import NegStat_qalg_lib as qalg_lib
import NegStat_enum_lib as enum_lib
import NegStat_identity_lib as identity_lib
from NegStat_perm_lib import DescentSet
from NegStat_qalg_lib import term, CapError


ROSELLE_SMALL = {'u': 3, 't': 6, 'q': 6}
GESSEL_SMALL = {'u': 2, 't': 5, 'q': 5, 'p': 2}


def _class(group, n, M, mode='subset'):
    return enum_lib.descent_class_filter(enum_lib.class_spec(group, n, M, mode))


def test_gf_small_classes():
    B = _class('B', 2, [0])
    assert identity_lib.gf(B, [('len_B', 'q')]) == 1 + term(q=1) + term(q=2) + term(q=3)
    D = _class('D', 2, [1])
    assert identity_lib.gf(D, [('len_D', 'q')]) == 1 + term(q=1)


def test_gf_joint_and_sum_keys():
    elements = list(enum_lib.quotient_increasing('B', 2))
    f = identity_lib.gf(elements, [('n1', 'p'), ('n1+n2', 'q')])
    assert f == (1 + term(p=1, q=1)) * (1 + term(p=1, q=2))
    with pytest.raises(ValueError, match='unknown statistic'):
        identity_lib.gf(elements, [('foo', 'q')])
    with pytest.raises(ValueError, match='used twice'):
        identity_lib.gf(elements, [('inv', 'q'), ('maj', 'q')])
    with pytest.raises(ValueError, match='variable'):
        identity_lib.gf(elements, [('inv', 'u')])


def test_gf_cap_error():
    with pytest.raises(CapError, match='beyond the cap'):
        identity_lib.gf(enum_lib.iter_group('B', 2), [('len_B', 'q')], caps={'q': 2})
    w = enum_lib.group_array('B', 2)
    with pytest.raises(CapError):
        identity_lib.gf_array(w, [('len_B', 'q')], caps={'q': 2})


def test_gf_array_matches_gf():
    w = enum_lib.group_array('D', 3)
    keys = [('dmaj', 't'), ('len_D', 'q'), ('ddes', 'p')]
    assert identity_lib.gf_array(w, keys) == identity_lib.gf(enum_lib.iter_group('D', 3), keys)
    assert identity_lib.gf_array(w, keys, rows=[]).is_zero


def test_closed_forms():
    assert identity_lib.closed_form_B(2, DescentSet(2, [0])) == 1 + term(q=1) + term(q=2) + term(q=3)
    assert identity_lib.closed_form_D(2, DescentSet(2, [1])) == 1 + term(q=1)
    assert identity_lib.closed_form_A(3, DescentSet(3)) == 1
    assert identity_lib.closed_form_B(1, DescentSet(1)) == 1
    with pytest.raises(perm_lib.DescentSetError):
        identity_lib.closed_form_A(3, DescentSet(3, [0]))
    for M in perm_lib.all_descent_sets(4):
        assert identity_lib.closed_form_B_dlen(4, M, 'rsum') == identity_lib.closed_form_B_dlen(4, M)
    with pytest.raises(ValueError, match='product or rsum'):
        identity_lib.closed_form_B_dlen(4, DescentSet(4), 'sum')


def test_closed_form_B_full_set_is_poincare():
    M = DescentSet(3, [0, 1, 2])
    assert identity_lib.closed_form_B(3, M) == identity_lib.poincare_oracle('B', 3)


@pytest.mark.parametrize('group, n', [('B', 3), ('D', 3), ('D', 4)])
def test_class_gf_matches_closed_form(group, n):
    closed = identity_lib.closed_form_B if group == 'B' else identity_lib.closed_form_D
    key = identity_lib.LENGTH_KEY[group]
    maj_key = identity_lib.NEG_MAJ_KEY[group]
    for M in perm_lib.all_descent_sets(n):
        for mode in enum_lib.MODES:
            C = _class(group, n, M, mode)
            if mode == 'subset':
                rhs = closed(n, M)
            else:
                rhs = identity_lib.inclusion_exclusion(M, lambda N: closed(n, N))
            assert identity_lib.gf(C, [(key, 'q')]) == rhs, (str(M), mode)
            assert identity_lib.gf(C, [(maj_key, 'q')]) == rhs, (str(M), mode)


def test_poincare_oracle():
    assert identity_lib.poincare_oracle('B', 2).specialize('q') == 8
    assert identity_lib.poincare_oracle('D', 3).specialize('q') == 24
    assert identity_lib.distribution('D', 3, [('len_D', 'q')]) == identity_lib.poincare_oracle('D', 3)


def test_negative_counterexample():
    found = identity_lib.find_negative_counterexample('B', 4)
    assert (found['n'], found['M'], found['mode']) == (3, '1', 'subset')
    assert found['nmaj'] != found['len_B']
    assert identity_lib.find_negative_counterexample('B', 2) is None


@pytest.mark.parametrize('identity_id, params', [
    ('macmahon_A', {'n_max': 4}),
    ('fs1_A', {'n_max': 4}),
    ('fs2_A', {'n_max': 4}),
    ('stanley_A', {'n_max': 4}),
    ('eqs_1_to_5', {'n_max': 4}),
    ('mahonian_B', {'n_max': 4}),
    ('mahonian_D', {'n_max': 4}),
    ('class_B', {'n_max': 4}),
    ('class_B_des_variant', {'n_max': 3}),
    ('class_B_dlen', {'n_max': 4}),
    ('class_D', {'n_max': 4}),
    ('split_props', {'n_max': 4}),
    ('blocks_B', {'n_max': 4}),
    ('blocks_D', {'n_max': 4}),
    ('lemmino', {'n_max': 5}),
    ('symmetry_B', {'n_max': 4}),
    ('symmetry_D', {'n_max': 4}),
    ('quotient_factorization', {'n_max': 3}),
    ('poincare', {'n_max': 4}),
    ('qbinomial', {'n_max': 6}),
    ('roselle_A', {'caps': ROSELLE_SMALL}),
    ('roselle_B', {'caps': ROSELLE_SMALL}),
    ('roselle_D', {'caps': ROSELLE_SMALL}),
    ('gessel_A', {'caps': GESSEL_SMALL}),
    ('gessel_B', {'caps': GESSEL_SMALL}),
    ('gessel_D', {'caps': GESSEL_SMALL}),
])
def test_verify_passes(identity_id, params):
    report = identity_lib.verify(identity_id, **params)
    assert report.status == 'pass', report.witness
    assert report.witness is None
    assert report.n_checks > 0


def test_verify_single_set_and_mode():
    report = identity_lib.verify('class_D', n=4, M='1,3', mode='exact')
    assert report.passed
    assert report.params['M'] == '1,3'
    assert report.n_checks == 2


def test_verify_des_variant_note():
    report = identity_lib.verify('class_B_des_variant', n_max=3)
    assert any('n=3 M={1} subset mode' in note for note in report.notes)


def test_verify_caps_merge_and_errors():
    report = identity_lib.verify('roselle_A', caps={'u': 2}, n_max=9)
    assert report.params['caps'] == {'u': 2, 't': 10, 'q': 10}
    assert 'n_max' not in report.params
    report = identity_lib.verify('class_B', n_max=2, caps={'u': 1})
    assert 'caps' not in report.params
    with pytest.raises(identity_lib.VerificationError, match='unknown identity id'):
        identity_lib.verify('nope')


def test_failed_compare_keeps_first_witness():
    run = identity_lib._Run('demo', {'n_max': 1})
    assert run.compare(1 + term(q=1), 1 + term(q=1))
    assert not run.compare(1 + term(q=2), 1 + term(q=1), n=2)
    assert not run.compare(1, 2, n=3)
    report = run.report(5)
    assert report.status == 'fail'
    assert report.n_checks == 3
    assert report.witness == {'exponents': {'q': 1}, 'lhs': '0', 'rhs': '1', 'n': 2}


def test_report_json():
    report = identity_lib.verify('qbinomial', n_max=2)
    obj = report.to_json_obj()
    assert obj['identity_id'] == 'qbinomial'
    assert obj['status'] == 'pass'
    assert 'witness' not in obj
    json.dumps(obj)
    assert 'elapsed_ms' in obj
    assert 'elapsed_ms' not in report.to_json_obj(with_timing=False)


def test_verify_many_keeps_order():
    reports = identity_lib.verify_many(['poincare', 'lemmino'], n_para=1, n_max=3)
    assert [r.identity_id for r in reports] == ['poincare', 'lemmino']
    assert all(r.passed for r in reports)


def test_given_set_skips_small_ranks():
    report = identity_lib.verify('class_B', M='0,2', n_max=4)
    assert report.passed
    assert report.n_checks > 0
    assert report.notes == ('ranks too small to hold M={0,2} are skipped',)
    with pytest.raises(perm_lib.DescentSetError, match='out of range'):
        identity_lib.verify('class_B', M='0,5', n_max=4)
    with pytest.raises(perm_lib.DescentSetError, match='out of range'):
        identity_lib.verify('class_B', M='0,2', n=2)
