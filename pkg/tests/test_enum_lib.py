import numpy as np
import pytest

import NegStat_perm_lib as perm_lib
import NegStat_enum_lib as enum_lib
from NegStat_perm_lib import SignedPermutation, DescentSet
from NegStat_enum_lib import EnumerationError


@pytest.mark.parametrize('group, n', [('A', 3), ('A', 4), ('B', 1), ('B', 3), ('D', 1), ('D', 2), ('D', 4)])
def test_iter_group_counts_and_order(group, n):
    elements = list(enum_lib.iter_group(group, n))
    assert len(elements) == enum_lib.group_order(group, n)
    assert len(set(elements)) == len(elements)
    assert elements == sorted(elements)
    w = enum_lib.group_array(group, n)
    assert [tuple(r) for r in w.tolist()] == [p.window for p in elements]


def test_iter_group_prefix_and_errors():
    assert [p.window for p in enum_lib.iter_group('B', 2, prefix=(-2,))] == [(-2, -1), (-2, 1)]
    with pytest.raises(EnumerationError, match='rank'):
        list(enum_lib.iter_group('B', 0))
    with pytest.raises(EnumerationError, match='group'):
        list(enum_lib.iter_group('C', 2))


def test_group_order():
    assert enum_lib.group_order('A', 4) == 24
    assert enum_lib.group_order('B', 4) == 384
    assert enum_lib.group_order('D', 4) == 192
    assert enum_lib.group_order('D', 1) == 1


def test_inverse_array_matches_inverse():
    w = enum_lib.group_array('B', 3)
    inv = enum_lib.inverse_array(w)
    for row, irow in zip(w.tolist(), inv.tolist()):
        assert perm_lib.inverse(SignedPermutation(row)).window == tuple(irow)


@pytest.mark.parametrize('flavor', ['Des', 'Des_B', 'Des_D'])
def test_descent_mask_array_matches_positions(flavor):
    w = enum_lib.group_array('B', 3)
    masks = enum_lib.descent_mask_array(w, flavor)
    for row, m in zip(w.tolist(), masks.tolist()):
        d = perm_lib.descent_positions(SignedPermutation(row), flavor)
        assert m == enum_lib.set_mask(d)


def test_descent_mask_array_negative_flavors():
    w = np.array([[-3, 1, -6, 2, -4, -5]])
    assert enum_lib.descent_mask_array(w, 'NDes')[0] == enum_lib.set_mask([2, 3, 4, 5, 6])
    w = np.array([[-4, 1, 3, -5, -2, -6]])
    assert enum_lib.descent_mask_array(w, 'DDes')[0] == enum_lib.set_mask([1, 3, 4, 5])
    with pytest.raises(EnumerationError, match='flavor'):
        enum_lib.descent_mask_array(w, 'Foo')


def test_quotient_increasing():
    B2 = [p.window for p in enum_lib.quotient_increasing('B', 2)]
    assert B2 == [(-2, -1), (-2, 1), (-1, 2), (1, 2)]
    D3 = list(enum_lib.quotient_increasing('D', 3))
    assert len(D3) == 4
    assert all(perm_lib.is_even_signed(p) for p in D3)
    with pytest.raises(EnumerationError):
        list(enum_lib.quotient_increasing('A', 2))


def test_factor_quotient():
    p = perm_lib.parse_window('[-3,1,-6,2,-4,-5]')
    u, sigma = enum_lib.factor_quotient(p)
    assert u.window == (-6, -5, -4, -3, 1, 2)
    assert sigma.window == (4, 5, 1, 6, 3, 2)
    assert perm_lib.compose(u, sigma) == p
    with pytest.raises(EnumerationError, match='not in D_2'):
        enum_lib.factor_quotient(SignedPermutation([-1, 2]), 'D')


def test_class_spec_validation():
    spec = enum_lib.class_spec('B', 3, [0, 2])
    assert spec.flavor == 'Des_B'
    assert spec.M == DescentSet(3, [0, 2])
    assert enum_lib.class_spec('D', 3, [1], flavor='Des').flavor == 'Des'
    with pytest.raises(EnumerationError, match='does not match'):
        enum_lib.class_spec('B', 3, [1], flavor='Des_D')
    with pytest.raises(EnumerationError, match='0 is not a descent'):
        enum_lib.class_spec('B', 3, [0], flavor='Des')
    with pytest.raises(EnumerationError, match='mode'):
        enum_lib.class_spec('B', 3, [1], mode='exactly')
    with pytest.raises(EnumerationError, match='rank 2'):
        enum_lib.class_spec('B', 3, DescentSet(2, [1]))


def test_small_classes():
    spec = enum_lib.class_spec('B', 2, [0])
    assert [p.window for p in enum_lib.descent_class_filter(spec)] == \
        [(-2, -1), (-1, 2), (1, 2), (2, -1)]
    spec = enum_lib.class_spec('D', 2, [1])
    assert [p.window for p in enum_lib.descent_class_filter(spec)] == [(1, 2), (2, 1)]


def test_group_table_select_matches_filter():
    table = enum_lib.GroupTable('D', 3)
    for M in perm_lib.all_descent_sets(3):
        for mode in enum_lib.MODES:
            spec = enum_lib.class_spec('D', 3, M, mode)
            assert table.elements(table.select(M, mode)) == enum_lib.descent_class_filter(spec)
    assert len(table.stats['len_D']) == 24


def test_exact_classes_partition_the_group():
    table = enum_lib.GroupTable('B', 3)
    rows = np.concatenate([table.select(M, 'exact') for M in perm_lib.all_descent_sets(3)])
    assert sorted(rows.tolist()) == list(range(48))


def test_blocks_B_small():
    blocks = list(enum_lib.descent_class_blocks_B(2, DescentSet(2, [0])))
    assert [(rs, b.sequences) for rs, b in blocks] == [
        ((0,), ((1, 2),)), ((1,), ((-1,), (2,))), ((2,), ((-2, -1),))]
    assert str(blocks[1][1]) == '(-1),(2)'
    assert len(list(enum_lib.descent_class_blocks_B(6, DescentSet(6, [0, 2])))) == 15


def test_blocks_A():
    (rs, block), = enum_lib.descent_class_blocks_A(5, DescentSet(5, [2, 3]))
    assert block.sequences == ((1, 2), (3,), (4, 5))
    with pytest.raises(EnumerationError):
        list(enum_lib.descent_class_blocks_A(3, DescentSet(3, [0])))


def test_check_block():
    enum_lib.check_block(enum_lib.make_block([(1,), (-3, -2)]), 3)
    with pytest.raises(EnumerationError, match='does not cover'):
        enum_lib.check_block(enum_lib.make_block([(1,), (3,)]), 3)
    with pytest.raises(EnumerationError, match='not increasing'):
        enum_lib.check_block(enum_lib.make_block([(2, 1), (3,)]), 3)


def test_expand_shuffles():
    block = enum_lib.make_block([(1,), (2, 3)])
    assert [p.window for p in enum_lib.expand_shuffles(block)] == [(1, 2, 3), (2, 1, 3), (2, 3, 1)]


@pytest.mark.parametrize('group, n', [('A', 4), ('B', 3), ('B', 4), ('D', 2), ('D', 3), ('D', 4)])
def test_constructive_class_matches_filter(group, n):
    for M in perm_lib.all_descent_sets(n, allow_zero=(group != 'A')):
        spec = enum_lib.class_spec(group, n, M)
        built = enum_lib.constructive_class(group, n, M, check_unique=True)
        assert built == enum_lib.descent_class_filter(spec), (group, n, str(M))


def test_blocks_D_cases():
    tags = {tag for tag, _, _ in enum_lib.descent_class_blocks_D(4, DescentSet(4, [0, 2]))}
    assert tags == {'case1'}
    tags = {tag for tag, _, _ in enum_lib.descent_class_blocks_D(4, DescentSet(4, [2]))}
    assert tags == {'case2a', 'case2b'}
    tags = {tag for tag, _, _ in enum_lib.descent_class_blocks_D(4, DescentSet(4, [1, 3]))}
    assert tags == {'case3a', 'case3b', 'case3c'}


def test_bar_map_splits_class_with_zero():
    M = DescentSet(3, [0, 2])
    B_M = set(enum_lib.descent_class_filter(enum_lib.class_spec('B', 3, M)))
    D_M = enum_lib.descent_class_filter(enum_lib.class_spec('D', 3, M))
    bar = [enum_lib.bar_map(p) for p in D_M]
    assert set(D_M).isdisjoint(bar)
    assert set(D_M) | set(bar) == B_M
    assert enum_lib.bar_map(SignedPermutation([2, -1])) == SignedPermutation([-2, -1])


def test_phi_map():
    M = DescentSet(3, [2])
    B_M = enum_lib.descent_class_filter(enum_lib.class_spec('B', 3, M))
    D_M = enum_lib.descent_class_filter(enum_lib.class_spec('D', 3, M))
    images = [enum_lib.phi_map(p, M) for p in B_M]
    assert sorted(images) == D_M
    for p, x in zip(B_M, images):
        assert perm_lib.statistics(p).len_D == perm_lib.statistics(x).len_D
    with pytest.raises(EnumerationError, match='0,1 not in M'):
        enum_lib.phi_map(perm_lib.identity(3), DescentSet(3, [1]))


def test_chain_blocks_cover_class():
    M = DescentSet(4, [1, 3])
    B_M = enum_lib.descent_class_filter(enum_lib.class_spec('B', 4, M))
    union = [p for i in range(1, M.m2+1)
             for b in enum_lib.chain_blocks(4, M, i) for p in enum_lib.expand_shuffles(b)]
    assert len(union) == len(set(union))
    assert sorted(union) == B_M
    with pytest.raises(EnumerationError, match='out of range'):
        list(enum_lib.chain_blocks(4, M, 4))
    with pytest.raises(EnumerationError, match='1 in M'):
        list(enum_lib.chain_blocks(4, DescentSet(4, [2]), 1))


def test_split_case():
    assert enum_lib.split_case(DescentSet(3, [0, 1])) == 1
    assert enum_lib.split_case(DescentSet(3, [2])) == 2
    assert enum_lib.split_case(DescentSet(3)) == 2
    assert enum_lib.split_case(DescentSet(3, [1, 2])) == 3
