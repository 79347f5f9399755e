import os

import pytest
from sympy.combinatorics import Permutation as SympyPermutation, PermutationGroup as SympyGroup

from tools import InputError, ParseError, LimitError, catalog
from tools.perm import (
    Permutation, CycleType, cycle_type, PermGroup, enumerate_elements, setwise_stabilizer,
    derived_subgroup, is_k_transitive, CosetSpace, conjugacy_classes, abelian_invariants_of_perm_group,
    parse_permutations, parse_pgrp, read_pgrp, format_pgrp
)
from tools.snf import AbelianInvariants

def perm(degree, *cycles):
    return Permutation.from_cycles(degree, cycles, one_based=True)

## Permutation
def test_product_applies_left_factor_first():
    p = perm(3, (1, 2))
    q = perm(3, (2, 3))
    # 0 -> 1 under p, then 1 -> 2 under q
    assert (p * q).images == (2, 0, 1)
    assert (q * p).images == (1, 2, 0)

def test_inverse_power_and_order():
    p = perm(6, (1, 2, 3), (4, 5))
    assert p.order() == 6
    assert (p * p.inverse()).is_identity()
    assert (p ** 6).is_identity()
    assert p ** -1 == p.inverse()
    assert p ** 2 == p * p

def test_cycles_and_string():
    p = perm(5, (3, 5, 4))
    assert p.cycles() == [(2, 4, 3)]
    assert str(p) == "(3 5 4)"
    assert str(Permutation.identity(4)) == "()"
    assert p.fixed_point_count() == 2

def test_invalid_permutations():
    with pytest.raises(InputError):
        Permutation([0, 0, 1])
    with pytest.raises(InputError):
        perm(3, (1, 4))
    with pytest.raises(InputError):
        perm(4, (1, 2), (2, 3))
    with pytest.raises(InputError):
        perm(3, (1, 2)) * perm(4, (1, 2))

def test_cycle_type():
    p = perm(10, (1, 2, 3, 4), (5, 6, 7, 8))
    assert cycle_type(p) == CycleType([4, 4, 1, 1])
    assert str(cycle_type(p)) == "4^2·1^2"
    assert CycleType.from_string("4^2·1^2") == cycle_type(p)
    assert cycle_type(p).order() == 4
    with pytest.raises(InputError):
        CycleType.from_string("4^x")

## PermGroup
@pytest.mark.parametrize("n, order", [(1, 1), (2, 2), (4, 24), (6, 720), (10, 3628800)])
def test_symmetric_group_orders(n, order):
    assert catalog.symmetric_group(n).order == order

def test_membership(s4, a5):
    assert perm(4, (1, 3)) in s4
    assert perm(5, (1, 2, 3)) in a5
    assert perm(5, (1, 2)) not in a5
    with pytest.raises(InputError):
        a5.contains(perm(4, (1, 2)))

def test_chain_is_independent_of_base(a5):
    rebased = PermGroup(a5.generators, 5, base=[4, 3])
    assert rebased.base[:2] == [4, 3]
    assert rebased.order == 60
    with pytest.raises(InputError):
        PermGroup(a5.generators, 5, base=[7])

def test_enumeration_yields_each_element_once(s4):
    elements = list(enumerate_elements(s4))
    assert len(elements) == 24
    assert len(set(elements)) == 24
    assert all(x in s4 for x in elements)

def test_enumeration_limit(s4):
    with pytest.raises(LimitError):
        list(enumerate_elements(s4, limit=10))

def test_trivial_group():
    group = PermGroup([], 3)
    assert group.order == 1
    assert list(enumerate_elements(group)) == [Permutation.identity(3)]
    assert group.is_abelian()

def test_setwise_stabilizer():
    group = catalog.symmetric_group(6)
    stabilizer = setwise_stabilizer(group, [0, 1])
    assert stabilizer.order == 2 * 24
    assert all({g.images[0], g.images[1]} == {0, 1} for g in enumerate_elements(stabilizer))
    assert setwise_stabilizer(group, []).order == 720

def test_derived_subgroup(s4, a5):
    assert derived_subgroup(s4).order == 12
    assert derived_subgroup(a5).order == 60
    assert derived_subgroup(catalog.abelian_group([2, 4])).is_trivial()

def test_k_transitivity(s4, a5):
    assert is_k_transitive(s4, 4)
    assert is_k_transitive(a5, 3)
    assert not is_k_transitive(a5, 4)
    assert not is_k_transitive(catalog.dihedral_group(5), 2)

## Cosets
def test_coset_space_of_a_point_stabilizer(s4):
    stabilizer = PermGroup([perm(4, (1, 2)), perm(4, (1, 2, 3))], 4)
    cosets = CosetSpace(s4, stabilizer)
    assert len(cosets) == 4
    assert cosets.index_of(s4.identity) == 0
    assert cosets.index_of(perm(4, (1, 2))) == 0
    action = PermGroup([cosets.action_of(x) for x in s4.generators], 4)
    assert action.order == 24

def test_coset_space_errors(s4, a5):
    with pytest.raises(InputError):
        CosetSpace(a5, PermGroup([perm(5, (1, 2))], 5))
    with pytest.raises(LimitError):
        CosetSpace(a5, PermGroup([], 5), max_degree=10)

## Classes
@pytest.mark.parametrize("group, count", [
    (catalog.symmetric_group(4), 5),
    (catalog.alternating_group(5), 5),
    (catalog.dihedral_group(4), 5),
    (catalog.cyclic_group(6), 6),
])
def test_class_counts(group, count):
    table = conjugacy_classes(group)
    assert len(table) == count
    assert table.total == group.order
    assert sum(size for _, size in table) == group.order

def test_class_table_lookup(s4):
    table = conjugacy_classes(s4)
    assert table.class_of(s4.identity) == 0
    assert table.size(0) == 1
    transposition = table.class_of(perm(4, (3, 4)))
    assert table.size(transposition) == 6
    assert table.centralizer_order(transposition) == 4

def test_class_of_foreign_element():
    table = conjugacy_classes(catalog.dihedral_group(4))
    with pytest.raises(InputError):
        table.class_of(perm(4, (1, 2, 3)))

def test_class_limit(s4):
    with pytest.raises(LimitError):
        conjugacy_classes(s4, limit=10)

@pytest.mark.parametrize("group, torsion", [
    (catalog.symmetric_group(4), [2]),
    (catalog.alternating_group(5), []),
    (catalog.abelian_group([4, 2, 2]), [2, 2, 4]),
    (catalog.dihedral_group(4), [2, 2]),
    (catalog.cyclic_group(12), [12]),
])
def test_abelian_invariants_of_perm_groups(group, torsion):
    assert abelian_invariants_of_perm_group(group) == AbelianInvariants(torsion)

## Reader
def test_parse_permutations():
    degree, generators = parse_permutations("# comment\ndegree 4\n(1 2)(3 4)\n(1, 2, 3)  # trailing\n()\n")
    assert degree == 4
    assert generators == [perm(4, (1, 2), (3, 4)), perm(4, (1, 2, 3)), Permutation.identity(4)]

@pytest.mark.parametrize("text, line", [
    ("(1 2)\n", 1),
    ("degree x\n", 1),
    ("degree 3\n(1 2\n", 2),
    ("degree 3\n(1 4)\n", 2),
    ("degree 3\n(1 2)(2 3)\n", 2),
])
def test_parse_errors_report_the_line(text, line):
    with pytest.raises(ParseError) as error:
        parse_permutations(text)
    assert error.value.line == line

def test_missing_degree():
    with pytest.raises(ParseError):
        parse_permutations("# nothing\n")

def test_format_and_parse_agree(a5):
    group = parse_pgrp(format_pgrp(a5, comment="A5"))
    assert group.generators == a5.generators
    assert group.order == 60

def test_read_pgrp(data_dir):
    group = read_pgrp(os.path.join(data_dir, "s4.pgrp"))
    assert group.name == "s4"
    assert group.order == 24
    with pytest.raises(InputError):
        read_pgrp(os.path.join(data_dir, "missing.pgrp"))

def _sympy_group(group):
    return SympyGroup([SympyPermutation(list(x.images)) for x in group.generators])

@pytest.mark.parametrize("group", [
    catalog.symmetric_group(6), catalog.alternating_group(7), catalog.dihedral_group(9), catalog.affine_z8(),
    catalog.build_q8abc(1, 5, 3), catalog.abelian_group([4, 6]),
], ids=lambda x: x.name)
def test_orders_match_sympy(group):
    oracle = _sympy_group(group)
    assert group.order == oracle.order()
    assert derived_subgroup(group).order == oracle.derived_subgroup().order()
    assert group.is_abelian() == oracle.is_abelian

def test_abelian_invariants_of_all_small_abelian_groups():
    for order in range(1, 65):
        for factors in catalog.abelian_groups(order):
            group = catalog.abelian_group(factors)
            assert group.order == order
            assert abelian_invariants_of_perm_group(group) == AbelianInvariants(factors)
