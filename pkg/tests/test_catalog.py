import pytest
from sympy import totient

from tools import InputError, LimitError, catalog
from tools.perm import abelian_invariants_of_perm_group, is_k_transitive
from tools.snf import AbelianInvariants, abelian_invariants
from tools.fp import todd_coxeter, abelianized_relation_matrix, coset_action, coset_table_from_hom, HomomorphismSpec
from tools.gassmann import order_statistics, enumerate_subgroups
from tools.obstruction import GroupHandle, s_of_group

CATALOG = catalog.finite_catalog()

def test_catalog_is_sorted_by_order():
    orders = [x.group.order for x in CATALOG]
    assert orders == sorted(orders)
    assert {x.name for x in CATALOG} >= {"C6", "S3", "Q8", "16Γ2c1", "AGL(1,Z/8)", "A5", "Q(8,5,3)"}

@pytest.mark.parametrize("entry", [x for x in CATALOG if x.presentation is not None], ids=lambda x: x.name)
def test_presentation_and_permutation_group_agree(entry):
    presentation = entry.presentation
    assert todd_coxeter(presentation).num_cosets == entry.group.order
    if presentation.order is not None:
        assert presentation.order == entry.group.order
    matrix = abelianized_relation_matrix(presentation)
    assert abelian_invariants(matrix, presentation.num_generators) == abelian_invariants_of_perm_group(entry.group)

@pytest.mark.parametrize("order, groups", [
    (1, [[]]),
    (8, [[2, 2, 2], [2, 4], [8]]),
    (12, [[2, 6], [12]]),
    (16, [[2, 2, 2, 2], [2, 2, 4], [2, 8], [4, 4], [16]]),
])
def test_abelian_groups(order, groups):
    assert catalog.abelian_groups(order) == groups

def test_abelian_group():
    group = catalog.abelian_group([4, 2, 2])
    assert group.name == "Z4+Z2+Z2"
    assert group.order == 16
    assert group.is_abelian()
    assert catalog.abelian_group([]).order == 1
    with pytest.raises(InputError):
        catalog.abelian_group([0])

def test_small_families():
    assert catalog.dihedral_group(4).name == "D8"
    assert catalog.dihedral_group(4).order == 8
    assert catalog.cyclic_group(7).order == 7
    assert catalog.alternating_group(6).order == 360
    assert is_k_transitive(catalog.alternating_group(6), 4)
    with pytest.raises(InputError):
        catalog.dihedral_group(2)
    with pytest.raises(InputError):
        catalog.symmetric_group(25)

def test_von_dyck_orders():
    assert catalog.von_dyck_presentation(2, 3, 5).order == 60
    assert catalog.von_dyck_presentation(2, 3, 4).order == 24
    assert catalog.von_dyck_presentation(2, 3, 6).order is None

def test_gamma_realization():
    group = catalog.build_16gamma2c1()
    assert group.order == 16
    assert group.degree == 16
    assert not group.is_abelian()
    assert order_statistics(group).counts == {1: 1, 2: 7, 4: 8}

@pytest.mark.parametrize("a, b, c, s, t", [
    (1, 5, 3, 11, 4),
    (1, 3, 1, 1, 2),
    (1, 1, 1, 1, 1),
])
def test_q8abc_exponents(a, b, c, s, t):
    assert catalog._q8abc_exponents(a, b, c) == (s, t)

@pytest.mark.parametrize("a, b, c", [(1, 1, 1), (1, 3, 1), (2, 3, 1), (1, 5, 1), (1, 5, 3)])
def test_q8abc_orders(a, b, c):
    group = catalog.build_q8abc(a, b, c)
    assert group.order == 8 * a * b * c
    assert not group.is_abelian()

@pytest.mark.parametrize("a, b, c", [(1, 3, 3), (1, 2, 1), (2, 1, 2), (0, 1, 1)])
def test_q8abc_validation(a, b, c):
    with pytest.raises(InputError):
        catalog.q8abc_presentation(a, b, c)

def test_q8abc_limit():
    with pytest.raises(LimitError):
        catalog.build_q8abc(1, 5, 3, limit=100)

def test_quaternion_group(q8):
    assert q8.name == "Q8"
    assert order_statistics(q8).counts == {1: 1, 2: 1, 4: 6}

def test_affine_pair(affine_pair):
    group, h, k = affine_pair
    assert group.order == 32
    assert h.order == k.order == 4
    assert h.is_subgroup_of(group) and k.is_subgroup_of(group)

def _presented(entries):
    for entry in entries:
        if entry.presentation is None:
            continue
        marks = [pytest.mark.slow] if entry.group.order > 24 else []
        yield pytest.param(entry, id=entry.name, marks=marks)

@pytest.mark.parametrize("entry", _presented(CATALOG))
def test_s_agrees_on_both_paths_for_every_subgroup(entry):
    presentation = entry.presentation
    # the regular coset action lists the generator images in presentation order
    regular = coset_action(todd_coxeter(presentation))
    assert regular.order == entry.group.order
    phi = HomomorphismSpec(presentation, regular, list(regular.generators))
    for subgroup in enumerate_subgroups(regular):
        table = coset_table_from_hom(presentation, phi, subgroup)
        assert table.num_cosets * subgroup.order == regular.order
        presented = GroupHandle(presentation=presentation, table=table)
        permutation = GroupHandle(group=subgroup)
        assert presented.abelianization() == permutation.abelianization()
        assert s_of_group(presented) == s_of_group(permutation)

@pytest.mark.parametrize("n", [2, 7, 8, 12, 16, 41])
def test_affine_groups(n):
    group = catalog.affine_group(n)
    assert group.order == n * totient(n)
    assert group.name == f"AGL(1,Z/{n})"
    assert is_k_transitive(group, 1)
    with pytest.raises(InputError):
        catalog.affine_group(1)

def test_affine_group_of_z8_matches_the_named_group():
    assert catalog.affine_group(8) == catalog.affine_z8()

def test_direct_products():
    group = catalog.direct_product(catalog.symmetric_group(3), catalog.symmetric_group(3))
    assert group.name == "S3xS3"
    assert (group.degree, group.order) == (6, 36)
    assert abelian_invariants_of_perm_group(group) == AbelianInvariants([2, 2])

    group = catalog.direct_product(catalog.dihedral_group(4), catalog.cyclic_group(2))
    assert group.order == 16
    assert abelian_invariants_of_perm_group(group) == AbelianInvariants([2, 2, 2])
    assert catalog.direct_product(catalog.cyclic_group(5)).order == 5
    with pytest.raises(InputError):
        catalog.direct_product()

def test_random_subgroups_are_reproducible():
    ambient = catalog.affine_group(16)
    first = catalog.random_subgroups(ambient, 5, seed=7)
    second = catalog.random_subgroups(ambient, 5, seed=7)
    assert len(first) == 5
    assert [x.generators for x in first] == [x.generators for x in second]
    assert all(x.is_subgroup_of(ambient) for x in first)
    assert first[0].name == "AGL(1,Z/16).r7.0"

def test_catalog_limits():
    assert max(x.group.order for x in CATALOG) <= 2000
    assert max(x.group.order for x in CATALOG) > 240
    small = catalog.finite_catalog(240)
    assert all(x.group.order <= 240 for x in small)
    assert len(small) > 30
