import pytest

from tools import Verdict, Format, InputError, LimitError, catalog
from tools.config import RunConfig
from tools.perm import Permutation, PermGroup
from tools.fp import Word, parse_presentation, todd_coxeter, HomomorphismSpec
from tools.gassmann import Action
from tools.obstruction import (
    QuotientMap, GroupHandle, s_of_group, CsReport, csinv, CsVerification, verify_cs_finite, check_cs_fp,
    find_s_distinguishing_pairs, s16_pair, s16_demo, ambient_growth
)

def perm(degree, *cycles):
    return Permutation.from_cycles(degree, cycles, one_based=True)

@pytest.fixture
def affine_presentation():
    # generators in the order of catalog.affine_z8: x -> 3x, x -> 5x, x -> x + 1
    presentation = parse_presentation("< a, b, t | a^2, b^2, [a, b], t^8, a*t*a^-1 = t^3, b*t*b^-1 = t^5 >")
    presentation.order = 32
    return presentation

@pytest.fixture
def s4_onto_s3(s4):
    klein = PermGroup([perm(4, (1, 2), (3, 4)), perm(4, (1, 3), (2, 4))], 4)
    action = Action.on_cosets(s4, klein)
    quotient = PermGroup(action.generator_images(), action.degree)
    return QuotientMap(s4, quotient, quotient.generators)

## S
def test_s_of_permutation_groups(s4, q8):
    assert s_of_group(GroupHandle(group=catalog.abelian_group([4, 2, 2]))) == 1
    assert s_of_group(GroupHandle(group=catalog.build_16gamma2c1())) == 0
    assert s_of_group(GroupHandle(group=s4)) == 1
    assert s_of_group(GroupHandle(group=q8)) == 0

def test_s_of_presented_groups():
    presentation = catalog.gamma_presentation()
    assert s_of_group(GroupHandle(presentation=presentation)) == 0
    table = todd_coxeter(presentation, [Word.generator(2)])
    handle = GroupHandle(presentation=presentation, table=table)
    assert table.num_cosets == 4
    assert "index 4 subgroup" in handle.describe()
    # <c> is cyclic of order 4
    assert handle.abelianization().order() == 4

def test_group_handle_validation(s4):
    with pytest.raises(InputError):
        GroupHandle()
    with pytest.raises(InputError):
        GroupHandle(group=s4, presentation=catalog.symmetric_presentation(4))
    with pytest.raises(InputError):
        GroupHandle(group=s4, table=todd_coxeter(catalog.cyclic_presentation(2)))

## Quotient maps
def test_quotient_map_preimages(s4_onto_s3):
    phi = s4_onto_s3
    assert phi.target.order == 6
    assert phi.preimage(PermGroup([], 6)).order == 4
    assert phi.preimage(phi.target).order == 24
    involution = next(x for x in phi.target.generators if x.order() == 2)
    preimage = phi.preimage(PermGroup([involution], 6))
    assert preimage.order == 8
    assert preimage.is_subgroup_of(phi.source)

def test_identity_quotient_map(s4):
    phi = QuotientMap.identity(s4)
    assert phi.is_identity()
    subgroup = PermGroup([perm(4, (1, 2))], 4)
    assert phi.preimage(subgroup) is subgroup

def test_quotient_map_validation(s4, s3):
    with pytest.raises(InputError):
        QuotientMap(s4, s3, [perm(3, (1, 2)), s3.identity])
    with pytest.raises(InputError):
        QuotientMap(s4, s3, [s3.identity, s3.identity])
    with pytest.raises(InputError):
        QuotientMap(s4, s3, [perm(3, (1, 2))])
    with pytest.raises(InputError):
        QuotientMap.identity(s4).preimage(PermGroup([perm(5, (1, 2))], 5))

## csinv
def test_s16_demo():
    report = s16_demo()
    assert report.certificate.mode == "cycle_type"
    assert report.certificate.entries == [("1^16", 1, 1), ("2^8", 7, 7), ("4^4", 8, 8)]
    assert (report.s_h, report.s_k, report.csinv) == (1, 0, 1)
    assert report.verdict == Verdict.obstructed

def test_s16_report_json():
    report = s16_demo()
    data = report.export(Format.json)
    assert set(data) == {"pi", "phi", "G", "H", "K", "certificate", "sH", "sK", "csinv", "verdict", "budget_notes"}
    assert data["phi"] == "identity"
    assert data["verdict"] == "obstructed"
    assert CsReport.from_json(data).csinv == 1

    data["csinv"] = 0
    with pytest.raises(InputError):
        CsReport.from_json(data)

def test_s16_report_text():
    text = s16_demo().dumps(Format.text)
    assert "S(H) = 1\nS(K) = 0\ncsinv = 1" in text
    assert text.endswith("verdict: obstructed")

@pytest.mark.parametrize("n", [16, 17, 18, 19, 20])
def test_ambient_growth(n):
    report = ambient_growth(n)
    assert report.certificate.verdict
    assert [x[1:] for x in report.certificate.entries] == [(1, 1), (7, 7), (8, 8)]
    assert (report.s_h, report.s_k, report.csinv) == (1, 0, 1)
    assert report.verdict == Verdict.obstructed
    assert report.triple[0].startswith(f"S{n}")

def test_s16_pair_degree():
    group, h, k = s16_pair(17)
    assert group.order == catalog.symmetric_group(17).order
    assert h.degree == k.degree == 17
    with pytest.raises(InputError):
        s16_pair(15)

def test_csinv_of_the_affine_pair(affine_pair):
    group, h, k = affine_pair
    report = csinv(group, "identity", group, h, k)
    assert (report.s_h, report.s_k, report.csinv) == (0, 0, 0)
    assert report.verdict == Verdict.consistent

def test_csinv_requires_almost_conjugate_subgroups(s4):
    with pytest.raises(InputError):
        csinv(s4, "identity", s4, PermGroup([perm(4, (1, 2))], 4), PermGroup([perm(4, (1, 2), (3, 4))], 4))

def test_csinv_identity_requires_pi_equal_to_g(affine_pair, s4):
    group, h, k = affine_pair
    with pytest.raises(InputError):
        csinv(catalog.symmetric_group(8), "identity", group, h, k)
    with pytest.raises(InputError):
        csinv(group, QuotientMap.identity(s4), group, h, k)

def test_csinv_through_a_presentation(affine_pair, affine_presentation):
    group, h, k = affine_pair
    phi = HomomorphismSpec(affine_presentation, group, list(group.generators))
    assert phi.injective
    report = csinv(affine_presentation, phi, group, h, k)
    assert report.csinv == 0
    assert report.budget_notes == ""
    assert report.export(Format.json)["phi"] == {"a": str(group.generators[0]), "b": str(group.generators[1]), "t": str(group.generators[2])}

def test_csinv_falls_back_for_injective_maps(affine_pair, affine_presentation):
    group, h, k = affine_pair
    phi = HomomorphismSpec(affine_presentation, group, list(group.generators))
    report = csinv(affine_presentation, phi, group, h, k, RunConfig(max_coset_degree=4))
    assert report.csinv == 0
    assert report.budget_notes == "index too large; S computed on the isomorphic permutation subgroup"

def test_csinv_index_too_large(affine_pair):
    group, h, k = affine_pair
    free = parse_presentation("< a, b, t | >")
    phi = HomomorphismSpec(free, group, list(group.generators))
    with pytest.raises(LimitError):
        csinv(free, phi, group, h, k, RunConfig(max_coset_degree=4))

def test_csinv_of_a_free_group(affine_pair):
    # preimages of index 8 in a free group of rank 3 are free of rank 17
    group, h, k = affine_pair
    free = parse_presentation("< a, b, t | >")
    report = csinv(free, HomomorphismSpec(free, group, list(group.generators)), group, h, k)
    assert (report.s_h, report.s_k) == (0, 0)

## CS verification
def test_abelian_groups_satisfy_cs():
    for order in range(1, 65):
        for factors in catalog.abelian_groups(order):
            verification = verify_cs_finite(catalog.abelian_group(factors))
            assert verification.verdict == Verdict.satisfied
            assert verification.notes

@pytest.mark.parametrize("group", [
    catalog.symmetric_group(3), catalog.symmetric_group(4), catalog.quaternion_group(), catalog.dihedral_group(4)
], ids=lambda x: x.name)
def test_small_groups_satisfy_cs(group):
    verification = verify_cs_finite(group)
    assert verification.verdict == Verdict.satisfied
    assert verification.normal_subgroups > 0
    assert verification.witnesses == []

@pytest.mark.slow
@pytest.mark.parametrize("a, b, c", [(1, 1, 1), (1, 3, 1), (1, 5, 1), (2, 3, 1), (1, 5, 3)])
def test_q8abc_satisfies_cs(a, b, c):
    assert verify_cs_finite(catalog.build_q8abc(a, b, c)).verdict == Verdict.satisfied

def test_verification_limit(s4):
    verification = verify_cs_finite(s4, RunConfig(max_subgroup_order=10))
    assert verification.verdict == Verdict.unknown
    assert verification.notes

def test_verification_json(s4):
    verification = verify_cs_finite(s4)
    data = verification.export(Format.json)
    assert data["verdict"] == Verdict.satisfied.value
    assert data["normal_subgroups"] == 4
    assert data["pairs_examined"] == 0
    assert CsVerification.from_json(data).verdict == Verdict.satisfied

def test_affine_group_verification(affine_pair):
    group, _, _ = affine_pair
    verification = verify_cs_finite(group)
    assert verification.verdict in (Verdict.satisfied, Verdict.obstructed)
    assert len(verification.reports) > 0
    assert all(x.certificate.verdict for x in verification.reports)

def test_check_cs_fp_with_given_maps(affine_pair, affine_presentation):
    group, h, k = affine_pair
    phi = HomomorphismSpec(affine_presentation, group, list(group.generators))
    verification = check_cs_fp(affine_presentation, group, homs=[phi], pairs=[(h, k)])
    assert verification.verdict == Verdict.consistent
    assert verification.normal_subgroups == 1
    assert len(verification.reports) == 1

def test_check_cs_fp_abelian_target():
    verification = check_cs_fp(catalog.cyclic_presentation(4), catalog.cyclic_group(4))
    assert verification.verdict == Verdict.consistent
    assert verification.notes == ["abelian target: no non-conjugate Gassmann pairs"]

def test_check_cs_fp_without_pairs(s4):
    verification = check_cs_fp(catalog.symmetric_presentation(4), s4)
    assert verification.verdict == Verdict.consistent
    assert verification.reports == []

def test_check_cs_fp_budget(affine_pair, affine_presentation):
    group, h, k = affine_pair
    verification = check_cs_fp(affine_presentation, group, RunConfig(hom_budget=10), pairs=[(h, k)])
    assert verification.verdict == Verdict.unknown

def test_s_distinguishing_pairs(affine_pair, q8):
    assert find_s_distinguishing_pairs(q8) == []
    group, _, _ = affine_pair
    assert all(x.csinv == 1 for x in find_s_distinguishing_pairs(group))

def test_check_cs_fp_keeps_reports_completed_before_a_limit(affine_pair):
    group, h, k = affine_pair
    free = parse_presentation("< a, b, t | >")
    phi = HomomorphismSpec(free, group, list(group.generators))
    trivial = PermGroup([], group.degree)
    verification = check_cs_fp(free, group, RunConfig(max_coset_degree=8), homs=[phi], pairs=[(h, k), (trivial, trivial)])
    assert verification.verdict == Verdict.unknown
    assert len(verification.reports) == 1
    assert verification.reports[0].csinv == 0
    assert verification.normal_subgroups == 1
    assert "preimage realization infeasible: index too large" in verification.notes

def test_an_obstruction_found_before_a_limit_stands():
    group, h, k = s16_pair(16)
    presentation = catalog.symmetric_presentation(16)
    generators = list(group.generators)
    homs = [
        HomomorphismSpec(presentation, group, generators),
        HomomorphismSpec(presentation, group, generators, injective=False),
    ]
    verification = check_cs_fp(presentation, group, homs=homs, pairs=[(h, k)])
    assert verification.verdict == Verdict.obstructed
    assert len(verification.reports) == 1
    assert verification.normal_subgroups == 2
    assert verification.notes == ["preimage realization infeasible: index too large"]

def test_check_cs_fp_on_the_symmetric_group_of_degree_16():
    group, h, k = s16_pair(16)
    presentation = catalog.symmetric_presentation(16)
    phi = HomomorphismSpec(presentation, group, list(group.generators))
    assert phi.injective
    verification = check_cs_fp(presentation, group, homs=[phi], pairs=[(h, k)])
    assert verification.verdict == Verdict.obstructed
    assert len(verification.reports) == 1
    report = verification.reports[0]
    assert (report.s_h, report.s_k, report.csinv) == (1, 0, 1)
    assert report.certificate.mode == "cycle_type"
    assert report.budget_notes == "index too large; S computed on the isomorphic permutation subgroup"
