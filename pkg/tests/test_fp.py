import os

import pytest

from tools import InputError, ParseError, LimitError, catalog
from tools.perm import Permutation, PermGroup
from tools.snf import AbelianInvariants, abelian_invariants
from tools.fp import (
    Word, Presentation, parse_presentation, parse_words, read_presentation, todd_coxeter, coset_action,
    coset_table_from_hom, schreier_generators, reidemeister_schreier, abelianized_relation_matrix,
    HomomorphismSpec, hom_search
)

def relation_invariants(presentation):
    return abelian_invariants(abelianized_relation_matrix(presentation), presentation.num_generators)

## Words
def test_words_are_freely_reduced():
    assert Word([1, -1, 2]).letters == (2,)
    assert Word([1, 2, -2, -1]).letters == ()
    word = Word([1, 2])
    assert (word * word.inverse()).letters == ()
    assert (word ** -2).letters == (-2, -1, -2, -1)

def test_word_format():
    names = ["a", "b"]
    assert Word([1, 1, -2]).format(names) == "a^2*b^-1"
    assert Word().format(names) == "1"
    assert Word.generator(1, -3).format(names) == "b^-3"
    assert Word([1, 2, -1]).exponent_sum(0) == 0

## Grammar
def test_parse_presentation():
    presentation = parse_presentation("< a, b | a^2, b^3, (a*b)^5 >")
    assert presentation.generator_names == ["a", "b"]
    assert [presentation.format_word(x) for x in presentation.relators] == ["a^2", "b^3", "a*b*a*b*a*b*a*b*a*b"]

def test_relations_and_commutators():
    presentation = parse_presentation("< x, y | x^2 = y^2, [x, y], x*y^-1 = 1 >")
    x, y = Word.generator(0), Word.generator(1)
    assert presentation.relators == [x * x * y.inverse() * y.inverse(), x.inverse() * y.inverse() * x * y, x * y.inverse()]

def test_comments_and_trivial_relators_are_dropped():
    presentation = parse_presentation("# free group\n< a, b | a*a^-1 >")
    assert presentation.relators == []

@pytest.mark.parametrize("text", [
    "< a, b | c^2 >",
    "< a, a | a^2 >",
    "< a | a^0 >",
    "< a | a^2",
    "a, b | a",
])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_presentation(text)

def test_parse_error_position():
    with pytest.raises(ParseError) as error:
        parse_presentation("< a, b |\n  a^2, q >")
    assert error.value.line == 2

def test_parse_words():
    words = parse_words("a, b^2*a, [a, b]", ["a", "b"])
    assert len(words) == 3
    assert words[1].format(["a", "b"]) == "b^2*a"
    with pytest.raises(ParseError):
        parse_words("c", ["a", "b"])

def test_presentation_validation():
    with pytest.raises(InputError):
        Presentation(["a", "2b"])
    with pytest.raises(InputError):
        Presentation(["a"], [Word([2])])

def test_read_presentation(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "von_dyck_235.fp"))
    assert presentation.name == "von_dyck_235"
    assert presentation.num_generators == 2
    with pytest.raises(InputError):
        read_presentation(os.path.join(data_dir, "missing.fp"))

## Todd-Coxeter
def test_von_dyck_index_of_a(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "von_dyck_235.fp"))
    table = todd_coxeter(presentation, parse_words("a", presentation.generator_names))
    assert table.num_cosets == 30
    assert table.verify()

def test_von_dyck_order(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "von_dyck_235.fp"))
    table = todd_coxeter(presentation)
    assert table.num_cosets == 60
    assert coset_action(table).order == 60

@pytest.mark.parametrize("name, order", [("q8.fp", 8), ("16gamma2c1.fp", 16)])
def test_shipped_presentation_orders(data_dir, name, order):
    presentation = read_presentation(os.path.join(data_dir, name))
    table = todd_coxeter(presentation)
    assert table.num_cosets == order
    assert coset_action(table).order == order

@pytest.mark.parametrize("n", [3, 4, 5])
def test_symmetric_presentations(n):
    presentation = catalog.symmetric_presentation(n)
    assert todd_coxeter(presentation).num_cosets == presentation.order

def test_infinite_group_hits_the_limit(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "free2.fp"))
    with pytest.raises(LimitError):
        todd_coxeter(presentation, max_cosets=200)

def test_finite_index_in_a_free_group(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "free2.fp"))
    table = todd_coxeter(presentation, parse_words("a, b^2, b*a*b^-1", presentation.generator_names))
    assert table.num_cosets == 2
    subgroup = reidemeister_schreier(presentation, table)
    assert subgroup.num_generators == 3
    assert relation_invariants(subgroup) == AbelianInvariants([], 3)

def test_todd_coxeter_validation():
    presentation = catalog.cyclic_presentation(4)
    with pytest.raises(InputError):
        todd_coxeter(presentation, max_cosets=0)
    with pytest.raises(InputError):
        todd_coxeter(presentation, [Word([2])])

## Rewriting
def test_abelianized_relation_matrix(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "16gamma2c1.fp"))
    assert relation_invariants(presentation) == AbelianInvariants([2, 4])
    assert relation_invariants(read_presentation(os.path.join(data_dir, "free2.fp"))) == AbelianInvariants([], 2)

def test_reidemeister_schreier_of_a_normal_subgroup():
    # the rotations of D10 form Z5
    presentation = catalog.dihedral_presentation(5)
    table = todd_coxeter(presentation, parse_words("r", presentation.generator_names))
    assert table.num_cosets == 2
    assert relation_invariants(reidemeister_schreier(presentation, table)) == AbelianInvariants([5])

def test_reidemeister_schreier_of_the_quaternion_center(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "q8.fp"))
    table = todd_coxeter(presentation, parse_words("x^2", presentation.generator_names))
    assert table.num_cosets == 4
    assert relation_invariants(reidemeister_schreier(presentation, table)) == AbelianInvariants([2])

def test_schreier_generators_fix_the_subgroup_coset(data_dir):
    presentation = read_presentation(os.path.join(data_dir, "von_dyck_235.fp"))
    table = todd_coxeter(presentation, parse_words("a", presentation.generator_names))
    generators = schreier_generators(table)
    assert generators
    assert all(table.act(0, x) == 0 for x in generators)

def test_reidemeister_schreier_rejects_foreign_tables():
    table = todd_coxeter(catalog.cyclic_presentation(4))
    with pytest.raises(InputError):
        reidemeister_schreier(catalog.cyclic_presentation(6), table)

## Homomorphisms
def test_homomorphisms_from_the_free_group_onto_s3(data_dir, s3):
    presentation = read_presentation(os.path.join(data_dir, "free2.fp"))
    everything = hom_search(presentation, s3)
    surjections = hom_search(presentation, s3, surjective_only=True)
    assert everything.exhaustive and surjections.exhaustive
    assert len(everything) == 36
    assert len(surjections) == 18

def test_automorphisms_of_q8(data_dir, q8):
    presentation = read_presentation(os.path.join(data_dir, "q8.fp"))
    assert len(hom_search(presentation, q8, surjective_only=True)) == 24

def test_hom_search_budget(data_dir, s3):
    presentation = read_presentation(os.path.join(data_dir, "free2.fp"))
    result = hom_search(presentation, s3, budget=5)
    assert not result.exhaustive
    assert len(result) < 36

def test_homomorphism_validation(s3):
    presentation = catalog.cyclic_presentation(2)
    with pytest.raises(InputError):
        HomomorphismSpec(presentation, s3, [Permutation.from_cycles(3, [[0, 1, 2]])])
    with pytest.raises(InputError):
        HomomorphismSpec(presentation, s3, [])
    hom = HomomorphismSpec(presentation, s3, [Permutation.from_cycles(3, [[0, 1]])])
    assert not hom.surjective
    assert hom.evaluate(Word([1, 1])).is_identity()

def test_injectivity_from_known_orders(s4):
    presentation = catalog.symmetric_presentation(4)
    hom = HomomorphismSpec(presentation, s4, list(s4.generators))
    assert hom.surjective
    assert hom.injective

def test_coset_table_from_a_homomorphism(s4):
    presentation = catalog.symmetric_presentation(4)
    hom = HomomorphismSpec(presentation, s4, list(s4.generators))
    stabilizer = PermGroup([Permutation.from_cycles(4, [[0, 1]]), Permutation.from_cycles(4, [[0, 1, 2]])], 4)
    table = coset_table_from_hom(presentation, hom, stabilizer)
    assert table.num_cosets == 4
    assert table.verify()
    assert relation_invariants(reidemeister_schreier(presentation, table)) == AbelianInvariants([2])

def test_coset_table_from_a_homomorphism_limits(s4):
    presentation = catalog.symmetric_presentation(4)
    hom = HomomorphismSpec(presentation, s4, list(s4.generators))
    with pytest.raises(LimitError):
        coset_table_from_hom(presentation, hom, PermGroup([], 4), max_degree=10)
    non_surjective = HomomorphismSpec(catalog.cyclic_presentation(2), s4, [Permutation.from_cycles(4, [[0, 1]])])
    with pytest.raises(InputError):
        coset_table_from_hom(catalog.cyclic_presentation(2), non_surjective, PermGroup([], 4))
